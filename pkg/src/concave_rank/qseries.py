"""Exact truncated q-series and bivariate (x, q) rank series.

Univariate series are dense lists of Python ints. Rank series keep, for each
power of q, a sparse ``{x_exponent: coefficient}`` dict with zeros removed.
Infinite products are truncated by the q-degree of each factor, so every
result is exact modulo q^(order+1).
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .number_theory import partition_count

__all__ = [
    "TruncatedSeries",
    "RankSeries",
    "series_arith",
    "poch_neg",
    "inverse_euler",
    "euler_product",
    "rank_poch_product",
    "jacobi_triple_check",
    "JacobiReport",
    "x_support_bound",
]


class TruncatedSeries:
    """Power series in q with integer coefficients, known modulo q^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: int = 1) -> TruncatedSeries:
        s = cls.zero(order)
        if 0 <= degree <= order:
            s.coeffs[degree] = coeff
        return s

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other * a for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def mul_binomial(self, degree: int, coeff: int = 1) -> TruncatedSeries:
        """Multiply by (1 + coeff * q^degree) in O(order)."""
        c = list(self.coeffs)
        if degree <= self.order:
            for k in range(self.order, degree - 1, -1):
                c[k] += coeff * c[k - degree]
        return TruncatedSeries(c, self.order)

    def div_binomial(self, degree: int, coeff: int = -1) -> TruncatedSeries:
        """Divide by (1 + coeff * q^degree), degree >= 1, in O(order)."""
        if degree < 1:
            raise ValueError("degree must be positive")
        c = list(self.coeffs)
        for k in range(degree, self.order + 1):
            c[k] -= coeff * c[k - degree]
        return TruncatedSeries(c, self.order)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by q^k, k >= 0."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries([0] * k + self.coeffs[: max(0, self.order + 1 - k)], self.order)

    def restrict(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def to_json(self) -> str:
        return json.dumps(self.coeffs)

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        return cls(json.loads(text))


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poch_neg(shift: int, order: int) -> TruncatedSeries:
    """(-q^shift; q)_inf = prod_{j>=0} (1 + q^(shift+j)) modulo q^(order+1)."""
    if shift < 1:
        raise ValueError("shift must be >= 1")
    s = TruncatedSeries.one(order)
    for d in range(shift, order + 1):
        s = s.mul_binomial(d)
    return s


def euler_product(order: int) -> TruncatedSeries:
    """(q; q)_inf modulo q^(order+1)."""
    s = TruncatedSeries.one(order)
    for d in range(1, order + 1):
        s = s.mul_binomial(d, -1)
    return s


def inverse_euler(order: int) -> TruncatedSeries:
    """1 / (q; q)_inf, i.e. sum p(k) q^k, read from the partition cache."""
    return TruncatedSeries([partition_count(k) for k in range(order + 1)], order)


def x_support_bound(n: int) -> int:
    """Coarse bound on |x-exponent| allowed at q^n in a RankSeries."""
    return math.isqrt(2 * n - 1) + 1 + math.isqrt(24 * n) + 1 + 2 if n else 3


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    order: int
    mismatch: tuple[int, int] | None = None  # (q-power n, x-exponent m)
    lhs: int | None = None
    rhs: int | None = None

    def __bool__(self) -> bool:
        return self.ok


class RankSeries:
    """Series sum_n (sum_m c[n][m] x^m) q^n truncated at q^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Mapping[int, int]], order: int | None = None):
        rows = [{m: int(c) for m, c in row.items() if c} for row in coeffs]
        if order is None:
            order = len(rows) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        rows = rows[: order + 1]
        rows.extend({} for _ in range(order + 1 - len(rows)))
        self.order = order
        self.coeffs = rows

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]], order: int) -> RankSeries:
        """Build from (q-power, x-exponent, coefficient) triples; drops n > order."""
        rows: list[dict[int, int]] = [{} for _ in range(order + 1)]
        for n, m, c in terms:
            if 0 <= n <= order:
                rows[n][m] = rows[n].get(m, 0) + c
        return cls(rows, order)

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, m = key
        return self.coeffs[n].get(m, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"RankSeries(order={self.order}, q0={self.coeffs[0]})"

    def _check(self, other: RankSeries) -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: RankSeries) -> RankSeries:
        self._check(other)
        rows = []
        for a, b in zip(self.coeffs, other.coeffs):
            row = dict(a)
            for m, c in b.items():
                row[m] = row.get(m, 0) + c
            rows.append(row)
        return RankSeries(rows, self.order)

    def __neg__(self) -> RankSeries:
        return RankSeries([{m: -c for m, c in row.items()} for row in self.coeffs], self.order)

    def __sub__(self, other: RankSeries) -> RankSeries:
        return self + (-other)

    def __mul__(self, other: RankSeries) -> RankSeries:
        self._check(other)
        n = self.order
        out: list[dict[int, int]] = [{} for _ in range(n + 1)]
        other_rows = [(j, row) for j, row in enumerate(other.coeffs) if row]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in other_rows:
                if i + j > n:
                    break
                target = out[i + j]
                for ma, ca in a.items():
                    for mb, cb in b.items():
                        k = ma + mb
                        target[k] = target.get(k, 0) + ca * cb
        return RankSeries(out, n)

    def mul_binomial(self, q_degree: int, x_exp: int) -> RankSeries:
        """Multiply by (1 + x^x_exp q^q_degree) in place-free O(size)."""
        rows = [dict(r) for r in self.coeffs]
        if q_degree == 0:
            for k, src in enumerate(self.coeffs):
                for m, c in src.items():
                    rows[k][m + x_exp] = rows[k].get(m + x_exp, 0) + c
        else:
            for k in range(self.order, q_degree - 1, -1):
                src = self.coeffs[k - q_degree]
                row = rows[k]
                for m, c in src.items():
                    row[m + x_exp] = row.get(m + x_exp, 0) + c
        return RankSeries(rows, self.order)

    def at_x_equals_one(self) -> TruncatedSeries:
        return TruncatedSeries([sum(row.values()) for row in self.coeffs], self.order)

    def check_support(self) -> None:
        for n, row in enumerate(self.coeffs):
            bound = x_support_bound(n)
            for m in row:
                if abs(m) > bound:
                    raise AssertionError(
                        f"x-exponent {m} at q^{n} exceeds support bound {bound}"
                    )

    def to_records(self) -> list[dict]:
        return [
            {"n": n, "terms": [{"m": m, "c": row[m]} for m in sorted(row)]}
            for n, row in enumerate(self.coeffs)
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_json(cls, text: str) -> RankSeries:
        records = json.loads(text)
        order = max((r["n"] for r in records), default=0)
        return cls.from_terms(
            ((r["n"], t["m"], t["c"]) for r in records for t in r["terms"]), order
        )


def rank_poch_product(order: int) -> RankSeries:
    """(-x; q)_inf (-x^{-1} q; q)_inf truncated at q^order."""
    s = RankSeries([{0: 1}], order).mul_binomial(0, 1)
    for j in range(1, order + 1):
        s = s.mul_binomial(j, 1).mul_binomial(j, -1)
    s.check_support()
    return s


def _jacobi_lhs(order: int) -> RankSeries:
    # (q;q)_inf (-xq;q)_inf (-x^{-1};q)_inf; the j = 0 factor of the last is (1 + x^{-1}).
    s = RankSeries([{0: 1}], order).mul_binomial(0, -1)
    for j in range(1, order + 1):
        s = s.mul_binomial(j, 1).mul_binomial(j, -1)
    euler = euler_product(order)
    return RankSeries([{0: c} for c in euler.coeffs], order) * s


def _jacobi_rhs(order: int) -> RankSeries:
    terms = []
    n = 0
    while n * (n + 1) // 2 <= order:
        terms.append((n * (n + 1) // 2, n, 1))
        # negative partner -n-1 has the same q-exponent
        terms.append((n * (n + 1) // 2, -n - 1, 1))
        n += 1
    return RankSeries.from_terms(terms, order)


def jacobi_triple_check(order: int) -> JacobiReport:
    """Compare both sides of the Jacobi triple product up to q^order."""
    lhs, rhs = _jacobi_lhs(order), _jacobi_rhs(order)
    for n in range(order + 1):
        a, b = lhs.coeffs[n], rhs.coeffs[n]
        if a != b:
            m = min(k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0))
            return JacobiReport(False, order, (n, m), a.get(m, 0), b.get(m, 0))
    return JacobiReport(True, order)
