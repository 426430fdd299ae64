"""Strongly concave compositions and exact counts of them by rank.

V_d(n) and V_d(m, n) are computed independently by

* brute-force enumeration of the compositions themselves,
* expanding generating functions (Andrews' identity, the product form, and
  the bivariate rank generating function),
* the finite partition-function sum and its telescoped Q1/Q2 regrouping.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from .number_theory import chi_minus3_at_odd, chi_minus12, partition_count
from .qseries import RankSeries, TruncatedSeries, poch_neg, rank_poch_product

__all__ = [
    "ENUMERATION_BOUND",
    "SCComposition",
    "RankTable",
    "iter_scc",
    "enumerate_scc",
    "rank_table_oracle",
    "vd_andrews",
    "vd_product",
    "v_concave",
    "rank_series",
    "vdm_genfunc",
    "vdm_prop1",
    "vdm_region",
    "vdm_telescoped",
    "vd_fast",
    "rank_column",
    "rank_table_prop1",
    "triangular",
]

ENUMERATION_BOUND = 40


def triangular(m: int) -> int:
    """|m|(|m|+1)/2, the least weight of a composition with rank m."""
    m = abs(m)
    return m * (m + 1) // 2


@dataclass(frozen=True, slots=True)
class SCComposition:
    """A strongly concave composition ``left + (center,) + right``.

    ``left`` is strictly decreasing, ``right`` strictly increasing, and every
    side part exceeds ``center``.
    """

    left: tuple[int, ...]
    center: int
    right: tuple[int, ...]

    def __post_init__(self):
        if self.center < 0:
            raise ValueError("center must be nonnegative")
        seq = self.left + (self.center,) + self.right
        k = len(self.left)
        if any(seq[i] <= seq[i + 1] for i in range(k)):
            raise ValueError(f"left side must strictly decrease to the center: {seq}")
        if any(seq[i] >= seq[i + 1] for i in range(k, len(seq) - 1)):
            raise ValueError(f"right side must strictly increase from the center: {seq}")

    @property
    def parts(self) -> tuple[int, ...]:
        return self.left + (self.center,) + self.right

    @property
    def weight(self) -> int:
        return sum(self.left) + self.center + sum(self.right)

    @property
    def rank(self) -> int:
        return len(self.right) - len(self.left)


def _distinct_partitions(n: int, min_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into distinct parts >= min_part, as increasing tuples."""
    if n == 0:
        yield ()
        return
    for first in range(min_part, n + 1):
        rest = n - first
        if rest == 0:
            yield (first,)
        elif rest > first:
            for tail in _distinct_partitions(rest, first + 1):
                yield (first,) + tail


def iter_scc(n: int) -> Iterator[SCComposition]:
    if n < 0 or n > ENUMERATION_BOUND:
        raise ValueError(f"enumeration supports 0 <= n <= {ENUMERATION_BOUND}")
    for center in range(n + 1):
        rest = n - center
        sides = [list(_distinct_partitions(w, center + 1)) for w in range(rest + 1)]
        for w in range(rest + 1):
            for lp in sides[w]:
                left = lp[::-1]
                for right in sides[rest - w]:
                    yield SCComposition(left, center, right)


def enumerate_scc(n: int) -> list[SCComposition]:
    """Every strongly concave composition of n, each exactly once."""
    return list(iter_scc(n))


class RankTable:
    """Exact counts V_d(m, n) for 0 <= n <= nmax.

    Only m >= 0 is stored; negative ranks are mirrored on lookup.
    """

    def __init__(self, nmax: int, counts: Mapping[tuple[int, int], int] | None = None):
        self.nmax = nmax
        self._counts: dict[tuple[int, int], int] = {}
        for (m, n), c in (counts or {}).items():
            if m >= 0 and c:
                self._counts[m, n] = int(c)

    @classmethod
    def from_signed_counts(cls, nmax: int, counts: Mapping[tuple[int, int], int]) -> RankTable:
        """Build from counts over both signs of m, rejecting asymmetric input."""
        for (m, n), c in counts.items():
            if c != counts.get((-m, n), 0):
                raise ValueError(f"asymmetric counts at (m={m}, n={n})")
        return cls(nmax, counts)

    def __getitem__(self, key: tuple[int, int]) -> int:
        m, n = key
        return self._counts.get((abs(m), n), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.nmax == other.nmax and self._counts == other._counts

    def __repr__(self) -> str:
        return f"RankTable(nmax={self.nmax}, entries={len(self._counts)})"

    def column(self, n: int) -> dict[int, int]:
        """Nonzero {m: V_d(m, n)} over both signs of m."""
        out = {}
        for (m, k), c in self._counts.items():
            if k == n:
                out[m] = c
                out[-m] = c
        return out

    def total(self, n: int) -> int:
        return sum(self.column(n).values())

    def rows(self) -> list[tuple[int, int, int]]:
        """(n, m, count) for every nonzero entry, sorted by (n, m)."""
        out = []
        for (m, n), c in self._counts.items():
            out.append((n, m, c))
            if m:
                out.append((n, -m, c))
        out.sort()
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "count"])
        w.writerows(self.rows())
        return buf.getvalue()

    def to_records(self) -> list[dict[str, int]]:
        return [{"n": n, "m": m, "count": c} for n, m, c in self.rows()]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_csv(cls, text: str) -> RankTable:
        reader = csv.DictReader(io.StringIO(text))
        counts = {(int(r["m"]), int(r["n"])): int(r["count"]) for r in reader}
        nmax = max((n for _, n in counts), default=0)
        return cls.from_signed_counts(nmax, counts)

    @classmethod
    def from_json(cls, text: str) -> RankTable:
        counts = {(r["m"], r["n"]): r["count"] for r in json.loads(text)}
        nmax = max((n for _, n in counts), default=0)
        return cls.from_signed_counts(nmax, counts)


def rank_table_oracle(nmax: int) -> RankTable:
    """Tally enumerated compositions by (rank, weight)."""
    counts: dict[tuple[int, int], int] = {}
    for n in range(nmax + 1):
        for lam in iter_scc(n):
            key = (lam.rank, n)
            counts[key] = counts.get(key, 0) + 1
    return RankTable.from_signed_counts(nmax, counts)


def _false_theta(nmax: int) -> TruncatedSeries:
    """sum_{n>=0} (-1)^n q^{n(n+1)/2}."""
    s = TruncatedSeries.zero(nmax)
    n = 0
    while n * (n + 1) // 2 <= nmax:
        s.coeffs[n * (n + 1) // 2] += (-1) ** n
        n += 1
    return s


def _chi12_theta(nmax: int) -> TruncatedSeries:
    """sum_{n>=0} (-12/n) q^{(n^2-1)/24}."""
    s = TruncatedSeries.zero(nmax)
    n = 1
    while (n * n - 1) // 24 <= nmax:
        chi = chi_minus12(n)
        if chi:
            s.coeffs[(n * n - 1) // 24] += chi
        n += 1
    return s


def vd_andrews(nmax: int) -> TruncatedSeries:
    """V_d(n) for n <= nmax from Andrews' theta-function identity."""
    d = poch_neg(1, nmax)
    return 2 * (d * d * _chi12_theta(nmax)) - _false_theta(nmax)


def vd_product(nmax: int) -> TruncatedSeries:
    """V_d(n) for n <= nmax from sum_c (-q^{c+1}; q)^2_inf q^c."""
    total = [0] * (nmax + 1)
    # squares[c] = (-q^{c+1}; q)^2, built downward from c = nmax where it is 1
    square = TruncatedSeries.one(nmax)
    for c in range(nmax, -1, -1):
        if c + 1 <= nmax:
            square = square.mul_binomial(c + 1).mul_binomial(c + 1)
        for k in range(c, nmax + 1):
            total[k] += square.coeffs[k - c]
    return TruncatedSeries(total, nmax)


def v_concave(nmax: int) -> TruncatedSeries:
    """V(n), concave compositions (weak sides), from sum_c q^c / (q^{c+1}; q)^2_inf."""
    total = [0] * (nmax + 1)
    inv = TruncatedSeries.one(nmax)
    for c in range(nmax, -1, -1):
        if c + 1 <= nmax:
            inv = inv.div_binomial(c + 1).div_binomial(c + 1)
        for k in range(c, nmax + 1):
            total[k] += inv.coeffs[k - c]
    return TruncatedSeries(total, nmax)


def rank_series(nmax: int) -> RankSeries:
    """Bivariate generating function sum V_d(m, n) x^m q^n up to q^nmax."""
    false_part = []
    n = 0
    while n * (n + 1) // 2 <= nmax:
        false_part.append((n * (n + 1) // 2, 2 * n + 1, -((-1) ** n)))
        n += 1
    theta_part = []
    n = 1
    while (n * n - 1) // 24 <= nmax:
        chi = chi_minus12(n)
        if chi:
            # chi is supported on odd n, so (n-1)/2 is an integer
            theta_part.append(((n * n - 1) // 24, (n - 1) // 2, chi))
        n += 1
    theta = RankSeries.from_terms(theta_part, nmax)
    return RankSeries.from_terms(false_part, nmax) + rank_poch_product(nmax) * theta


def vdm_genfunc(nmax: int) -> RankTable:
    series = rank_series(nmax)
    counts = {(m, n): c for n, row in enumerate(series.coeffs) for m, c in row.items()}
    return RankTable.from_signed_counts(nmax, counts)


def vdm_prop1(ell: int, N: int) -> int:
    """V_d(ell, N + |ell|(|ell|+1)/2) as a finite signed sum of partition numbers."""
    ell = abs(ell)
    total = 0
    n = 0
    while True:
        twice = 2 * n * (n + 1)
        if twice // 3 + n * ell > N:
            break
        chi = chi_minus3_at_odd(n)
        if chi:
            assert twice % 3 == 0, f"non-integral exponent at n={n}"
            total += chi * partition_count(N - twice // 3 - n * ell)
        n += 1
    assert total >= 0
    return total


def vdm_region(m: int, n: int) -> int:
    """V_d(m, n) = p(n - |m|(|m|+1)/2), valid only for n < |m|(|m|+5)/2 + 4."""
    a = abs(m)
    if not 0 <= n < a * (a + 5) // 2 + 4:
        raise ValueError(f"(m={m}, n={n}) is outside the closed-form region")
    return partition_count(n - triangular(a))


def vdm_telescoped(ell: int, N: int) -> int:
    """The same sum as :func:`vdm_prop1`, grouped in residue-class pairs."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    total = 0
    n = 0
    while True:
        q1 = 2 * n * (3 * n + 1) + 3 * n * ell
        if N - q1 < 0:
            break
        q2 = q1 + 8 * n + 4 + 2 * ell
        total += partition_count(N - q1) - partition_count(N - q2)
        n += 1
    return total


def rank_column(N: int) -> dict[int, int]:
    """{m: V_d(m, N)} for m >= 0 with nonzero count."""
    out = {}
    m = 0
    while triangular(m) <= N:
        out[m] = vdm_prop1(m, N - triangular(m))
        m += 1
    return out


def vd_fast(N: int) -> int:
    """V_d(N) by summing the rank column, using V_d(m, N) = V_d(-m, N)."""
    if N < 0:
        return 0
    col = rank_column(N)
    return col[0] + 2 * sum(c for m, c in col.items() if m)


def rank_table_prop1(nmax: int) -> RankTable:
    partition_count(nmax)
    counts = {}
    for n in range(nmax + 1):
        for m, c in rank_column(n).items():
            counts[m, n] = c
    return RankTable(nmax, counts)
