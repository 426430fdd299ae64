"""Floating-point asymptotics for V_d(m, n) and the rank distribution.

Exact counts reach thousands of digits at desk-scale N, so every comparison
against an asymptotic formula happens in log space via :class:`LogScaled`.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass

from .concave import rank_column, triangular, vd_fast, vdm_prop1
from .number_theory import partition_count

__all__ = [
    "EXACT_BUDGET",
    "LEADING_CONSTANT",
    "LogScaled",
    "DistributionCurve",
    "ErrorPoint",
    "profile_F",
    "theorem1_estimate",
    "theorem1_error",
    "vd_leading",
    "gaussian_ratio",
    "normal_cdf",
    "empirical_rank_cdf",
    "sup_distance",
    "lemma4_f",
    "rank_scale",
    "errors_to_csv",
]

EXACT_BUDGET = 40_000
LEADING_CONSTANT = 2 ** -0.25 * 3 ** -1.25


@dataclass(frozen=True)
class LogScaled:
    """A nonnegative real stored as its natural log (``zero`` marks 0)."""

    log_value: float = 0.0
    zero: bool = False

    def __post_init__(self):
        if not self.zero and not math.isfinite(self.log_value):
            raise ValueError("log_value must be finite for a nonzero value")

    @classmethod
    def from_int(cls, n: int) -> LogScaled:
        if n < 0:
            raise ValueError("LogScaled holds nonnegative values only")
        if n == 0:
            return cls(0.0, zero=True)
        # math.log is exact-to-rounding on arbitrarily large ints
        return cls(math.log(n))

    @classmethod
    def from_float(cls, x: float) -> LogScaled:
        if x < 0:
            raise ValueError("LogScaled holds nonnegative values only")
        return cls(0.0, zero=True) if x == 0 else cls(math.log(x))

    def __mul__(self, other: LogScaled) -> LogScaled:
        if self.zero or other.zero:
            return LogScaled(0.0, zero=True)
        return LogScaled(self.log_value + other.log_value)

    def __truediv__(self, other: LogScaled) -> LogScaled:
        if other.zero:
            raise ZeroDivisionError("division by LogScaled zero")
        if self.zero:
            return self
        return LogScaled(self.log_value - other.log_value)

    def ratio(self, other: LogScaled) -> float:
        """self / other as a float; fine whenever the ratio itself is moderate."""
        return math.exp((self / other).log_value) if not self.zero else 0.0

    def to_float(self) -> float:
        return 0.0 if self.zero else math.exp(self.log_value)

    def format(self, digits: int = 12) -> str:
        """Scientific notation that never overflows, e.g. ``1.23e+4567``."""
        if self.zero:
            return "0"
        l10 = self.log_value / math.log(10)
        exp = math.floor(l10)
        mant = 10 ** (l10 - exp)
        if round(mant, digits - 1) >= 10:
            mant, exp = mant / 10, exp + 1
        return f"{mant:.{digits - 1}f}e{exp:+d}"


def profile_F(alpha: float) -> float:
    """(1 + e^-a) / (1 + e^-a + e^-2a), rising from 2/3 at 0 to 1."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    t = math.exp(-alpha)
    return (1 + t) / (1 + t + t * t)


def theorem1_estimate(ell: int, N: int, p_of_N: int | None = None) -> LogScaled:
    """p(N) * F(pi |ell| / sqrt(6N)) in log space."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if p_of_N is None:
        p_of_N = partition_count(N)
    alpha = math.pi * abs(ell) / math.sqrt(6 * N)
    return LogScaled.from_int(p_of_N) * LogScaled.from_float(profile_F(alpha))


@dataclass(frozen=True)
class ErrorPoint:
    N: int
    ell: int
    exact_log: float
    estimate_log: float
    rel_err: float


def theorem1_error(ell: int, N: int) -> ErrorPoint:
    """Compare V_d(ell, N + |ell|(|ell|+1)/2) with p(N) F(...)."""
    exact = LogScaled.from_int(vdm_prop1(ell, N))
    est = theorem1_estimate(ell, N)
    return ErrorPoint(N, ell, exact.log_value, est.log_value, abs(exact.ratio(est) - 1))


def errors_to_csv(points: Sequence[ErrorPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "ell", "exact_log", "estimate_log", "rel_err"])
    for p in points:
        w.writerow([p.N, p.ell, f"{p.exact_log:.12g}", f"{p.estimate_log:.12g}", f"{p.rel_err:.12g}"])
    return buf.getvalue()


def vd_leading(N: int) -> LogScaled:
    """Leading term 2^{-1/4} 3^{-5/4} N^{-3/4} e^{2 pi sqrt(N/6)} of V_d(N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return LogScaled(
        math.log(LEADING_CONSTANT) - 0.75 * math.log(N) + 2 * math.pi * math.sqrt(N / 6)
    )


def gaussian_ratio(m: int, N: int) -> float:
    """(24N)^{-1/4} exp(-pi m^2 / sqrt(24N)), approximating V_d(m, N) / V_d(N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    s = math.sqrt(24 * N)
    return math.exp(-math.pi * m * m / s) / math.sqrt(s)


def normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2))


def rank_scale(N: int) -> float:
    """(6N / pi^2)^{1/4}: ranks divided by this converge to N(0, 1)."""
    return (6 * N / math.pi**2) ** 0.25


@dataclass
class DistributionCurve:
    N: int
    xs: list[float]
    empirical: list[float]
    gaussian: list[float]

    def sup_distance(self) -> float:
        return max(abs(e - g) for e, g in zip(self.empirical, self.gaussian))

    def records(self) -> list[dict[str, float]]:
        return [
            {"x": x, "empirical": e, "gaussian": g, "abs_diff": abs(e - g)}
            for x, e, g in zip(self.xs, self.empirical, self.gaussian)
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "empirical", "gaussian", "abs_diff"])
        for r in self.records():
            w.writerow([f"{r[k]:.12g}" for k in ("x", "empirical", "gaussian", "abs_diff")])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.records())


def grid(lo: float = -4.0, hi: float = 4.0, step: float = 0.1) -> list[float]:
    count = round((hi - lo) / step)
    return [round(lo + i * step, 12) for i in range(count + 1)]


def empirical_rank_cdf(N: int, xs: Sequence[float] | None = None) -> DistributionCurve:
    """Share of compositions of N whose rank is at most rank_scale(N) * x."""
    if N < 1 or N > EXACT_BUDGET:
        raise ValueError(f"N must lie in [1, {EXACT_BUDGET}]")
    xs = grid() if xs is None else list(xs)
    half = rank_column(N)
    mmax = max(half)
    # cumulative[i] = sum of V_d(m, N) for m <= i - mmax
    cumulative = []
    running = 0
    for m in range(-mmax, mmax + 1):
        running += half[abs(m)]
        cumulative.append(running)
    total = running
    scale = rank_scale(N)
    emp = []
    for x in xs:
        cut = math.floor(scale * x)
        if cut < -mmax:
            emp.append(0.0)
        elif cut >= mmax:
            emp.append(1.0)
        else:
            emp.append(cumulative[cut + mmax] / total)
    return DistributionCurve(N, xs, emp, [normal_cdf(x) for x in xs])


def sup_distance(N: int, xs: Sequence[float] | None = None) -> float:
    return empirical_rank_cdf(N, xs).sup_distance()


def lemma4_f(alpha: float, ell: int) -> float:
    """alpha * sum_{n>=0} (4n + ell) exp(-2 alpha n^2 - alpha n ell), summed directly."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    total = 0.0
    prev = 0.0
    n = 0
    while True:
        term = (4 * n + ell) * math.exp(-2 * alpha * n * n - alpha * n * ell)
        total += term
        # the summand is unimodal; stop once it is falling and negligible
        if n > 0 and term < prev and term < 1e-18 * total:
            break
        prev = term
        n += 1
    return alpha * total


def vd_ratio_to_leading(N: int) -> float:
    return LogScaled.from_int(vd_fast(N)).ratio(vd_leading(N))


def rank_share(m: int, N: int) -> float:
    """Exact V_d(m, N) / V_d(N) as a float."""
    return vdm_prop1(m, N - triangular(m)) / vd_fast(N)
