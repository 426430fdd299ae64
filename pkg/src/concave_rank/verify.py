"""Named verification suites, shared by the command line and the demos.

Each check yields a :class:`Check`; a suite passes when all of its checks do.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import mpmath

from . import asymptotics as asy
from . import concave as cc
from .number_theory import (
    B,
    chi_minus3_at_odd,
    chi_minus12,
    kronecker,
    partition_count,
    partition_enumerate,
    phat_mp,
)
from .qseries import inverse_euler, jacobi_triple_check

__all__ = ["Check", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def characters(nmax: int | None = None) -> Iterator[Check]:
    nmax = nmax or 10_000
    bad12 = [n for n in range(nmax + 1) if kronecker(-12, n) != chi_minus12(n)]
    yield Check("chi_minus12 == kronecker(-12, n)", not bad12, f"n <= {nmax}, first bad {bad12[:1]}")
    bad3 = [n for n in range(nmax + 1) if kronecker(-3, 2 * n + 1) != chi_minus3_at_odd(n)]
    yield Check("chi_minus3_at_odd == kronecker(-3, 2n+1)", not bad3, f"n <= {nmax}, first bad {bad3[:1]}")


def identities(nmax: int | None = None) -> Iterator[Check]:
    nmax = nmax or 30
    report = jacobi_triple_check(nmax)
    yield Check("Jacobi triple product", report.ok, f"order {nmax}, mismatch {report.mismatch}")
    andrews = cc.vd_andrews(nmax)
    product = cc.vd_product(nmax)
    fast = [cc.vd_fast(n) for n in range(nmax + 1)]
    yield Check("V_d(n): Andrews == product == fast", andrews == product and andrews.coeffs == fast, f"n <= {nmax}")
    gen = cc.vdm_genfunc(nmax)
    prop = cc.rank_table_prop1(nmax)
    tele_ok = all(
        cc.vdm_telescoped(m, n - cc.triangular(m)) == prop[m, n]
        for n in range(nmax + 1)
        for m in range(0, n + 2)
    )
    yield Check("V_d(m,n): genfunc == prop1 == telescoped", gen == prop and tele_ok, f"n <= {nmax}")
    p = inverse_euler(nmax)
    yield Check("1/(q;q) coefficients == p(n)", p.coeffs == [partition_count(k) for k in range(nmax + 1)])


def oracle(nmax: int | None = None) -> Iterator[Check]:
    nmax = min(nmax or 30, cc.ENUMERATION_BOUND)
    table = cc.rank_table_oracle(nmax)
    yield Check(
        "enumeration == Andrews series",
        [table.total(n) for n in range(nmax + 1)] == cc.vd_andrews(nmax).coeffs,
        f"n <= {nmax}",
    )
    yield Check("enumeration == rank generating function", table == cc.vdm_genfunc(nmax), f"n <= {nmax}")
    k = min(nmax, 50)
    yield Check(
        "partition recurrence == enumeration",
        all(partition_count(n) == partition_enumerate(n) for n in range(k + 1)),
        f"n <= {k}",
    )


def lemma1_residual(n: int) -> float:
    dps = 30 + int(B * math.sqrt(n) / math.log(10)) + 10
    with mpmath.workdps(dps):
        diff = mpmath.mpf(partition_count(n)) - phat_mp(mpmath.mpf(n) - mpmath.mpf(1) / 24, dps)
        return float(abs(diff) * n * mpmath.exp(-B * mpmath.sqrt(n) / 2))


def asymptotic(nmax: int | None = None) -> Iterator[Check]:
    N = nmax or 10_000
    worst = max(lemma1_residual(n) for n in (100, 200, 500, 1000, 2000, 5000))
    yield Check("Hardy-Ramanujan residual bounded", worst <= 10, f"max {worst:.4g} <= 10")
    ells = sorted({0, int(N**0.25), int(N**0.375), math.isqrt(N)})
    err = max(asy.theorem1_error(l, N).rel_err for l in ells)
    yield Check("uniform estimate p(N)F(alpha)", err <= 0.15, f"N={N}, max rel err {err:.4g} <= 0.15")
    ratio = asy.vd_ratio_to_leading(N)
    yield Check("V_d(N) vs leading term", 0.9 <= ratio <= 1.1, f"N={N}, ratio {ratio:.6f}")
    ms = sorted({0, int(N**0.125), int(N**0.25)})
    gerr = max(abs(asy.rank_share(m, N) / asy.gaussian_ratio(m, N) - 1) for m in ms)
    yield Check("Gaussian rank share", gerr <= 0.10, f"N={N}, max rel err {gerr:.4g} <= 0.10")
    devs = [abs(asy.lemma4_f(a, 0) - 1) for a in (1e-2, 1e-3, 1e-4)]
    yield Check("f(alpha) -> 1", devs[0] > devs[1] > devs[2] and devs[2] < 0.05, f"deviations {devs}")


def distribution(nmax: int | None = None) -> Iterator[Check]:
    N = nmax or 3000
    curve = asy.empirical_rank_cdf(N)
    mono = all(a <= b for a, b in zip(curve.empirical, curve.empirical[1:]))
    yield Check("empirical CDF non-decreasing", mono, f"N={N}")
    d = curve.sup_distance()
    yield Check("sup |Psi_N - Phi| on [-4, 4]", d <= 0.08, f"N={N}, {d:.4g} <= 0.08")


SUITES: dict[str, Callable[[int | None], Iterator[Check]]] = {
    "characters": characters,
    "identities": identities,
    "oracle": oracle,
    "asymptotic": asymptotic,
    "distribution": distribution,
}


def run_suite(name: str, nmax: int | None = None) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(nmax)]
    return list(SUITES[name](nmax))
