"""Kronecker symbols, the two small characters, and the partition function.

p(n) is computed exactly with Euler's pentagonal-number recurrence and kept
in a growable cache. The Hardy-Ramanujan style approximations come in three
flavours: plain binary64, log-scaled (for arguments where ``exp`` would
overflow) and mpmath (for residuals that need more than 53 bits).
"""

from __future__ import annotations

import bisect
import math
import threading

import mpmath

__all__ = [
    "B",
    "MAX_PARTITION_INDEX",
    "ENUMERATION_BOUND",
    "PartitionCache",
    "default_cache",
    "kronecker",
    "chi_minus3_at_odd",
    "chi_minus12",
    "partition_count",
    "partition_enumerate",
    "hardy_ramanujan_phat",
    "log_phat",
    "phat_mp",
    "partition_ratio_approx",
]

B = 2 * math.pi / math.sqrt(6)

# p(2e6) has ~1550 digits and needs ~2e9 additions; refuse rather than hang.
MAX_PARTITION_INDEX = 2_000_000
ENUMERATION_BOUND = 60


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers a and n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = (n & -n).bit_length() - 1
    if twos:
        if a % 2 == 0:
            return 0
        n >>= twos
        if twos % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol by reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


_CHI_M3_ODD = (1, 0, -1)
_CHI_M12 = (0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1)


def chi_minus3_at_odd(n: int) -> int:
    """(-3 / 2n+1) from the residue of n mod 3."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _CHI_M3_ODD[n % 3]


def chi_minus12(n: int) -> int:
    """(-12 / n) from the residue of n mod 12."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _CHI_M12[n % 12]


class PartitionCache:
    """Exact values p(0), p(1), ..., grown on demand.

    Extension takes a lock, so a shared cache can be used from several
    threads; reads of already-filled entries never block.
    """

    def __init__(self, capacity: int = 0):
        self.values: list[int] = [1]
        self._plus: list[int] = []
        self._minus: list[int] = []
        self._pent_limit = 0
        self._lock = threading.Lock()
        if capacity:
            self.extend(capacity)

    @property
    def capacity(self) -> int:
        return len(self.values) - 1

    def _grow_pentagonals(self, limit: int) -> None:
        plus, minus = [], []
        k = 1
        while True:
            a = k * (3 * k - 1) // 2
            if a > limit:
                break
            target = plus if k % 2 else minus
            target.append(a)
            b = a + k
            if b <= limit:
                target.append(b)
            k += 1
        self._plus, self._minus, self._pent_limit = plus, minus, limit

    def extend(self, n: int) -> None:
        if n <= self.capacity:
            return
        if n > MAX_PARTITION_INDEX:
            raise OverflowError(
                f"p({n}) exceeds the supported index {MAX_PARTITION_INDEX}"
            )
        with self._lock:
            if n <= self.capacity:
                return
            if n > self._pent_limit:
                self._grow_pentagonals(max(n, 2 * self._pent_limit))
            v = self.values
            plus, minus = self._plus, self._minus
            for m in range(len(v), n + 1):
                ip = bisect.bisect_right(plus, m)
                im = bisect.bisect_right(minus, m)
                v.append(
                    sum([v[m - g] for g in plus[:ip]])
                    - sum([v[m - g] for g in minus[:im]])
                )

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.capacity:
            self.extend(n)
        return self.values[n]


default_cache = PartitionCache()


def partition_count(n: int, cache: PartitionCache | None = None) -> int:
    """p(n), with p(n) = 0 for negative n."""
    return (default_cache if cache is None else cache)[n]


def partition_enumerate(n: int) -> int:
    """Count partitions of n by generating every one of them.

    Slow on purpose; this is the reference the recurrence is checked against.
    """
    if n < 0 or n > ENUMERATION_BOUND:
        raise ValueError(f"enumeration supports 0 <= n <= {ENUMERATION_BOUND}")
    count = 0
    # Each partition as a non-increasing list of parts, built depth-first.
    stack = [(n, n)]
    while stack:
        remaining, largest = stack.pop()
        if remaining == 0:
            count += 1
            continue
        for part in range(min(remaining, largest), 0, -1):
            stack.append((remaining - part, part))
    return count


def _check_phat_domain(x: float) -> None:
    if not x > 1 / B**2:
        raise ValueError(f"phat needs x > 1/B^2 = {1 / B**2:.6f}, got {x}")


def hardy_ramanujan_phat(x: float) -> float:
    """e^{B sqrt x} / (4 sqrt3 x) * (1 - 1/(B sqrt x)) in binary64.

    Overflows for x beyond roughly 6e4; use :func:`log_phat` there.
    """
    _check_phat_domain(x)
    s = B * math.sqrt(x)
    return math.exp(s) / (4 * math.sqrt(3) * x) * (1 - 1 / s)


def log_phat(x: float) -> float:
    """Natural log of :func:`hardy_ramanujan_phat`, safe for any large x."""
    _check_phat_domain(x)
    s = B * math.sqrt(x)
    return s - math.log(4 * math.sqrt(3) * x) + math.log1p(-1 / s)


def phat_mp(x, dps: int = 50) -> mpmath.mpf:
    """phat evaluated in mpmath at ``dps`` decimal digits."""
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        if not x > 1 / mpmath.mpf(B) ** 2:
            raise ValueError("phat needs x > 1/B^2")
        b = 2 * mpmath.pi / mpmath.sqrt(6)
        s = b * mpmath.sqrt(x)
        return +(mpmath.exp(s) / (4 * mpmath.sqrt(3) * x) * (1 - 1 / s))


def partition_ratio_approx(X: float, r: float) -> float:
    """Main factor e^{B r / (2 sqrt X)} of p(X + r) / p(X)."""
    if X <= 0:
        raise ValueError("X must be positive")
    return math.exp(B * r / (2 * math.sqrt(X)))
