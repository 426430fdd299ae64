"""
How good is p(N) F(alpha) as an estimate for rank counts?
=========================================================

For compositions of weight N + |l|(|l|+1)/2 with rank l, the count is close to
p(N) F(pi |l| / sqrt(6N)) where F(a) = (1 + e^-a) / (1 + e^-a + e^-2a).
Here we tabulate the relative error for several N and l, compare V_d(N) with
its leading-order growth, and look at the Gaussian shape of V_d(m, N).

"""

import math

from concave_rank.asymptotics import (
    errors_to_csv,
    gaussian_ratio,
    rank_share,
    theorem1_error,
    vd_ratio_to_leading,
)

# %%
# Relative error of the uniform estimate. It shrinks slowly as N grows.
points = []
for N in (2_500, 10_000, 40_000):
    for ell in sorted({0, math.floor(N**0.25), math.floor(N**0.375), math.isqrt(N)}):
        points.append(theorem1_error(ell, N))
print(errors_to_csv(points))

# %%
# V_d(N) divided by 2^{-1/4} 3^{-5/4} N^{-3/4} exp(2 pi sqrt(N/6)).
for N in (200, 2_000, 20_000):
    print(N, round(vd_ratio_to_leading(N), 6))

# %%
# The share of compositions of N with rank m against the Gaussian profile.
N = 10_000
for m in (0, 3, 10, 20, 40):
    exact = rank_share(m, N)
    print(f"m={m:3d}  exact={exact:.6e}  gaussian={gaussian_ratio(m, N):.6e}")
