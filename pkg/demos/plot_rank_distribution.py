"""
The rank distribution approaches the standard normal
====================================================

Scaling the rank by (6N/pi^2)^{1/4} gives a distribution whose CDF tends to
the standard normal CDF. We compute the exact empirical CDF at a few weights
and plot it when matplotlib is available.

"""

from concave_rank.asymptotics import empirical_rank_cdf

# %%
curves = {N: empirical_rank_cdf(N) for N in (30, 300, 3000, 30000)}
for N, curve in curves.items():
    print(f"N={N:6d}  sup |Psi_N - Phi| = {curve.sup_distance():.4f}")

# %%
# Most of the remaining distance sits at x = 0: the CDF jumps by the share of
# rank-0 compositions, about (24N)^{-1/4}.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for N, curve in curves.items():
        ax.step(curve.xs, curve.empirical, where="post", label=f"N={N}")
    ax.plot(curves[3000].xs, curves[3000].gaussian, "k--", label="normal CDF")
    ax.set_xlabel("rank / (6N/pi^2)^(1/4)")
    ax.legend()
    fig.savefig("rank_distribution.png", dpi=120)
    print("wrote rank_distribution.png")
