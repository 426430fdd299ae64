"""
Counting strongly concave compositions three ways
=================================================

A strongly concave composition of n strictly decreases to a central part and
then strictly increases, e.g. 5 + 2 + 0 + 1 + 4. Its rank is the number of
parts after the centre minus the number before it.

"""

from concave_rank import (
    enumerate_scc,
    rank_table_oracle,
    vd_andrews,
    vd_fast,
    vd_product,
    vdm_genfunc,
    vdm_prop1,
)

# %%
# List the compositions of 4 together with their ranks.
for lam in enumerate_scc(4):
    print(lam.parts, "rank", lam.rank)

# %%
# The total counts V_d(n) from the series identities, from the product form
# and from the finite partition-number sum all agree with the enumeration.
nmax = 25
series = vd_andrews(nmax)
print("theta identity :", series.coeffs)
print("product form   :", vd_product(nmax).coeffs)
print("partition sums :", [vd_fast(n) for n in range(nmax + 1)])
print("enumeration    :", [len(enumerate_scc(n)) for n in range(nmax + 1)])

# %%
# Counts by rank. The bivariate generating function and the enumeration give
# the same table; a single column can also be read off directly as a sum of
# partition numbers, which scales to n in the tens of thousands.
table = vdm_genfunc(12)
assert table == rank_table_oracle(12)
print({m: table[m, 12] for m in range(-5, 6)})
print("V_d(0, 10000) has", len(str(vdm_prop1(0, 10_000))), "digits")
