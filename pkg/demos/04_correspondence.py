"""
Comparing the two sides
=======================

After e^{iu} = -q both partition functions are q-series.  Their lowest terms
should agree once the prefactors (-i)^(-K.beta) and (-q)^(K.beta/2) are
included, with K.beta = 2g - 5 - k1 - k2.
"""

from gwdt.correspondence import check, grid, k_dot_beta, lhs_series, rhs_series
from gwdt.series import HalfExp, mcmahon

print("M(q) =", mcmahon(HalfExp(10)).render())

g, k1, k2 = 2, -2, -2
print("K.beta =", k_dot_beta(g, k1, k2))
print("GW side:", lhs_series(g, k1, k2, trunc=HalfExp(5)).render())
print("DT side:", rhs_series(g, k1, k2).render())
print(check(g, k1, k2, seed=0).render())

reports = [check(*p) for p in grid(3, -4, -2)]
print(f"{sum(r.passed for r in reports)}/{len(reports)} grid points agree")
