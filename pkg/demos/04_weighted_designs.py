"""Weighted interval designs at the evenness boundary.

A weighted design for T_m with at most m nonzero support points must be an
even function.  Both constructions below use m+1 support points for the
index set T_m, so they sit exactly one point past the forcing bound, and
neither is even.
"""

from fractions import Fraction as F

from tmdesign import (
    WeightedConfiguration,
    binom_alternating_sum,
    binomial_weighted_design,
    certify_weighted_symmetry,
    is_symmetric,
    polygon_weighted_design,
    verify_weighted_design,
)

# %%
# The rational construction, driven by an alternating binomial identity
# ---------------------------------------------------------------------
# sum_j (-1)^j j^(2s) C(2n, n-j) vanishes for 1 <= s < n, which makes the
# odd residuals of the following weights collapse to zero exactly.
n = 4
print("alternating sums, n=4:", [binom_alternating_sum(n, s) for s in range(n)])

design = binomial_weighted_design(n)
print("support:", design.support)
print("weights:", design.weights)
report = verify_weighted_design(design, n - 1)
print("T_3 residuals:", report.residuals, "->", report.verdict)
sharp = verify_weighted_design(design, n)
print("index", 2 * n - 1, "residual:", sharp.residuals[-1], "-> sharp")

# %%
# The cosine construction
# -----------------------
# Weight 2 on the n distinct cosines of a regular (2n+1)-gon, weight 1 at
# the vertex 1.  Support n+1, all odd residuals through 2n-1 at rounding
# level.
pg = polygon_weighted_design(3)
print("cosine support:", [round(x, 15) for x in pg.support])
report = verify_weighted_design(pg, 2)
print("T_2 residuals:", [f"{float(r):.1e}" for r in report.residuals],
      "->", report.verdict)
print("even function?", is_symmetric(pg)[0])

# %%
# At or below the bound, evenness is certified
# --------------------------------------------
w = WeightedConfiguration((F(1, 2), F(-1, 2), F(0)), (F(5), F(5), F(3)))
cert = certify_weighted_symmetry(w, 4)
print("pairs:", cert.pairs, "fixed (weight at 0 unconstrained):", cert.fixed)
