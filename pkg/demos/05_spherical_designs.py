"""Spherical configurations with odd harmonic indices.

The regular (2m+1)-gon is the smallest non-antipodal T_m configuration; at
2m points and below, antipodality is forced and certified by projecting onto
each member point and reading the interval symmetry certificate.
"""

import math
from fractions import Fraction as F

from tmdesign import (
    PreconditionError,
    SphericalConfig,
    certify_antipodal,
    embed,
    escalation_diagnostic,
    harmonic_index_residual,
    is_antipodal,
    pad_with_antipodal_pairs_spherical,
    polygon_on_circle,
    project_to_line,
    verify_spherical_Tm,
)

# %%
# An exact antipodal cross in the plane
# -------------------------------------
cross = SphericalConfig(((F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1))))
report = verify_spherical_Tm(cross, 2)
print("cross verdict:", report.verdict, "(exact:", report.tolerance is None, ")")
print("antipodal pairing:", certify_antipodal(cross, 2).pairs)

# %%
# The pentagon: five points, T_2, not antipodal
# ---------------------------------------------
pentagon = polygon_on_circle(2)
print("pentagon T_2:", verify_spherical_Tm(pentagon, 2).verdict)
print("pentagon T_3:", verify_spherical_Tm(pentagon, 3).verdict,
      "(the t=5 pair sum is n^2 times",
      round(float(harmonic_index_residual(pentagon, 5)) / 25, 6), ")")
print("antipodal?", is_antipodal(pentagon)[0])
try:
    certify_antipodal(pentagon, 2)
except PreconditionError as exc:
    print("certification refused:", exc)

# %%
# Projection is the bridge to the interval world
# ----------------------------------------------
direction = pentagon.points[0]
projection = project_to_line(pentagon, direction)
print("projected multiset:", [round(float(x), 6) for x in projection.points])

# %%
# Padding and embedding preserve the verdicts
# -------------------------------------------
seven = pad_with_antipodal_pairs_spherical(
    pentagon, [(math.cos(0.8), math.sin(0.8))]
)
print("7 points on the circle:", verify_spherical_Tm(seven, 2).verdict,
      "| antipodal?", is_antipodal(seven)[0])
print("pentagon in d=4:", verify_spherical_Tm(embed(pentagon, 4), 2).verdict)

# %%
# Why a point without its antipode cannot survive all odd indices
# ---------------------------------------------------------------
# The odd moment sums at a member point converge to 1, so they cannot all
# vanish; watching them approach 1 makes the obstruction quantitative.
seq = escalation_diagnostic(pentagon, pentagon.points[0], 40)
for k in (1, 5, 10, 20, 40):
    print(f"  sum of <x,y>^{2 * k - 1}:", round(seq[k - 1], 9))
