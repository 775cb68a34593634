"""The smallest asymmetric interval design, constructed and certified exactly.

Symmetry is forced only up to 2m points; with 2m+1 points there are
asymmetric designs, and this construction produces one: perturb the monic
polynomial with roots +-(2k-1)/(2m) by a small rational epsilon, shift the
2m perturbed roots by -1/(2m), and append the point 1.  The m residuals are
computed from the perturbed polynomial's coefficients alone, so each one is
the exact rational 0 even though the points themselves are irrational.
"""

from fractions import Fraction as F

from tmdesign import (
    add_zero,
    base_roots,
    choose_epsilon,
    is_symmetric,
    pad_with_antipodal_pairs,
    perturbed_interval_design,
    verify_interval_design,
)

# %%
# The construction at m = 2
# -------------------------
m = 2
print("base roots:    ", base_roots(m))
print("chosen epsilon:", choose_epsilon(m))

result = perturbed_interval_design(m)
print("g coefficients:", result.g.coeffs)
print("points:        ", [round(float(x), 12) for x in result.points.points])
print("certificate:   ", result.certificate, "(exact rationals)")
print("symmetric?     ", is_symmetric(result.points)[0], "(1 in X, -1 not in X)")

# %%
# Any size above 2m follows by padding
# ------------------------------------
# 2m+2: append 0; beyond that: append antipodal pairs.  Neither changes any
# odd power sum.
six = add_zero(result.points)
eight = pad_with_antipodal_pairs(six, [F(1, 3)])
for config in (six, eight):
    report = verify_interval_design(config, m)
    print(len(config.points), "points:",
          "verdict", report.verdict, "| symmetric?", is_symmetric(config)[0])

# %%
# The certificate survives scrutiny at every m
# --------------------------------------------
for m in range(1, 8):
    r = perturbed_interval_design(m)
    float_residual = max(
        abs(sum(float(x) ** (2 * k - 1) for x in r.points.points))
        for k in range(1, m + 1)
    )
    print(f"m={m}: exact residuals {set(r.certificate)}, "
          f"float cross-check {float_residual:.2e}")
