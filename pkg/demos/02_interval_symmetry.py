"""Small interval designs with odd indices are forced to be symmetric.

A multiset in [-1, 1] whose odd power sums p_1, p_3, ..., p_{2m-1} vanish is
an interval design for the odd index set T_m (the uniform odd moments are
zero).  With at most 2m points, that forces the multiset to equal its own
negation, and the certifier returns the explicit pairing.
"""

import random
from fractions import Fraction as F

from tmdesign import (
    Configuration,
    HypothesisError,
    certify_symmetry,
    is_symmetric,
    verify_interval_design,
)

# %%
# Verification reports the residuals, exactly
# -------------------------------------------
config = Configuration((F(1, 2), F(-1, 2), F(3, 4), F(-3, 4)))
report = verify_interval_design(config, 2)
print("residuals:", report.residuals, "verdict:", report.verdict)

# %%
# Certification produces a checkable pairing
# ------------------------------------------
cert = certify_symmetry(config, 2)
print("pairs:", cert.pairs, "fixed:", cert.fixed)
print("certificate checks out:", cert.check_multiset(config.points))

# %%
# A failed hypothesis is reported with the offending index
# ---------------------------------------------------------
try:
    certify_symmetry(Configuration((F(1), F(2, 3), F(-3, 4))), 2)
except HypothesisError as exc:
    print("rejected:", exc, "(index", exc.failing_index, ")")

# %%
# The contrapositive, sampled
# ---------------------------
# No asymmetric multiset with n <= 2m ever verifies: below, 2000 random
# rational multisets, none symmetric, none passing.
rng = random.Random(1)
counterexamples = 0
for _ in range(2000):
    m = rng.randint(1, 6)
    pts = tuple(F(rng.randint(-32, 32), 32) for _ in range(rng.randint(1, 2 * m)))
    config = Configuration(pts)
    if is_symmetric(config)[0]:
        continue
    if verify_interval_design(config, m).verdict:
        counterexamples += 1
print("counterexamples found:", counterexamples)
