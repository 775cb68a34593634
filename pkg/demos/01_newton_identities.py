"""Power sums and elementary symmetric polynomials, tied by Newton's identities.

Everything here is exact: inputs are rationals, so every printed value is a
true identity, not a float that happens to look like one.
"""

from fractions import Fraction as F

from tmdesign import (
    elementary_symmetric,
    newton_e_from_p,
    newton_p_from_e,
    odd_equivalence_check,
    power_sums,
)

# %%
# A small multiset and its two symmetric-function families
# ---------------------------------------------------------
xs = [F(1), F(2), F(3)]
p = power_sums(xs, 3)
e = elementary_symmetric(xs, 3)
print("multiset      ", xs)
print("power sums    ", p.entries)  # (6, 14, 36)
print("elem symmetric", e.entries)  # (1, 6, 11, 6): coeffs of (T-1)(T-2)(T-3)

# %%
# Each family determines the other
# --------------------------------
print("e from p      ", newton_e_from_p(p, 3).entries)
print("p from e      ", newton_p_from_e(e, 3, 3).entries)

# The e -> p direction keeps going past the multiset size: with e_j = 0 for
# j > n, the recursion yields arbitrarily high power sums without ever
# touching the points.
print("p_1..p_6 of {1/2, -1/2}:",
      newton_p_from_e(elementary_symmetric([F(1, 2), F(-1, 2)], 2), 2, 6).entries)

# %%
# Odd-index equivalence
# ---------------------
# When the multiset has at least 2m-1 elements, the first m odd power sums
# vanish exactly when the first m odd elementary symmetric values do.
sym = [F(3, 4), F(-3, 4), F(1, 4), F(-1, 4), F(0)]
check = odd_equivalence_check(sym, 2)
print("symmetric multiset  ", check)

skew = [F(1), F(1), F(-2)]  # p_1 = 0 but p_3 = -6
check = odd_equivalence_check(skew, 2)
print("asymmetric multiset ", check)
