"""Equal-weight quadrature for the arcsine measure, checked moment by moment.

The nodes cos((2k-1)pi/(2n)), k = 1..n, integrate polynomials of degree up
to 2n-1 exactly against dx/(pi*sqrt(1-x^2)) on [-1, 1].  The node set is
built exactly mirror-symmetric, so every odd moment cancels to 0.0 in
floating point, not merely to rounding noise.
"""

from tmdesign import chebyshev_gauss_check, chebyshev_gauss_nodes

# %%
# The rule at n = 4
# -----------------
report = chebyshev_gauss_check(4, 7)
print("nodes:", [round(x, 15) for x in report.nodes])
for entry in report.entries:
    print(f"  s={entry.s}: node mean {entry.node_mean!r:>24} "
          f"target {str(entry.target):>5}  error {entry.error:.1e}")
print("verdict:", report.verdict)

# %%
# Exact odd cancellation at every n
# ---------------------------------
for n in (3, 5, 8, 10):
    r = chebyshev_gauss_check(n, 2 * n - 1)
    odd_exact = all(e.node_mean == 0.0 for e in r.entries if e.s % 2)
    print(f"n={n}: odd moments exactly 0.0: {odd_exact}, verdict {r.verdict}")

# %%
# A variant node formula that does not work
# -----------------------------------------
# cos(2k*pi/(2n-1)) is sometimes quoted for this rule; at n = 2 both nodes
# land on -1/2, so already the first moment fails.  The report carries the
# computation.
r = chebyshev_gauss_check(2, 3)
print("variant nodes at n=2:", [round(x, 6) for x in r.variant_nodes])
print("variant degree-1 mean:", r.variant_degree_one_mean, "(target 0)")
print("mirror-symmetric nodes used instead:", chebyshev_gauss_nodes(2))
