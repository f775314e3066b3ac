"""Exact characteristic polynomials of quotient matrices.

The symmetric quotient matrix carries square roots of block sizes, but it
is similar to an integer-weighted form with the same characteristic
polynomial, so rational parameters give exact rational coefficients.
Roots located from those coefficients (after an exact square-free
decomposition) cross-check the floating-point eigensolvers.
"""

from fractions import Fraction

import numpy as np

from powspec import (
    GroupFamily,
    GroupSpec,
    UniversalParams,
    Variant,
    build_join,
    charpoly_exact,
    charpoly_roots,
    cyclic_two_prime_case2_charpoly,
    dense_eigen,
    multiset_gap,
    normalized_laplacian_charpoly_at,
    power_graph_oracle,
    quotient_matrix,
)

# --- exact coefficients -------------------------------------------------------

js = build_join(GroupSpec(GroupFamily.DIHEDRAL, 15), Variant.POWER)
q = quotient_matrix(js, UniversalParams.preset("laplacian"))
coeffs = charpoly_exact(q)
print("Laplacian quotient charpoly of the power graph of D_15 (monic, descending):")
print(" ", [str(c) for c in coeffs])
print("  constant term zero, so 0 is an eigenvalue (as every Laplacian demands)")

roots = charpoly_roots(coeffs)
print("  roots:", [round(r, 9) for r in roots])
print("  match dense eigensolver:", multiset_gap(np.array(roots), dense_eigen(q.sym)) < 1e-10)

# rational (non-preset) parameters stay exact
params = UniversalParams(Fraction(3, 2), Fraction(-1, 3), Fraction(2), Fraction(5, 7))
q = quotient_matrix(build_join(GroupSpec(GroupFamily.CYCLIC, 30), Variant.POWER), params)
coeffs = charpoly_exact(q)
print("\nZ_30 quotient charpoly at (3/2, -1/3, 2, 5/7):")
print("  degree", len(coeffs) - 1, "constant term", coeffs[-1])

# --- a pointwise polynomial identity ------------------------------------------

# for Z_pq with eta = 0 the quotient determinant collapses to a short
# product-sum expression; evaluate both sides at a rational point
params = UniversalParams(2, Fraction(-1, 2), Fraction(1, 3), 0)
lhs = cyclic_two_prime_case2_charpoly(2, 3, params, Fraction(7, 5))
q = quotient_matrix(build_join(GroupSpec(GroupFamily.CYCLIC, 6), Variant.POWER), params)
from powspec.spectra import _fraction_det

rows = [
    [Fraction(q.similar[i][j]) - (Fraction(7, 5) if i == j else 0) for j in range(4)]
    for i in range(4)
]
print("\nproduct-sum formula vs exact determinant at lambda = 7/5:")
print(f"  {lhs} == {_fraction_det(rows)}: {lhs == _fraction_det(rows)}")

# --- normalized Laplacian through a determinant ratio ---------------------------

g = power_graph_oracle(GroupSpec(GroupFamily.CYCLIC, 4))
print("\nnormalized-Laplacian characteristic value of the power graph of Z_4:")
for lam in (0, Fraction(1, 2), Fraction(4, 3), 2):
    value = normalized_laplacian_charpoly_at(g, lam)
    print(f"  psi({lam}) = {value}")
