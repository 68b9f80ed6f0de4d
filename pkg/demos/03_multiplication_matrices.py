"""
Matrices of multiplication by a power of a linear form
======================================================

Entries are written down directly from multinomial coefficients; the power of
the form is never expanded as a polynomial.
"""
from slpkit import AlgebraSpec, LinearForm, build_matrix, determinant, mat_mul, rank_mod_p

###############################################################################
# The map l^2 from degree 1 to degree 3 on the square-free algebra in four
# variables, l the sum of all variables.  Rows follow the degree-3 listing,
# columns the degree-1 listing.

spec = AlgebraSpec.quadratic(4)
form = LinearForm.ones(4)
mm = build_matrix(spec, form, 1, 2)
print(mm.matrix.to_csv())

###############################################################################
# Its determinant is -48, so the map is invertible over the rationals; mod 5
# it stays invertible, mod 2 and 3 it degenerates.

print("determinant:", determinant(mm.matrix))
for p in (2, 3, 5):
    print(f"rank mod {p}:", rank_mod_p(mm.matrix, p).rank)

###############################################################################
# Arbitrary coefficients and killed powers work the same way.

spec2 = AlgebraSpec(2, (3, 3))
mm2 = build_matrix(spec2, LinearForm((2, -1)), 1, 2)
print("two cubics, form 2*x1 - x2, degree 1 -> 3:")
print(mm2.matrix.to_csv())

###############################################################################
# Powers compose: the matrix of l^(s+t) equals the matrix of l^t applied
# after the matrix of l^s.

a = build_matrix(spec, form, 0, 1).matrix
b = build_matrix(spec, form, 1, 2).matrix
c = build_matrix(spec, form, 0, 3).matrix
assert mat_mul(b, a) == c
print("composition check: l^2 after l equals l^3")
