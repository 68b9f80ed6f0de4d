"""
Graded dimensions
=================

Every algebra here has a symmetric unimodal Hilbert vector; the middle
dimensions are the sizes of the matrices whose ranks decide everything else.
"""
from slpkit import AlgebraSpec, graded_basis, hilbert_vector

###############################################################################
# Square-free algebras give rows of Pascal's triangle.

for n in range(1, 9):
    hv = hilbert_vector(AlgebraSpec.quadratic(n))
    print(f"n={n}: {','.join(str(h) for h in hv)}")

###############################################################################
# Mixed killed powers flatten the profile but keep symmetry and unimodality.

for bounds in ((3, 4), (2, 3, 4), (3, 3, 3), (5, 2)):
    spec = AlgebraSpec(len(bounds), bounds)
    hv = hilbert_vector(spec)
    print(f"killed powers {bounds}: {tuple(hv)} (socle degree {spec.socle_degree})")
    assert hv.is_symmetric() and hv.is_unimodal()

###############################################################################
# The vector counts actual basis monomials, degree by degree.

spec = AlgebraSpec(2, (3, 3))
for t in range(spec.socle_degree + 1):
    names = ", ".join(str(m) for m in graded_basis(spec, t))
    print(f"degree {t} ({spec.dim(t)}): {names}")
