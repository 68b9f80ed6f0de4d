"""
Graded bases and where a monomial sits
======================================

The square-free monomials of one degree are listed in a fixed order, and for
that order the position of any monomial is a closed-form sum of binomials, so
rows and columns of every matrix in the package can be located without
scanning the listing.
"""
from math import comb

from slpkit import (
    Monomial,
    enumerate_squarefree,
    revlex_compare,
    squarefree_rank,
    squarefree_unrank,
)

###############################################################################
# Degree 2 in four variables.  The first element is always x1*x2, the last
# always involves the last variable.

listing = enumerate_squarefree(4, 2)
for k, m in enumerate(listing):
    print(f"position {k}: {m}")

###############################################################################
# The listing is decreasing: each element compares as "later" against its
# predecessor.

u, v = listing[0], listing[1]
print(f"compare({u}, {v}) = {revlex_compare(u, v)}")

###############################################################################
# Positions come from the combinatorial number system.  rank and unrank are
# mutually inverse, with no search involved.

m = Monomial((0, 1, 0, 1))
where = squarefree_rank(m)
print(f"{m} lives at degree {where.degree}, position {where.position}")
print(f"unrank gives back: {squarefree_unrank(4, where.degree, where.position)}")

###############################################################################
# Counting sanity: the degree-t listing in n variables has C(n, t) elements.

for n in range(1, 7):
    sizes = [len(enumerate_squarefree(n, t)) for t in range(n + 1)]
    assert sizes == [comb(n, t) for t in range(n + 1)]
    print(f"n={n}: {sizes}")

###############################################################################
# The listing splits over the last variable: first every monomial without it,
# then the previous degree's listing times that variable.  The block matrices
# in the package are built on exactly this split.

n, t = 5, 3
listing = enumerate_squarefree(n, t)
without = [m for m in listing if m.exponents[-1] == 0]
with_last = [m for m in listing if m.exponents[-1] == 1]
print(f"degree {t} in {n} variables: {len(without)} without x{n}, {len(with_last)} with")
assert len(without) == comb(n - 1, t)
assert len(with_last) == comb(n - 1, t - 1)
