"""
Strong Lefschetz verdicts
=========================

A form has the strong Lefschetz property when every power of it multiplies
one graded piece onto another with maximal rank.  For symmetric unimodal
dimension vectors only the square "middle" maps need checking.
"""
from slpkit import AlgebraSpec, LinearForm, char_search, slp_check

###############################################################################
# Over the rationals the sum of variables works in every square-free algebra.

for n in (3, 6, 9):
    report = slp_check(AlgebraSpec.quadratic(n), LinearForm.ones(n))
    print(f"n={n}: slp={report.slp} ({len(report.maps)} maps, {report.total_ms:.1f} ms)")

###############################################################################
# In small characteristic the property can fail; the report says where.

report = slp_check(AlgebraSpec.quadratic(3, 2), LinearForm.ones(3))
print(f"n=3 mod 2: slp={report.slp}, failing maps {report.failures}")

###############################################################################
# Scanning primes separates small characteristic from large.  For four
# variables exactly 2 and 3 fail.

probes = char_search(AlgebraSpec.quadratic(4), LinearForm.ones(4), (2, 3, 5, 7, 11, 13))
for pr in probes:
    verdict = "holds" if pr.slp else f"fails at {pr.failing}"
    print(f"p={pr.prime}: {verdict}")

###############################################################################
# Non-quadratic algebras run the full set of powers.

report = slp_check(AlgebraSpec(2, (3, 4)), LinearForm.ones(2))
print(f"killed powers (3,4): slp={report.slp} across {len(report.maps)} maps")

###############################################################################
# A zero coefficient always breaks the property: the top power of the form
# cannot reach the socle.

report = slp_check(AlgebraSpec.quadratic(3), LinearForm((1, 0, 1)))
print(f"form with a zero coefficient: slp={report.slp}")
