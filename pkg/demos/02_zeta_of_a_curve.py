"""From point counts to the zeta numerator and the class number.

The elliptic curve y^2 + y = x^3 + x + 1 over GF(2) has exactly one
rational place, which already pins down its L-polynomial: for genus g,
the counts N_1 .. N_g determine L(t) through Newton's identities, and
h = L(1) is the divisor class number.
"""

from ffcn import (CoverKind, CoverModel, PointCounts, census_from_counts,
                  class_number, cover_genus, extend_counts, l_polynomial,
                  make_field, parse_rational, place_census)
from ffcn.covers import census_to_counts

F2 = make_field(2, 1)
cover = CoverModel(CoverKind.ARTIN_SCHREIER, parse_rational("x^3+x+1", F2))

g = cover_genus(cover)
print("genus:", g)

# Count places of each degree directly from the splitting behaviour of
# the cover, then convert the census into point counts N_m.
census = place_census(cover, 6)
print("place census B_1..B_6:", census.counts)
counts = census_to_counts(census, 6)
print("point counts N_1..N_6:", counts)

L = l_polynomial(PointCounts(2, g, tuple(counts[:g])))
print("L-polynomial coefficients:", L.coeffs)
print("class number h = L(1) =", class_number(L))

# The L-polynomial predicts every further count.  Comparing predictions
# against the independently computed census is a strong consistency
# check: two different algorithms must agree on every N_m.
predicted = extend_counts(L, 6).counts
print("L-extended counts:     ", list(predicted))
assert list(predicted) == counts
print("enumerated and extended counts agree through degree 6")

# And the census is recoverable from the counts by Moebius inversion.
assert census_from_counts(predicted).counts == census.counts
print("census round trip: ok")
