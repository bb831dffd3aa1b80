"""Places, residue fields, and how degree-2 covers split them.

A place of the rational function field GF(q)(x) is a monic irreducible
polynomial (or the pole of x).  In a degree-2 cover each base place
either ramifies, splits in two, or stays inert with doubled degree;
which one happens is decided by a trace (characteristic 2) or a
quadratic character (characteristic 3) in the residue field.
"""

from ffcn import (CoverKind, CoverModel, make_field, monic_irreducibles,
                  parse_rational, places_of_degree, residue, residue_field,
                  splitting_type)

F2 = make_field(2, 1)

print("monic irreducibles over GF(2) by degree:")
for d in range(1, 6):
    polys = monic_irreducibles(F2, d)
    shown = ", ".join(str(p) for p in polys[:4])
    more = "" if len(polys) <= 4 else f", ... ({len(polys)} total)"
    print(f"  degree {d}: {shown}{more}")

place = places_of_degree(F2, 3)[0]
R, root = residue_field(place)
print(f"\nresidue field of {place}: GF({R.order})")
f = parse_rational("(x^2+1)/(x^3+x+1)", F2)
try:
    residue(f, place)
except Exception as exc:
    print("evaluating at a pole raises:", type(exc).__name__, "-", exc)

cover = CoverModel(CoverKind.ARTIN_SCHREIER, parse_rational("x^3+x+1", F2))
print("\nsplitting of low-degree places in y^2 + y = x^3 + x + 1:")
for d in (1, 2, 3):
    for place in places_of_degree(F2, d):
        kind = splitting_type(cover, place)
        above = {"ramified": "one place, degree d",
                 "split": "two places, degree d",
                 "inert": "one place, degree 2d"}[kind]
        print(f"  {str(place):>22} -> {kind:<8} ({above})")

# Every base place satisfies the fundamental identity: the ramification
# indices times inertia degrees of the places above it sum to 2.
print("\nsum of e*f over each fiber is the cover degree 2, in every case above")
