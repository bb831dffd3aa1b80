import random

import pytest

from ffcn.gf import make_field
from ffcn.polyring import (Place, PoleError, Poly, RationalFunction,
                           format_poly, format_rational, irreducible_count,
                           is_irreducible, moebius_mu, moebius_transport,
                           monic_irreducibles, parse_poly, parse_rational,
                           place_valuation, places_of_degree, poly_gcd,
                           residue, residue_field, unit_residue)

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)


def _random_poly(rng, field, max_deg):
    return Poly(field, [rng.randrange(field.order)
                        for _ in range(rng.randint(0, max_deg + 1))])


def test_poly_ring_axioms():
    rng = random.Random(11)
    for _ in range(200):
        f, g, h = (_random_poly(rng, F4, 6) for _ in range(3))
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        if not g.is_zero:
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


def test_valuation_is_additive():
    rng = random.Random(13)
    places = [Place(F2, parse_poly("x", F2)),
              Place(F2, parse_poly("x^2+x+1", F2)),
              Place.infinite(F2)]
    for _ in range(100):
        num1, num2 = _random_poly(rng, F2, 5), _random_poly(rng, F2, 5)
        den1, den2 = _random_poly(rng, F2, 4), _random_poly(rng, F2, 4)
        if num1.is_zero or num2.is_zero or den1.is_zero or den2.is_zero:
            continue
        f = RationalFunction(num1, den1)
        g = RationalFunction(num2, den2)
        for place in places:
            assert (place_valuation(f * g, place)
                    == place_valuation(f, place) + place_valuation(g, place))


def test_irreducibility_known_cases():
    assert is_irreducible(parse_poly("x^2+x+1", F2))
    assert not is_irreducible(parse_poly("x^2+1", F2))       # (x+1)^2
    assert is_irreducible(parse_poly("x^3+2x+2", F3))
    assert not is_irreducible(parse_poly("x^4+1", F3))
    assert is_irreducible(parse_poly("x^4+x+1", F2))
    assert not is_irreducible(parse_poly("x^4+x^2+1", F2))


@pytest.mark.parametrize("field,qname", [(F2, 2), (F3, 3), (F4, 4)])
def test_irreducible_enumeration_matches_formula(field, qname):
    for d in range(1, 9):
        polys = monic_irreducibles(field, d)
        assert len(polys) == irreducible_count(qname, d)
        assert len(set(polys)) == len(polys)
        assert all(p.is_monic and p.degree == d for p in polys)
        assert all(is_irreducible(p) for p in polys[:20])
        # ascending in the element ordering: high-degree coefficients first
        keys = [p.coeffs[::-1] for p in polys]
        assert keys == sorted(keys)


def test_degree7_irreducibles_over_gf2():
    polys = monic_irreducibles(F2, 7)
    assert len(polys) == 18
    assert parse_poly("x^7+x^3+1", F2) in polys
    assert parse_poly("x^7+x^4+1", F2) in polys


def test_moebius_mu():
    assert [moebius_mu(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_places_of_degree_one_include_infinity():
    places = places_of_degree(F2, 1)
    assert len(places) == 3  # x, x+1, infinity
    assert places[-1].is_infinite


def test_residue_field_and_evaluation():
    place = Place(F2, parse_poly("x^2+x+1", F2))
    R, root = residue_field(place)
    assert R.order == 4
    assert place.poly.eval_in(root, R) == 0
    f = parse_rational("(x^3+1)/(x+1)", F2)  # = x^2+x+1, vanishes at the place
    assert residue(f, place) == 0
    assert unit_residue(f, place) != 0


def test_residue_is_ring_homomorphism():
    rng = random.Random(17)
    place = Place(F2, parse_poly("x^3+x+1", F2))
    for _ in range(50):
        num1, num2 = _random_poly(rng, F2, 4), _random_poly(rng, F2, 4)
        if num1.is_zero or num2.is_zero:
            continue
        f, g = RationalFunction(num1), RationalFunction(num2)
        R, _ = residue_field(place)
        assert residue(f * g, place) == R.mul(residue(f, place), residue(g, place))
        if not (f + g).is_zero:
            assert residue(f + g, place) == R.add(residue(f, place), residue(g, place))


def test_residue_at_pole_raises():
    place = Place(F2, parse_poly("x", F2))
    f = parse_rational("(x+1)/x", F2)
    with pytest.raises(PoleError):
        residue(f, place)


def test_residue_at_infinity():
    f = parse_rational("(x^3+x^2+1)/(x^3+x+1)", F2)
    assert residue(f, Place.infinite(F2)) == 1
    g = parse_rational("x/(x^2+x+1)", F2)
    assert residue(g, Place.infinite(F2)) == 0


def test_moebius_transport_bijection_with_inverse():
    # x -> 1/(x+1) has matrix (0,1,1,1); its inverse is (1,1,1,0) over GF(2)
    for d in (1, 2, 3, 4):
        places = places_of_degree(F2, d)
        images = [moebius_transport(pl, (0, 1, 1, 1)) for pl in places]
        assert sorted(repr(p) for p in images) == sorted(repr(p) for p in places)
        back = [moebius_transport(im, (1, 1, 1, 0)) for im in images]
        assert back == places


def test_moebius_transport_degree4_chain():
    start = Place(F2, parse_poly("x^4+x^3+x^2+x+1", F2))
    mid = moebius_transport(start, (0, 1, 1, 1))       # x -> 1/(x+1)
    assert format_poly(mid.poly) == "x^4+x^3+1"
    end = moebius_transport(mid, (0, 1, 1, 0))         # x -> 1/x
    assert format_poly(end.poly) == "x^4+x+1"


def test_poly_text_round_trip():
    rng = random.Random(19)
    for field in (F2, F3, F4):
        for _ in range(50):
            f = _random_poly(rng, field, 6)
            assert parse_poly(format_poly(f), field) == f
    f = parse_rational("(x^3+x^2+1)/(x^3+x+1)", F2)
    assert parse_rational(format_rational(f), F2) == f


def test_gcd_is_monic_common_divisor():
    f = parse_poly("x^2+x+1", F2) * parse_poly("x^3+x+1", F2)
    g = parse_poly("x^2+x+1", F2) * parse_poly("x+1", F2)
    assert poly_gcd(f, g) == parse_poly("x^2+x+1", F2)
