import pytest

from ffcn.covers import (CoverKind, CoverModel, InvalidCoverError,
                         cover_genus, place_census, ramification_data,
                         splitting_type, validate_standard_form)
from ffcn.gf import make_field
from ffcn.polyring import parse_rational, places_of_degree
from ffcn.zeta import census_from_counts, census_to_counts

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)


def _as(f_str, field=F2):
    return CoverModel(CoverKind.ARTIN_SCHREIER, parse_rational(f_str, field))


def _kummer(f_str, field=F3):
    return CoverModel(CoverKind.KUMMER, parse_rational(f_str, field))


def test_kind_characteristic_guards():
    with pytest.raises(InvalidCoverError):
        CoverModel(CoverKind.ARTIN_SCHREIER, parse_rational("x", F3))
    with pytest.raises(InvalidCoverError):
        CoverModel(CoverKind.KUMMER, parse_rational("x", F2))


def test_standard_form_diagnostics():
    assert validate_standard_form(_as("x^3+x+1")) == []
    assert validate_standard_form(_kummer("x^3+2x+2")) == []
    # x^2 has an even pole order at infinity: not in standard form
    assert validate_standard_form(_as("x^2")) != []
    # a square times a constant has no ramification
    assert validate_standard_form(_kummer("x^2")) != []


def test_genus_values():
    assert cover_genus(_as("x^3+x+1")) == 1
    assert cover_genus(_as("x^5+x^3+1")) == 2
    assert cover_genus(_as("(x^3+x^2+1)/(x^3+x+1)")) == 2
    assert cover_genus(_kummer("x^3+2x+2")) == 1
    assert cover_genus(_as("x^3+a", F4)) == 1
    assert cover_genus(_as("x")) == 0  # deg Diff = 2, so 2g-2 = -4+2


def test_ramification_data_kummer():
    data = ramification_data(_kummer("x^3+2x+2"))
    assert len(data) == 2
    finite, infinite = data
    assert not finite.place.is_infinite and finite.degree == 3
    assert infinite.place.is_infinite
    for r in data:
        assert r.ramification_index == 2
        assert r.different_exponent == 1  # tame: d_P = e - 1


def test_ramification_data_artin_schreier():
    data = ramification_data(_as("x^3+x+1"))
    assert len(data) == 1
    (inf,) = data
    assert inf.place.is_infinite
    assert inf.different_exponent == 4  # (p-1)(m+1) with pole order 3
    assert inf.different_exponent > inf.ramification_index - 1  # wild


def test_splitting_trichotomy_covers_every_place():
    for cover in (_as("x^3+x+1"), _kummer("x^3+2x+2"),
                  _as("(x^3+x^2+1)/(x^3+x+1)")):
        for d in range(1, 6):
            for place in places_of_degree(cover.field, d):
                assert splitting_type(cover, place) in ("ramified", "split", "inert")


def test_census_degree_one():
    assert place_census(_as("x^3+x+1"), 1).b(1) == 1
    assert place_census(_kummer("x^3+2x+2"), 1).b(1) == 1


def test_census_counts_round_trip():
    census = place_census(_as("x^5+x^3+1"), 6)
    counts = census_to_counts(census, 6)
    assert census_from_counts(counts).counts == census.counts


def test_inert_places_recorded_at_doubled_degree():
    census = place_census(_as("x^3+x+1"), 2)
    # over GF(2): both finite rational places are inert, infinity ramifies
    assert census.b(1) == 1
    # the two inert rational places surface as places of degree 2
    assert census.b(2) >= 2


def test_constant_field_extension_rejected():
    # y^2 + y = x^2 + x has no poles: z := y + x satisfies z^2 + z = 0
    with pytest.raises(InvalidCoverError):
        place_census(_as("x^2+x"), 2)
