import dataclasses

import pytest

from ffcn.catalog import (DEFAULT_CATALOG, CatalogEntry, build_model,
                          dump_catalog, get_entry, load_catalog,
                          section_facts, verify_curve)
from ffcn.covers import CoverModel
from ffcn.varieties import PlaneCurve, SpaceCurve

EXPECTED_GENERA = {"i": 1, "ii": 2, "iii": 2, "iv": 3, "v": 3,
                   "vi": 1, "vii": 1, "viii": 4}


def test_catalog_shape():
    ids = [e.curve_id for e in DEFAULT_CATALOG]
    assert ids == ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"]
    assert all(e.class_number == 1 for e in DEFAULT_CATALOG)
    for e in DEFAULT_CATALOG:
        assert e.genus == EXPECTED_GENERA[e.curve_id]


def test_model_routing():
    kinds = {e.curve_id: build_model(e) for e in DEFAULT_CATALOG}
    for cid in ("i", "ii", "iii", "vi", "vii"):
        assert isinstance(kinds[cid], CoverModel)
    assert isinstance(kinds["iv"], PlaneCurve)
    assert isinstance(kinds["v"], PlaneCurve)
    assert isinstance(kinds["viii"], SpaceCurve)


def test_catalog_serialization_round_trip():
    assert load_catalog(dump_catalog()) == DEFAULT_CATALOG


def test_unknown_curve_id():
    with pytest.raises(KeyError):
        get_entry("ix")


def test_unknown_model_kind_rejected():
    with pytest.raises(ValueError):
        CatalogEntry("x", 2, 1, 0, 1, "hyperelliptic", {}, "")


@pytest.mark.parametrize("entry", DEFAULT_CATALOG, ids=lambda e: e.curve_id)
def test_every_curve_verifies(entry):
    report = verify_curve(entry)
    assert report.status == "pass", report.problems
    assert report.genus == entry.genus
    assert report.h == 1
    assert report.l_coeffs[0] == 1
    assert sum(report.l_coeffs) == 1
    # enumerated counts beyond N_g agreed with the L-polynomial extension
    assert len(report.cross_checked) >= 1


def test_survivor_census_through_catalog():
    report = verify_curve(get_entry("viii"))
    assert report.census == (0, 0, 0, 1, 3)
    assert report.counts[:5] == (0, 0, 0, 4, 15)


def test_tampered_genus_detected():
    entry = dataclasses.replace(get_entry("i"), genus=7)
    report = verify_curve(entry)
    assert report.status == "fail"
    assert any("genus" in p for p in report.problems)


def test_section_facts():
    facts = section_facts()
    assert facts["different_degree_quintic"] == 16
    assert facts["cyclic_quintic_count"] == 5
    assert facts["transport_substitution"][-1] == "Place(x^4+x+1)"
    # the two conventions traverse the same places in opposite orders
    assert (set(facts["transport_substitution"][1:])
            == set(facts["transport_pushforward"][1:]))
