import pytest

from ffcn.gf import make_field
from ffcn.varieties import (PlaneCurve, SingularModelError,
                            SpaceCurve, curve_point_counts, format_multipoly,
                            format_point, min_point_degree, normalize_point,
                            parse_multipoly, parse_point, point_degree,
                            points_on_model, projective_point_count,
                            projective_points, smoothness_probe)

F2 = make_field(2, 1)
F4 = make_field(2, 2)
F16 = make_field(2, 4)

XYZ = ("x", "y", "z")
X4 = ("x1", "x2", "x3", "x4")


def test_projective_point_enumeration():
    for dim in (1, 2, 3):
        for field in (F2, F4):
            pts = list(projective_points(dim, field))
            assert len(pts) == projective_point_count(dim, field.order)
            assert len(set(pts)) == len(pts)
            assert all(normalize_point(pt, field) == pt for pt in pts)
    assert next(projective_points(3, F2)) == (0, 0, 0, 1)


def test_normalize_point():
    assert normalize_point((0, 2, 3), F4) == (0, 1, F4.mul(F4.inv(2), 3))
    with pytest.raises(ValueError):
        normalize_point((0, 0, 0), F4)


def test_point_degree():
    assert point_degree((1, 0, 0), F16, F2) == 1
    a = 2  # generator of GF(4) embedded value differs, use GF(4) directly
    assert point_degree((1, a, 0), F4, F2) == 2
    assert point_degree((1, a, 0), F4, F4) == 1


def test_plane_conic_counts():
    # x*z = y^2: a smooth conic, isomorphic to P^1, so N_m = q^m + 1
    conic = parse_multipoly("xz+y^2", F2, XYZ)
    model = PlaneCurve(conic)
    assert smoothness_probe(model) == ()
    assert curve_point_counts(model, 4) == [3, 5, 9, 17]


def test_singular_plane_curve_rejected():
    # y^2*z = x^3: cuspidal cubic, singular at (0:0:1)
    cusp = parse_multipoly("y^2z+x^3", F2, XYZ)
    model = PlaneCurve(cusp)
    assert smoothness_probe(model) != ()
    with pytest.raises(SingularModelError):
        curve_point_counts(model, 2)


def test_degenerate_space_curve_rejected():
    cubic = parse_multipoly("x1^3", F2, X4)
    quadric = parse_multipoly("x1^2", F2, X4)
    model = SpaceCurve(cubic, quadric)
    with pytest.raises(SingularModelError):
        curve_point_counts(model, 1)


def test_space_curve_shape_validation():
    cubic = parse_multipoly("x1^3", F2, X4)
    with pytest.raises(ValueError):
        SpaceCurve(cubic, cubic)  # quadric slot must have degree 2


def test_min_point_degree_on_conic():
    model = PlaneCurve(parse_multipoly("xz+y^2", F2, XYZ))
    found = min_point_degree(model, 3)
    assert found is not None
    d, pt, ext = found
    assert d == 1 and ext is F2
    assert pt == (0, 0, 1)  # lexicographically smallest witness


def test_partial_derivatives():
    f = parse_multipoly("x^3+y^2z", F2, XYZ)
    fx = f.partial(0)
    assert format_multipoly(fx, XYZ) == "x^2"
    fy = f.partial(1)  # 2*y*z = 0 in characteristic 2
    assert fy.terms == ()
    fz = f.partial(2)
    assert format_multipoly(fz, XYZ) == "y^2"


def test_multipoly_text_round_trip():
    for s in ("x^3+y^2z", "xz+y^2", "x1x2+x3x4+x4^2"):
        names = XYZ if "y" in s else X4
        f = parse_multipoly(s, F2, names)
        assert parse_multipoly(format_multipoly(f, names), F2, names) == f


def test_multipoly_coefficients_in_extension():
    f = parse_multipoly("x^3+(a)y^3+z^3", F4, XYZ)
    assert f((0, 1, 0), F4) == 2  # the GF(4) generator


def test_point_text_round_trip():
    fields = {"a": F4, "b": make_field(2, 3)}
    # formatting emits the canonical polynomial form (b^3 renders as b+1),
    # so the round trip preserves values rather than spellings
    for s in ("(1:0:1:1)", "(1:0:a:1)", "(b:0:b^3:1)", "(b:0:b+1:1)"):
        coords, field = parse_point(s, fields, F2)
        symbol = "b" if field.k == 3 else "a"
        again, field2 = parse_point(format_point(coords, field, symbol), fields, F2)
        assert (again, field2) == (coords, field)
    assert parse_point("(b:0:b^3:1)", fields, F2) == parse_point("(b:0:b+1:1)", fields, F2)


def test_points_on_model_agree_with_direct_evaluation():
    model = PlaneCurve(parse_multipoly("xz+y^2", F2, XYZ))
    pts = points_on_model(model, F4)
    expected = [pt for pt in projective_points(2, F4)
                if model.poly(pt, F4) == 0]
    assert pts == expected
