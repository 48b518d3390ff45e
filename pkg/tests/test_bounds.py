import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infsup import bounds, geometry, shapes
from infsup.bounds import IdentityError

from helpers import circumscribed_polygon, cyclic_polygon, star_polygon

SQ2 = math.sqrt(2)
SQUARE_M = 3 + 2 * SQ2


# -- P and alpha(theta) --------------------------------------------------------


def test_p_disk_is_one_over_alpha():
    b = shapes.Disk(1.0).build()
    for th in (0.0, 1.0, 4.0):
        assert bounds.P(b, 0.5, th) == pytest.approx(2.0, abs=1e-15)


def test_p_direct_substitution():
    assert bounds.p_value(0.5, 1.0, 1.0) == pytest.approx(6.0, abs=1e-14)


def test_p_segment_closed_form():
    # on a polygon side P = (1 - a d^2) / (a d^2 (1 - a f^2))
    b = shapes.RegularPolygon(5, 1.0).build()
    seg = b.pieces[0]
    for th in np.linspace(seg.t0 + 0.01, seg.t1 - 0.01, 5):
        for a in (0.2, 0.6, 0.9):
            f = float(seg.f(th))
            exp = (1 - a * seg.d ** 2) / (a * seg.d ** 2 * (1 - a * f * f))
            assert bounds.P(b, a, th) == pytest.approx(exp, rel=1e-12)


def test_p_pole_is_infinite():
    assert bounds.p_value(1.0, 1.0, 0.5) == math.inf
    assert bounds.p_value(1.0, 1.0, 0.0) == pytest.approx(1.0)


def test_p_rejects_alpha_out_of_range():
    b = shapes.Disk(1.0).build()
    for a in (0.0, 1.0, -0.1, 1.5):
        with pytest.raises(ValueError):
            bounds.P(b, a, 0.3)


def test_alpha_theta_examples():
    assert bounds.alpha_from(1.0, 0.0) == 1.0
    assert bounds.alpha_from(1.0, 1.0) == pytest.approx(2 - SQ2, abs=1e-15)
    b = shapes.Disk(1.0).build()
    assert bounds.alpha_theta(b, 0.5) == pytest.approx(1.0, abs=1e-15)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(-50, 50, allow_nan=False))
def test_alpha_satisfies_quadratic(f, t):
    zeta = bounds.alpha_from(f, t * f) * f * f
    u = 1 + t * t
    assert abs(zeta * zeta - 2 * u * zeta + u) <= 1e-12 * u * u
    assert 0 < zeta <= 1 + 4e-16


@settings(max_examples=200, deadline=None)
@given(st.floats(0.1, 1.0), st.floats(-5, 5, allow_nan=False),
       st.floats(0.01, 0.98), st.floats(0.01, 0.98))
def test_p_is_midpoint_convex_in_alpha(f, t, a, c):
    a, c = sorted((a, c))
    lim = 1 / (f * f)
    pa, pc = bounds.p_value(a, f, t * f), bounds.p_value(c, f, t * f)
    pm = bounds.p_value(0.5 * (a + c), f, t * f)
    if c < lim:
        assert pm <= 0.5 * (pa + pc) + 1e-9 * max(1.0, pa + pc)


def test_hp_weight_matches_minimum_of_p():
    for t in (0.0, 0.3, 1.0, 4.0):
        a = bounds.alpha_from(1.0, t)
        assert bounds.p_value(a, 1.0, t) == pytest.approx(bounds.hp_weight(t), rel=1e-12)


# -- m and M ----------------------------------------------------------------------


def test_disk_m_and_M():
    b = shapes.Disk(1.0).build()
    assert bounds.m_of(b) == 1.0
    res = bounds.M_of(b)
    assert res.M == pytest.approx(1.0, abs=1e-12)
    assert res.at_limit


def test_square_m_M_alpha():
    b = shapes.RegularPolygon(4, 1.0).build()
    assert bounds.m_of(b) == pytest.approx(SQUARE_M, rel=1e-12)
    res = bounds.M_of(b)
    assert res.M == pytest.approx(SQUARE_M, rel=1e-12)
    assert res.alpha == pytest.approx(2 - SQ2, abs=1e-6)


@pytest.mark.parametrize("seed", range(20))
def test_ellipse_random_aspect(seed):
    rng = np.random.default_rng(seed)
    k = rng.uniform(1.0, 10.0)
    b = shapes.Ellipse(1.0, k).build()
    assert bounds.m_of(b) == pytest.approx(k * k, abs=1e-6)
    assert bounds.M_of(b).M == pytest.approx(k * k, abs=1e-6)


def test_M_infinite_when_not_strictly_star_shaped():
    # kernel point on a side's line is rejected at construction, so check the
    # rho_max = 0 path with the radii bounds
    rr = bounds.radii_ratio_from(0.0, 1.0)
    assert rr.M_tau == math.inf and rr.beta_lower == 0.0


def test_m_le_M_le_Mtau_random_polygons():
    rng = np.random.default_rng(99)
    for _ in range(200):
        b = geometry.polygon_to_boundary(star_polygon(rng))
        m, M = bounds.m_of(b), bounds.M_of(b).M
        Mt = bounds.radii_ratio_bounds(b).M_tau
        assert m <= M + 1e-8 * max(1.0, M)
        assert M <= Mt + 1e-8 * max(1.0, Mt)


def test_m_le_M_le_Mtau_curved_boundaries():
    specs = [
        shapes.Ellipse(1.0, 2.0, center=(0.3, 0.2)),
        shapes.Ellipse(2.0, 1.0, center=(-0.5, 0.1)),
        shapes.Disk(1.0, center=(0.6, 0.0)),
        shapes.CupidsBow(1.0),
        shapes.DoubleStadium(0.4),
        shapes.OctagonCE(0.5),
    ]
    for s in specs:
        b = s.build()
        m, M = bounds.m_of(b), bounds.M_of(b).M
        Mt = bounds.radii_ratio_bounds(b).M_tau
        assert m <= M + 1e-8 * M
        assert M <= Mt + 1e-8 * Mt


# -- polygons ------------------------------------------------------------------------


def test_polygon_examples():
    sq = shapes.Rectangle(1.0, 1.0).polygon()
    assert bounds.polygon_M(sq) == pytest.approx(SQUARE_M, abs=1e-10)
    assert bounds.polygon_m(sq) == pytest.approx(SQUARE_M, abs=1e-10)
    tri = shapes.RegularPolygon(3, 1.0).polygon()
    assert bounds.polygon_M(tri) == pytest.approx(7 + 4 * math.sqrt(3), abs=1e-9)
    assert bounds.polygon_m(tri) == pytest.approx(7 + 4 * math.sqrt(3), abs=1e-9)


def test_rectangle_2x1_against_brute_force():
    poly = shapes.Rectangle(2.0, 1.0).polygon()
    exp = 9 + 4 * math.sqrt(5)
    assert bounds.polygon_M(poly) == pytest.approx(exp, rel=1e-10)
    # oracle: dense alpha grid on the polygon formula, then a local refinement
    r = np.array(poly.radii()) / max(poly.radii())
    d = np.array(poly.distances()) / max(poly.radii())
    a = np.linspace(1e-4, 1 - 1e-9, 200001)[:, None]
    q = ((1 - a * d ** 2) / (a * d ** 2 * (1 - a * r ** 2))).max(axis=1)
    assert q.min() == pytest.approx(exp, rel=1e-7)
    assert bounds.closed_form_dM(1 / math.sqrt(5))[0] == pytest.approx(exp, rel=1e-14)


def test_hexagon_like_generic_polygon_m_strictly_below_M():
    rng = np.random.default_rng(3)
    gaps = 0
    for _ in range(30):
        poly = star_polygon(rng)
        m, M = bounds.polygon_m(poly), bounds.polygon_M(poly)
        assert m <= M + 1e-8 * M
        gaps += M - m > 1e-6 * M
    assert gaps > 0


@pytest.mark.parametrize("gen", [cyclic_polygon, circumscribed_polygon])
def test_cyclic_and_circumscribed_closed_form(gen):
    rng = np.random.default_rng(17)
    for _ in range(40):
        poly = gen(rng)
        R = max(poly.radii())
        d = min(poly.distances()) / R
        M, _ = bounds.closed_form_dM(d)
        assert abs(bounds.polygon_M(poly) - M) < 1e-8 * max(1.0, M)


def test_closed_form_dM_examples():
    M, a = bounds.closed_form_dM(1 / SQ2)
    assert M == pytest.approx(SQUARE_M, abs=1e-13)
    assert a == pytest.approx(2 - SQ2, abs=1e-13)
    M, a = bounds.closed_form_dM(0.5)
    assert M == pytest.approx(7 + 4 * math.sqrt(3), abs=1e-12)
    assert a == pytest.approx(4 - 2 * math.sqrt(3), abs=1e-13)
    assert bounds.closed_form_dM(1 - 1e-12)[0] == pytest.approx(1.0, abs=1e-5)
    assert bounds.closed_form_dM(1.0) == (1.0, 1.0)
    with pytest.raises(ValueError):
        bounds.closed_form_dM(0.0)


def test_beta_lower_from_d_matches_M():
    for d in (0.1, 0.5, 0.9):
        M, _ = bounds.closed_form_dM(d)
        assert bounds.beta_lower_from_d(d) == pytest.approx((1 + M) ** -0.5, rel=1e-13)


# -- radii ratio ---------------------------------------------------------------------


def test_radii_ratio_examples():
    rr = bounds.radii_ratio_bounds(shapes.Disk(1.0).build())
    assert rr.tau == pytest.approx(0.0, abs=1e-7)
    assert rr.psi == pytest.approx(math.pi / 2, abs=1e-7)
    assert rr.M_tau == pytest.approx(1.0, abs=1e-12)
    assert rr.beta_lower == pytest.approx(1 / SQ2, abs=1e-12)
    rr = bounds.radii_ratio_bounds(shapes.RegularPolygon(4, 1.0).build())
    assert rr.M_tau == pytest.approx(SQUARE_M, rel=1e-12)
    assert rr.beta_lower == pytest.approx(math.sin(math.pi / 8), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.floats(1e-3, 1.0), st.floats(1.0, 50.0))
def test_radii_ratio_identities(rho, R):
    rho = min(rho, R)
    rr = bounds.radii_ratio_from(rho, R)
    assert abs(math.sin(rr.psi / 2) - rr.beta_lower) <= 1e-12
    assert abs((1 + rr.M_tau) ** -0.5 - rr.beta_lower) <= 1e-12
    assert rr.beta_lower >= rho / (2 * R) - 1e-15


# -- conversions -----------------------------------------------------------------------


def test_convert_examples():
    c = bounds.convert("Gamma", 1.0)
    assert (c.C, c.beta, c.K) == pytest.approx((2.0, 1 / SQ2, 4.0))
    assert c.K_provenance == bounds.SMOOTH_ONLY
    c = bounds.convert("beta", 1.0)
    assert (c.C, c.Gamma) == (1.0, 0.0)
    c = bounds.convert("C", 1 / (0.5 - 1 / math.pi))
    assert c.beta == pytest.approx(math.sqrt(0.5 - 1 / math.pi), rel=1e-14)
    assert c.beta == pytest.approx(0.42625, abs=5e-6)
    assert c.Gamma == pytest.approx(1 / (0.5 - 1 / math.pi) - 1, rel=1e-14)
    assert 4.5038 <= c.Gamma < 4.5039


@pytest.mark.parametrize("kind,value", [("beta", 0.0), ("beta", 1.5), ("C", 0.5),
                                        ("Gamma", -1.0), ("K", 1.0), ("nope", 1.0)])
def test_convert_rejects(kind, value):
    with pytest.raises(ValueError):
        bounds.convert(kind, value)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 1.0))
def test_convert_round_trip(beta):
    c = bounds.convert("beta", beta)
    for kind, v in (("C", c.C), ("Gamma", c.Gamma), ("K", c.K)):
        assert bounds.convert(kind, v).beta == pytest.approx(beta, rel=1e-12)


# -- HP bound and report -------------------------------------------------------------------


def test_hp_lower_bound_examples():
    assert bounds.hp_lower_bound(shapes.Disk(1.0).build()) == pytest.approx(1 / SQ2, abs=1e-15)
    assert bounds.hp_lower_bound(shapes.RegularPolygon(4, 1.0).build()) == pytest.approx(
        math.sin(math.pi / 8), abs=1e-13
    )
    for c in (0.5, 2.58):
        s2 = (math.sqrt(c * c + 1) - c) / (2 * math.sqrt(c * c + 1))
        assert bounds.hp_lower_bound(shapes.CupidsBow(c).build()) ** 2 == pytest.approx(s2, rel=1e-12)


def test_identity_chain_random_polygons():
    rng = np.random.default_rng(8)
    for _ in range(30):
        b = geometry.polygon_to_boundary(star_polygon(rng))
        rep = bounds.bound_report(b)
        assert abs(rep.beta_lower_HP_claimed - (1 + bounds.m_of(b)) ** -0.5) <= 1e-12
        assert abs(rep.beta_lower_proven - (1 + rep.M) ** -0.5) <= 1e-12
        rep.check()


def test_report_flags_and_ordering():
    rep = bounds.bound_report(shapes.Ellipse(1.0, 2.0, center=(0.2, 0.0)).build())
    assert rep.flags["m"] == bounds.CLAIMED
    assert rep.flags["beta_lower_HP_claimed"] == bounds.CLAIMED
    assert rep.flags["M"] == bounds.PROVEN
    assert rep.flags["K_upper_smooth_only"] == bounds.SMOOTH_ONLY
    assert rep.beta_lower_Rrho <= rep.beta_lower_proven <= rep.beta_lower_HP_claimed + 1e-12
    assert rep.beta_upper is None


def test_report_json_round_trip():
    rep = bounds.bound_report(shapes.RegularPolygon(6, 1.0).build())
    again = bounds.BoundReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert again == rep


def test_report_check_detects_inconsistency():
    rep = bounds.bound_report(shapes.RegularPolygon(4, 1.0).build())
    rep.beta_lower_Rrho = 0.9
    with pytest.raises(IdentityError):
        rep.check()


def test_tangent_ray_rejected():
    from infsup.geometry import StarShapeError

    # the kernel of this L-shape is the unit square; its corner is on two side lines
    with pytest.raises(StarShapeError):
        geometry.polygon_to_boundary(geometry.PolygonSpec(
            ((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)), (1.0, 1.0)))
