"""Acceptance suite: one test per criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""

import math
import time

import mpmath
import numpy as np
from scipy.optimize import brentq

from infsup import bounds, geometry, shapes

from helpers import star_polygon


def test_criterion_1_disk():
    t0 = time.perf_counter()
    b = shapes.Disk(1.0).build()
    rep = bounds.bound_report(b)
    elapsed = time.perf_counter() - t0
    assert abs(rep.m - 1.0) <= 1e-10
    assert abs(rep.M - 1.0) <= 1e-10
    assert abs(rep.beta_lower_proven - 1 / math.sqrt(2)) <= 1e-10
    assert abs(rep.Gamma_upper_proven - 1.0) <= 1e-10
    assert elapsed < 1.0


def test_criterion_2_ellipses():
    t0 = time.perf_counter()
    for a, b in [(1, 1.5), (1, 2), (1, 5)]:
        bd = shapes.Ellipse(a, b).build()
        exact = b * b / (a * a)
        assert abs(bounds.M_of(bd).M - exact) < 1e-6
        assert abs(bounds.m_of(bd) - exact) < 1e-6
    assert time.perf_counter() - t0 < 5.0


def test_criterion_3_square():
    poly = shapes.Rectangle(2.0, 2.0).polygon()
    exact = 3 + 2 * math.sqrt(2)
    M_poly = bounds.polygon_M(poly)
    M_closed, _ = bounds.closed_form_dM(1 / math.sqrt(2))
    assert abs(M_poly - exact) <= 1e-10
    assert abs(M_closed - exact) <= 1e-10
    C_upper = bounds.convert("Gamma", M_poly).C
    assert abs(C_upper - (4 + 2 * math.sqrt(2))) <= 1e-10
    assert C_upper >= 1 / (0.5 - 1 / math.pi)


def _cupid_margin(c):
    # closed forms written out independently of the package
    claimed = (math.sqrt(c * c + 1) - c) / (2 * math.sqrt(c * c + 1))
    upper = 128 / 3 * c * math.exp(-c * math.pi) / (1 - math.exp(-c * math.pi))
    return claimed - upper


def test_criterion_4_cupid():
    ref = shapes.family_report("cupid", 2.58)
    assert ref.upper_beta2 < 0.0333
    assert ref.claimed_beta2 > 0.0337
    assert ref.verdict == shapes.REFUTED

    t0 = time.perf_counter()
    th = shapes.refutation_threshold("cupid", 1.0, 4.0)
    assert time.perf_counter() - t0 < 10.0
    oracle = brentq(_cupid_margin, 1.0, 4.0, xtol=1e-14)
    assert th.value == float(f"{oracle:.3g}")
    assert th.other <= oracle <= th.refuting


def test_criterion_5_stadium_octagon():
    eps = 0.01
    st = shapes.family_report("stadium", eps)
    assert st.verdict == shapes.REFUTED
    s = math.sqrt(1 - eps * eps)
    half = 2 * s * (1 / eps - 1) + math.pi - (math.asin(eps) - s * eps)
    assert math.isclose(st.claimed_beta2, (1 - s) / 2, rel_tol=1e-12)
    assert math.isclose(st.upper_beta2, 64 / 3 * eps ** 2 / half, rel_tol=1e-12)
    assert abs(st.upper_beta2 / eps ** 3 / (32 / 3) - 1) < 0.01

    q = 0.003
    oc = shapes.family_report("octagon", q)
    assert oc.verdict == shapes.REFUTED
    assert math.isclose(oc.upper_beta2, 64 * math.sqrt(2) / 3 * q ** 3 / (1 + q * q), rel_tol=1e-12)
    assert abs(oc.upper_beta2 / q ** 3 / (64 * math.sqrt(2) / 3) - 1) < 0.01


def test_criterion_6_property_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20261017)
    violations = 0
    for _ in range(200):
        b = geometry.polygon_to_boundary(star_polygon(rng))
        m = bounds.m_of(b)
        M = bounds.M_of(b).M
        rr = bounds.radii_ratio_bounds(b)
        violations += m > M + 1e-8
        violations += M > rr.M_tau + 1e-8
        assert abs(math.sin(rr.psi / 2) - (1 + rr.M_tau) ** -0.5) <= 1e-12
        omega = geometry.horgan_payne_angle(b)
        assert abs(math.sin(omega / 2) - (1 + m) ** -0.5) <= 1e-12
    assert violations == 0

    # stationarity of alpha(theta) on sampled boundary points; the finite
    # difference runs in 40-digit arithmetic so roundoff cannot mask it
    mpmath.mp.dps = 40
    pool = [geometry.polygon_to_boundary(star_polygon(rng)) for _ in range(20)]
    pool += [shapes.Ellipse(1.0, b, center=(0.1, -0.05)).build() for b in (1.3, 2.0, 4.0)]
    pool += [shapes.CupidsBow(c).build() for c in (0.5, 2.58)]
    worst = 0.0
    n = 0
    while n < 1000:
        b = pool[int(rng.integers(len(pool)))]
        theta = rng.uniform(0.0, 2 * math.pi)
        f, fp = b.one_sided(theta)[0]
        if abs(fp / f) < 0.1:
            # alpha(theta) approaches the pole of P as t -> 0 and the
            # difference quotient's own truncation error grows like 1/t^2
            continue
        a = bounds.alpha_theta(b, theta)
        F, Fp, A, h = mpmath.mpf(f), mpmath.mpf(fp), mpmath.mpf(a), mpmath.mpf("1e-6")

        def Pm(x):
            return 1 / (x * F ** 2) * (1 + Fp ** 2 / (F ** 2 - x * F ** 4))

        worst = max(worst, float(abs((Pm(A + h) - Pm(A - h)) / (2 * h))))
        n += 1
    assert worst <= 1e-9
    assert time.perf_counter() - t0 < 60.0


def test_criterion_7_polygon_oracle():
    rng = np.random.default_rng(7)
    for _ in range(50):
        poly = star_polygon(rng)
        b = geometry.polygon_to_boundary(poly)
        Mp = bounds.polygon_M(poly)
        # relative above 1: evaluating P next to its pole costs ~M ulps
        assert abs(Mp - bounds.M_of(b).M) <= 1e-8 * max(1.0, Mp)


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
