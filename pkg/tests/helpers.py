"""Random polygon generators shared by the test modules."""

import math

import numpy as np

from infsup.geometry import PolygonSpec


def _angles(rng, J, max_gap=0.9 * math.pi):
    while True:
        a = np.sort(rng.uniform(0.0, 2 * math.pi, J))
        gaps = np.diff(np.append(a, a[0] + 2 * math.pi))
        if gaps.max() < max_gap and gaps.min() > 1e-3:
            return a


def star_polygon(rng, J=None):
    """Random polygon star-shaped about the origin (every side subtends
    less than pi, so the origin is strictly inside the kernel)."""
    J = J or int(rng.integers(3, 12))
    a = _angles(rng, J)
    r = rng.uniform(0.3, 1.0, J) * rng.uniform(0.5, 3.0)
    return PolygonSpec(tuple(zip(r * np.cos(a), r * np.sin(a))), (0.0, 0.0))


def cyclic_polygon(rng, J=None):
    J = J or int(rng.integers(3, 10))
    a = _angles(rng, J)
    R = rng.uniform(0.5, 2.0)
    return PolygonSpec(tuple(zip(R * np.cos(a), R * np.sin(a))), (0.0, 0.0))


def circumscribed_polygon(rng, J=None):
    """Tangent lines to the unit circle at random angles; vertices are the
    intersections of consecutive tangents."""
    J = J or int(rng.integers(3, 10))
    phi = _angles(rng, J, max_gap=0.8 * math.pi)
    verts = []
    for i in range(J):
        p, q = phi[i], phi[(i + 1) % J] + (2 * math.pi if i == J - 1 else 0.0)
        mid, half = 0.5 * (p + q), 0.5 * (q - p)
        verts.append((math.cos(mid) / math.cos(half), math.sin(mid) / math.cos(half)))
    return PolygonSpec(tuple(verts), (0.0, 0.0))
