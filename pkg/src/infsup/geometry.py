"""Polar description of star-shaped plane domains.

A boundary is stored as a cyclic list of analytic pieces ``r = f(theta)``
around a chosen center.  Every piece owns its angular interval
``[t0, t1]`` (unwrapped, ``t0 < t1``) and gives closed forms for ``f`` and
``f'``.  On construction the boundary is rescaled so that ``max f = 1``;
the factor removed is kept in ``normalization_scale``.

Suprema and infima over the boundary are taken per piece: a uniform grid,
endpoints included (these are the one-sided limits at joints), followed by
golden-section refinement of the three best cells.  Pieces whose extremal
points are known in closed form skip the grid.
"""

from __future__ import annotations

import bisect
import dataclasses
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import integrate

from .optimize import golden_section

TWO_PI = 2.0 * math.pi
DEFAULT_GRID = 4096
DEFAULT_TOL = 1e-10
JOINT_TOL = 1e-12
CONTINUITY_RTOL = 1e-9


class GeometryError(ValueError):
    """Malformed boundary or polygon description."""


class StarShapeError(GeometryError):
    """The domain is not strictly star-shaped with respect to its center."""

    def __init__(self, message, theta=None, side=None):
        super().__init__(message)
        self.theta = theta
        self.side = side


class NumericError(ArithmeticError):
    """A quadrature did not reach the requested tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


def reduce_angle(theta):
    """Map an angle to ``[0, 2pi)``."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


def _wrap_pi(x):
    # into (-pi, pi]
    return x - TWO_PI * math.ceil((x - math.pi) / TWO_PI)


# ---------------------------------------------------------------------------
# Boundary pieces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Piece:
    t0: float
    t1: float

    kind = "piece"

    @property
    def length(self):
        return self.t1 - self.t0

    def f(self, theta):
        raise NotImplementedError

    def fp(self, theta):
        raise NotImplementedError

    def scaled(self, k):
        raise NotImplementedError

    def shifted(self, dt):
        return dataclasses.replace(self, t0=self.t0 + dt, t1=self.t1 + dt)

    def with_interval(self, t0, t1):
        return dataclasses.replace(self, t0=t0, t1=t1)

    def critical_angles(self):
        """Angles carrying every extremum we ever need, or None if unknown."""
        return None

    def area(self, lo=None, hi=None):
        lo = self.t0 if lo is None else lo
        hi = self.t1 if hi is None else hi
        if hi <= lo:
            return 0.0
        val, err = integrate.quad(
            lambda t: 0.5 * float(self.f(t)) ** 2, lo, hi,
            epsabs=1e-15, epsrel=DEFAULT_TOL, limit=200,
        )
        if err > max(10 * DEFAULT_TOL * abs(val), 1e-13):
            raise NumericError(
                f"sector quadrature on [{lo}, {hi}] stalled at error {err:.3g}",
                achieved=err,
            )
        return val

    def _check_positive(self):
        th = np.linspace(self.t0, self.t1, 33)
        vals = np.asarray(self.f(th), dtype=float)
        if not np.all(np.isfinite(vals)) or np.any(vals <= 0):
            i = int(np.argmin(np.where(np.isfinite(vals), vals, -np.inf)))
            raise StarShapeError(
                f"{self.kind} piece has no positive radius at theta={th[i]:.6g}",
                theta=float(th[i]),
            )


@dataclass(frozen=True)
class Segment(_Piece):
    """Straight side at distance ``d`` from the center; foot of the
    perpendicular at angle ``foot``.  ``f = d / cos(theta - foot)``."""

    d: float = 1.0
    foot: float = 0.0

    kind = "segment"

    def __post_init__(self):
        if not self.d > 0:
            raise StarShapeError(
                f"segment line passes through the center (d={self.d})",
                theta=self.foot,
            )
        for t in (self.t0, self.t1):
            if abs(_wrap_pi(t - self.foot)) >= math.pi / 2:
                raise StarShapeError(
                    f"segment interval leaves the half-plane of its line at theta={t:.6g}",
                    theta=t,
                )
        if self.t1 - self.t0 >= math.pi:
            raise StarShapeError("segment subtends an angle >= pi", theta=self.t0)

    def f(self, theta):
        return self.d / np.cos(theta - self.foot)

    def fp(self, theta):
        c = np.cos(theta - self.foot)
        return self.d * np.sin(theta - self.foot) / (c * c)

    def scaled(self, k):
        return dataclasses.replace(self, d=self.d * k)

    def critical_angles(self):
        out = [self.t0, self.t1]
        # foot angle, unwrapped into the interval
        phi = self.t0 + _wrap_pi(self.foot - self.t0)
        while phi < self.t0:
            phi += TWO_PI
        if self.t0 < phi < self.t1:
            out.append(phi)
        return out

    def area(self, lo=None, hi=None):
        lo = self.t0 if lo is None else lo
        hi = self.t1 if hi is None else hi
        if hi <= lo:
            return 0.0
        return 0.5 * self.d ** 2 * (math.tan(hi - self.foot) - math.tan(lo - self.foot))


@dataclass(frozen=True)
class LogSpiral(_Piece):
    """``f = amplitude * exp(sign * rate * (theta - t0))``; ``|f'/f| = rate``."""

    amplitude: float = 1.0
    rate: float = 1.0
    sign: int = -1

    kind = "logspiral"

    def __post_init__(self):
        if not self.amplitude > 0:
            raise GeometryError("log spiral amplitude must be positive")
        if self.rate < 0:
            raise GeometryError("log spiral rate must be nonnegative")
        if self.sign not in (-1, 1):
            raise GeometryError("log spiral sign must be +1 or -1")

    def f(self, theta):
        return self.amplitude * np.exp(self.sign * self.rate * (np.asarray(theta) - self.t0))

    def fp(self, theta):
        return self.sign * self.rate * self.f(theta)

    def scaled(self, k):
        return dataclasses.replace(self, amplitude=self.amplitude * k)

    def shifted(self, dt):
        # amplitude is tied to t0, which moves with the interval
        return dataclasses.replace(self, t0=self.t0 + dt, t1=self.t1 + dt)

    def with_interval(self, t0, t1):
        return dataclasses.replace(self, t0=t0, t1=t1, amplitude=float(self.f(t0)))

    def critical_angles(self):
        return [self.t0, self.t1]

    def area(self, lo=None, hi=None):
        lo = self.t0 if lo is None else lo
        hi = self.t1 if hi is None else hi
        if hi <= lo:
            return 0.0
        k = 2.0 * self.sign * self.rate
        a2 = float(self.f(lo)) ** 2
        if k == 0.0:
            return 0.5 * a2 * (hi - lo)
        return a2 * math.expm1(k * (hi - lo)) / (2.0 * k)


def _conic_ray(theta, cx, cy, ia2, ib2, branch):
    """Radius along ``theta`` to the axis-aligned conic
    ``(x-cx)^2 ia2 + (y-cy)^2 ib2 = 1`` and its theta-derivative."""
    c, s = np.cos(theta), np.sin(theta)
    A = c * c * ia2 + s * s * ib2
    B = cx * c * ia2 + cy * s * ib2
    C = cx * cx * ia2 + cy * cy * ib2 - 1.0
    disc = B * B - A * C
    with np.errstate(invalid="ignore", divide="ignore"):
        root = np.sqrt(disc)
        r = (B + branch * root) / A
        dA = 2.0 * s * c * (ib2 - ia2)
        dB = -cx * s * ia2 + cy * c * ib2
        # implicit differentiation of A r^2 - 2 B r + C = 0
        rp = -(dA * r * r - 2.0 * dB * r) / (2.0 * branch * root)
    return r, rp, disc


@dataclass(frozen=True)
class CircularArc(_Piece):
    """Arc of the circle with given ``center`` (relative to the polar origin)
    and ``radius``.  ``branch=+1`` takes the far intersection of the ray,
    ``-1`` the near one."""

    center: tuple = (0.0, 0.0)
    radius: float = 1.0
    branch: int = 1

    kind = "circle"

    def __post_init__(self):
        if not self.radius > 0:
            raise GeometryError("circle radius must be positive")
        if self.branch not in (-1, 1):
            raise GeometryError("branch must be +1 or -1")
        self._check_positive()

    def _eval(self, theta):
        ir2 = 1.0 / self.radius ** 2
        return _conic_ray(theta, self.center[0], self.center[1], ir2, ir2, self.branch)

    def f(self, theta):
        return self._eval(theta)[0]

    def fp(self, theta):
        return self._eval(theta)[1]

    def scaled(self, k):
        return dataclasses.replace(
            self, center=(self.center[0] * k, self.center[1] * k), radius=self.radius * k
        )

    def critical_angles(self):
        if self.center == (0.0, 0.0):
            return [self.t0, self.t1]
        return None


@dataclass(frozen=True)
class EllipseArc(_Piece):
    """Arc of the axis-aligned ellipse ``(x-cx)^2/a^2 + (y-cy)^2/b^2 = 1``."""

    a: float = 1.0
    b: float = 1.0
    center: tuple = (0.0, 0.0)
    branch: int = 1

    kind = "ellipse"

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise GeometryError("ellipse semi-axes must be positive")
        if self.branch not in (-1, 1):
            raise GeometryError("branch must be +1 or -1")
        self._check_positive()

    def _eval(self, theta):
        return _conic_ray(
            theta, self.center[0], self.center[1],
            1.0 / self.a ** 2, 1.0 / self.b ** 2, self.branch,
        )

    def f(self, theta):
        return self._eval(theta)[0]

    def fp(self, theta):
        return self._eval(theta)[1]

    def scaled(self, k):
        return dataclasses.replace(
            self, a=self.a * k, b=self.b * k,
            center=(self.center[0] * k, self.center[1] * k),
        )


BoundaryPiece = _Piece


# ---------------------------------------------------------------------------
# Extrema over pieces
# ---------------------------------------------------------------------------


def _grid_size(piece, grid):
    return max(int(math.ceil(grid * piece.length / TWO_PI)), 8) + 1


def _clean(vals, maximize):
    vals = np.asarray(vals, dtype=float)
    bad = np.isnan(vals)
    if bad.any():
        vals = np.where(bad, -np.inf if maximize else np.inf, vals)
    return vals


def piece_extremum(piece, func, *, maximize=True, grid=DEFAULT_GRID,
                   tol=DEFAULT_TOL, refine=3, cache=None):
    """Extremum of ``func(theta, f, fp)`` over the closed piece interval.

    ``func`` must accept numpy arrays and scalars alike.  Returns
    ``(value, theta)``.  ``cache`` may hold a precomputed
    ``(theta, f, fp)`` grid for the piece.
    """
    crit = piece.critical_angles()
    if crit is not None:
        th = np.asarray(crit, dtype=float)
        vals = _clean(func(th, piece.f(th), piece.fp(th)), maximize)
        i = int(np.argmax(vals) if maximize else np.argmin(vals))
        return float(vals[i]), float(th[i])

    if cache is None:
        th = np.linspace(piece.t0, piece.t1, _grid_size(piece, grid))
        fv, fpv = piece.f(th), piece.fp(th)
    else:
        th, fv, fpv = cache
    vals = _clean(func(th, fv, fpv), maximize)
    order = np.argsort(-vals if maximize else vals, kind="stable")
    best_i = int(order[0])
    best_v, best_t = float(vals[best_i]), float(th[best_i])
    if not math.isfinite(best_v):
        return best_v, best_t

    def scalar(t):
        return float(func(t, piece.f(t), piece.fp(t)))

    n = len(th)
    for i in order[:refine]:
        i = int(i)
        lo, hi = th[max(i - 1, 0)], th[min(i + 1, n - 1)]
        t, v = golden_section(scalar, lo, hi, tol=tol, maximize=maximize)
        if v != v:
            continue
        if (v > best_v) if maximize else (v < best_v):
            best_v, best_t = v, t
    return best_v, best_t


# ---------------------------------------------------------------------------
# The boundary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolarBoundary:
    """Normalized polar boundary ``r = f(theta)`` around ``center``.

    Use :meth:`from_pieces` to build one; it validates the partition of the
    torus, continuity at joints and positivity, then rescales to
    ``max f = 1``.
    """

    pieces: tuple
    center: tuple = (0.0, 0.0)
    normalization_scale: float = 1.0

    @classmethod
    def from_pieces(cls, pieces: Sequence[_Piece], center=(0.0, 0.0), *,
                    normalize=True, grid=DEFAULT_GRID):
        pieces = list(pieces)
        if not pieces:
            raise GeometryError("boundary needs at least one piece")
        for i, p in enumerate(pieces):
            if not p.t1 > p.t0:
                raise GeometryError(f"piece {i} has an empty interval [{p.t0}, {p.t1}]")
        for i in range(len(pieces) - 1):
            gap = pieces[i + 1].t0 - pieces[i].t1
            if abs(gap) > 1e-9:
                raise GeometryError(
                    f"pieces {i} and {i + 1} leave a {'gap' if gap > 0 else 'overlap'} "
                    f"of {abs(gap):.3g} rad at theta={pieces[i].t1:.6g}"
                )
        total = pieces[-1].t1 - pieces[0].t0
        if abs(total - TWO_PI) > 1e-9:
            raise GeometryError(f"pieces cover {total:.12g} rad instead of 2*pi")

        # first piece starts in [0, 2pi); joints made exactly shared
        shift = reduce_angle(pieces[0].t0) - pieces[0].t0
        pieces = [p.shifted(shift) for p in pieces]
        start = pieces[0].t0
        fixed = []
        for i, p in enumerate(pieces):
            t0 = fixed[-1].t1 if fixed else start
            t1 = start + TWO_PI if i == len(pieces) - 1 else p.t1
            fixed.append(p.with_interval(t0, t1) if (t0, t1) != (p.t0, p.t1) else p)
        pieces = fixed

        for i, p in enumerate(pieces):
            q = pieces[(i + 1) % len(pieces)]
            a = float(p.f(p.t1))
            b = float(q.f(q.t0))
            if not (a > 0 and b > 0):
                raise StarShapeError(f"nonpositive radius at theta={p.t1:.6g}", theta=p.t1)
            if abs(a - b) > CONTINUITY_RTOL * max(a, b):
                raise GeometryError(
                    f"boundary jumps from r={a:.12g} to r={b:.12g} at theta={reduce_angle(p.t1):.6g}"
                )

        center = (float(center[0]), float(center[1]))
        scale = 1.0
        if normalize:
            rmax = max(
                piece_extremum(p, lambda t, f, fp: f, maximize=True, grid=grid)[0]
                for p in pieces
            )
            if not (math.isfinite(rmax) and rmax > 0):
                raise GeometryError("boundary radius is unbounded")
            scale = rmax
            if rmax != 1.0:
                pieces = [p.scaled(1.0 / rmax) for p in pieces]
        return cls(tuple(pieces), center, scale)

    # -- bookkeeping --------------------------------------------------------

    @property
    def breaks(self):
        return [p.t0 for p in self.pieces] + [self.pieces[-1].t1]

    def normalized(self):
        """Rescale again so that ``max f = 1``; a no-op on normalized input."""
        b = PolarBoundary.from_pieces(self.pieces, self.center)
        return dataclasses.replace(b, normalization_scale=self.normalization_scale * b.normalization_scale)

    def locate(self, theta):
        """Return ``(index, unwrapped theta, at_joint)`` for an angle."""
        start = self.pieces[0].t0
        t = start + reduce_angle(theta - start)
        breaks = self.breaks
        i = bisect.bisect_right(breaks, t) - 1
        i = min(max(i, 0), len(self.pieces) - 1)
        at_joint = abs(t - breaks[i]) <= JOINT_TOL
        if abs(t - breaks[i + 1]) <= JOINT_TOL:
            i = (i + 1) % len(self.pieces)
            t = self.pieces[i].t0
            at_joint = True
        if at_joint:
            t = self.pieces[i].t0
        return i, t, at_joint

    def _left(self, i):
        """Previous piece and the unwrapped angle of joint ``i`` in its frame."""
        j = (i - 1) % len(self.pieces)
        return self.pieces[j], self.pieces[j].t1

    def f_array(self, theta):
        """Vectorized ``f`` for an array of angles (no joint special-casing)."""
        theta = np.asarray(theta, dtype=float)
        start = self.pieces[0].t0
        t = start + np.mod(theta - start, TWO_PI)
        idx = np.clip(np.searchsorted(self.breaks, t, side="right") - 1, 0, len(self.pieces) - 1)
        out = np.empty_like(t)
        for k, p in enumerate(self.pieces):
            m = idx == k
            if m.any():
                out[m] = p.f(t[m])
        return out

    def fp_array(self, theta):
        theta = np.asarray(theta, dtype=float)
        start = self.pieces[0].t0
        t = start + np.mod(theta - start, TWO_PI)
        idx = np.clip(np.searchsorted(self.breaks, t, side="right") - 1, 0, len(self.pieces) - 1)
        out = np.empty_like(t)
        for k, p in enumerate(self.pieces):
            m = idx == k
            if m.any():
                out[m] = p.fp(t[m])
        return out

    def one_sided(self, theta):
        """``[(f, f'), ...]``: one pair in a piece interior, two (left,
        right) at a joint."""
        i, t, joint = self.locate(theta)
        p = self.pieces[i]
        right = (float(p.f(t)), float(p.fp(t)))
        if not joint:
            return [right]
        q, tl = self._left(i)
        return [(float(q.f(tl)), float(q.fp(tl))), right]

    def extremum(self, func, *, maximize=True, grid=DEFAULT_GRID, tol=DEFAULT_TOL):
        """Extremum of ``func(theta, f, fp)`` over all pieces and joint
        limits; returns ``(value, theta in [0, 2pi))``."""
        best = None
        for p in self.pieces:
            v, t = piece_extremum(p, func, maximize=maximize, grid=grid, tol=tol)
            if best is None or ((v > best[0]) if maximize else (v < best[0])):
                best = (v, t)
        return best[0], reduce_angle(best[1])


# ---------------------------------------------------------------------------
# Pointwise quantities
# ---------------------------------------------------------------------------


def eval_f(boundary: PolarBoundary, theta: float) -> float:
    """Normalized radius in direction ``theta``."""
    i, t, _ = boundary.locate(theta)
    return float(boundary.pieces[i].f(t))


def eval_fprime(boundary: PolarBoundary, theta: float):
    """``f'(theta)``; a ``(left, right)`` pair at a joint."""
    vals = boundary.one_sided(theta)
    if len(vals) == 1:
        return vals[0][1]
    return (vals[0][1], vals[1][1])


def _tan_gamma(f, fp):
    return np.abs(fp) / f


def gamma(boundary: PolarBoundary, theta: float) -> float:
    """Angle between the ray from the center and the outer normal."""
    return max(math.atan(abs(fp) / f) for f, fp in boundary.one_sided(theta))


def max_tan_gamma(boundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL):
    """``(sup |f'/f|, theta)`` over the boundary."""
    return boundary.extremum(lambda t, f, fp: _tan_gamma(f, fp), maximize=True,
                             grid=grid, tol=tol)


def horgan_payne_angle(boundary: PolarBoundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> float:
    """``omega = pi/2 - sup gamma``: smallest angle between ray and tangent."""
    T, theta = max_tan_gamma(boundary, grid=grid, tol=tol)
    if not math.isfinite(T):
        raise StarShapeError(
            f"boundary is tangent to the ray at theta={theta:.6g}; "
            "the domain is not strictly star-shaped w.r.t. its center",
            theta=theta,
        )
    return math.atan2(1.0, T)


def _support_distance(t, f, fp):
    # f cos(gamma) = f^2 / sqrt(f^2 + f'^2), distance of the tangent line
    with np.errstate(invalid="ignore", divide="ignore"):
        out = f / np.sqrt(1.0 + (fp / f) ** 2)
    return np.where(np.isfinite(fp), out, 0.0)


def rho_max(boundary: PolarBoundary, *, native=False, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> float:
    """Radius of the largest disk at the center w.r.t. which the domain is
    star-shaped: the infimum of ``f cos(gamma)``."""
    v, _ = boundary.extremum(_support_distance, maximize=False, grid=grid, tol=tol)
    v = max(v, 0.0)
    return v * boundary.normalization_scale if native else v


def r_min(boundary: PolarBoundary, *, native=False, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> float:
    """Radius of the smallest disk at the center containing the domain."""
    v, _ = boundary.extremum(lambda t, f, fp: f, maximize=True, grid=grid, tol=tol)
    return v * boundary.normalization_scale if native else v


def sector_area(boundary: PolarBoundary, lo: float, hi: float, *, native=False) -> float:
    """Area of the part of the domain with polar angle in ``[lo, hi]``
    (``hi - lo <= 2pi``)."""
    if hi < lo:
        raise ValueError("sector needs lo <= hi")
    if hi - lo > TWO_PI + 1e-12:
        raise ValueError("sector wider than 2*pi")
    start = boundary.pieces[0].t0
    a = start + reduce_angle(lo - start)
    b = a + (hi - lo)
    total = 0.0
    for wrap in (0.0, TWO_PI):
        for p in boundary.pieces:
            u, v = max(a, p.t0 + wrap), min(b, p.t1 + wrap)
            if v > u:
                total += p.area(u - wrap, v - wrap)
    return total * boundary.normalization_scale ** 2 if native else total


def area(boundary: PolarBoundary, *, native=False) -> float:
    """Area of the domain, ``int f^2/2 dtheta``."""
    total = sum(p.area() for p in boundary.pieces)
    return total * boundary.normalization_scale ** 2 if native else total


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolygonSpec:
    """Vertex list plus a center ``x0``.  Side ``j`` joins vertex ``j`` to
    vertex ``j+1`` (cyclically)."""

    vertices: tuple
    center: tuple = (0.0, 0.0)

    def __post_init__(self):
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        if not all(math.isfinite(c) for v in verts for c in v):
            raise GeometryError("polygon vertices must be finite")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    @property
    def J(self):
        return len(self.vertices)

    def signed_area(self):
        v = self.vertices
        return 0.5 * sum(
            v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
            for i in range(len(v))
        )

    def ccw(self):
        """Same polygon with counterclockwise vertex order."""
        if self.signed_area() < 0:
            return PolygonSpec(tuple(reversed(self.vertices)), self.center)
        return self

    def barycenter(self):
        """Centroid of the polygonal region."""
        v = self.vertices
        A = self.signed_area()
        cx = cy = 0.0
        for i in range(len(v)):
            x0, y0 = v[i]
            x1, y1 = v[(i + 1) % len(v)]
            w = x0 * y1 - x1 * y0
            cx += (x0 + x1) * w
            cy += (y0 + y1) * w
        return (cx / (6 * A), cy / (6 * A))

    def _side(self, j):
        v = self.vertices
        (x0, y0), (x1, y1) = v[j], v[(j + 1) % len(v)]
        return (x0, y0), (x1, y1)

    def radii(self):
        """``r_j``: distance from the center to the farther end of side j."""
        cx, cy = self.center
        return tuple(
            max(math.hypot(a[0] - cx, a[1] - cy), math.hypot(b[0] - cx, b[1] - cy))
            for a, b in map(self._side, range(self.J))
        )

    def distances(self):
        """``d_j``: distance from the center to the line carrying side j."""
        cx, cy = self.center
        out = []
        for a, b in map(self._side, range(self.J)):
            ux, uy = b[0] - a[0], b[1] - a[1]
            out.append(abs(ux * (cy - a[1]) - uy * (cx - a[0])) / math.hypot(ux, uy))
        return tuple(out)


def polygon_to_boundary(poly: PolygonSpec) -> PolarBoundary:
    """One :class:`Segment` per side, with exact ``(d_j, foot_j)``.

    Raises :class:`StarShapeError` naming the first side whose line does
    not keep the center strictly on the interior side.
    """
    poly = poly.ccw()
    cx, cy = poly.center
    pieces = []
    theta = None
    for j in range(poly.J):
        (ax, ay), (bx, by) = poly._side(j)
        ux, uy = bx - ax, by - ay
        L = math.hypot(ux, uy)
        if L == 0:
            raise GeometryError(f"side {j} has zero length")
        cross = ux * (cy - ay) - uy * (cx - ax)
        d = cross / L
        scale = max(math.hypot(ax - cx, ay - cy), math.hypot(bx - cx, by - cy))
        ta = math.atan2(ay - cy, ax - cx)
        if d <= 1e-14 * scale:
            raise StarShapeError(
                f"center {poly.center} is not strictly inside the kernel: "
                f"side {j} ({ax:g},{ay:g})-({bx:g},{by:g}) does not face it",
                theta=reduce_angle(ta), side=j,
            )
        # foot of the perpendicular from the center
        s = ((cx - ax) * ux + (cy - ay) * uy) / (L * L)
        px, py = ax + s * ux, ay + s * uy
        foot = math.atan2(py - cy, px - cx)
        dtheta = reduce_angle(math.atan2(by - cy, bx - cx) - ta)
        if theta is None:
            theta = ta
        pieces.append(Segment(theta, theta + dtheta, d=d, foot=foot))
        theta += dtheta
    total = theta - pieces[0].t0
    if abs(total - TWO_PI) > 1e-9:
        raise StarShapeError(
            f"polygon winds {total / TWO_PI:.3f} times around the center; "
            "it is not simple or not star-shaped w.r.t. the center",
            theta=None, side=None,
        )
    return PolarBoundary.from_pieces(pieces, poly.center)


def disk_boundary(radius=1.0, offset=(0.0, 0.0)) -> PolarBoundary:
    """Disk of given radius whose center sits at ``offset`` from the polar
    origin (``center`` of the returned boundary is the polar origin)."""
    ox, oy = offset
    if math.hypot(ox, oy) >= radius:
        raise StarShapeError("polar origin is not inside the disk")
    arc = CircularArc(0.0, TWO_PI, center=(-ox, -oy), radius=radius)
    return PolarBoundary.from_pieces([arc], center=(ox, oy))
