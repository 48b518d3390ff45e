"""Domain families: the classical examples where ``m = M`` and the three
counterexample families to the Horgan-Payne inequality.

Every shape builds an exact piecewise boundary.  The counterexamples also
provide the closed-form measures of their vertical cut through the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, NamedTuple, Optional

from . import bounds, cutbound, geometry
from .cutbound import CutSpec
from .geometry import (
    TWO_PI,
    CircularArc,
    EllipseArc,
    GeometryError,
    LogSpiral,
    PolarBoundary,
    PolygonSpec,
    Segment,
)

REFUTED = "REFUTED"
NOT_REFUTED = "NOT-REFUTED"


def _positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be a positive real, got {value!r}")


def _half_angle_sin2(sin_w, cos_w):
    # sin^2(w/2) = (1 - cos w)/2 without cancellation
    return sin_w * sin_w / (2.0 * (1.0 + cos_w))


class _Shape:
    kind: ClassVar[str] = "shape"

    def build(self) -> PolarBoundary:
        raise NotImplementedError

    def reference(self) -> dict:
        return {}


class _PolygonShape(_Shape):
    center: Optional[tuple]

    def vertices(self):
        raise NotImplementedError

    def default_center(self):
        return (0.0, 0.0)

    def polygon(self) -> PolygonSpec:
        c = self.default_center() if self.center is None else tuple(self.center)
        return PolygonSpec(tuple(self.vertices()), c)

    def build(self):
        return geometry.polygon_to_boundary(self.polygon())


@dataclass(frozen=True)
class Disk(_Shape):
    R: float = 1.0
    center: Optional[tuple] = None
    kind: ClassVar[str] = "disk"

    def __post_init__(self):
        _positive("R", self.R)

    def build(self):
        return geometry.disk_boundary(self.R, self.center or (0.0, 0.0))

    def reference(self):
        if self.center not in (None, (0.0, 0.0), [0.0, 0.0]):
            return {}
        return {"Gamma_exact": 1.0, "C_exact": 2.0, "beta_exact": 1.0 / math.sqrt(2.0)}


@dataclass(frozen=True)
class Ellipse(_Shape):
    """``x^2/a^2 + y^2/b^2 < 1``."""

    a: float = 1.0
    b: float = 1.0
    center: Optional[tuple] = None
    kind: ClassVar[str] = "ellipse"

    def __post_init__(self):
        _positive("a", self.a)
        _positive("b", self.b)

    def build(self):
        cx, cy = self.center or (0.0, 0.0)
        if (cx / self.a) ** 2 + (cy / self.b) ** 2 >= 1.0:
            raise geometry.StarShapeError("center lies outside the ellipse")
        arc = EllipseArc(0.0, TWO_PI, a=self.a, b=self.b, center=(-cx, -cy))
        return PolarBoundary.from_pieces([arc], center=(cx, cy))

    def reference(self):
        if self.center not in (None, (0.0, 0.0), [0.0, 0.0]):
            return {}
        G = (max(self.a, self.b) / min(self.a, self.b)) ** 2
        return {"Gamma_exact": G, "C_exact": G + 1.0, "beta_exact": 1.0 / math.sqrt(1.0 + G)}


def _square_reference():
    return {
        "C_lower_square": bounds.SQUARE_C_LOWER,
        "C_conjecture_square_refuted": bounds.SQUARE_C_CONJECTURE,
    }


@dataclass(frozen=True)
class RegularPolygon(_PolygonShape):
    n: int = 4
    circumradius: float = 1.0
    center: Optional[tuple] = None
    kind: ClassVar[str] = "regular_polygon"

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 3):
            raise ValueError(f"n must be an integer >= 3, got {self.n!r}")
        _positive("circumradius", self.circumradius)

    def vertices(self):
        R, n = self.circumradius, self.n
        return [
            (R * math.cos(math.pi / n + TWO_PI * k / n), R * math.sin(math.pi / n + TWO_PI * k / n))
            for k in range(n)
        ]

    def reference(self):
        return _square_reference() if self.n == 4 and self.center is None else {}


@dataclass(frozen=True)
class Rectangle(_PolygonShape):
    w: float = 1.0
    h: float = 1.0
    center: Optional[tuple] = None
    kind: ClassVar[str] = "rectangle"

    def __post_init__(self):
        _positive("w", self.w)
        _positive("h", self.h)

    def vertices(self):
        x, y = self.w / 2.0, self.h / 2.0
        return [(x, y), (-x, y), (-x, -y), (x, -y)]

    def reference(self):
        return _square_reference() if self.w == self.h and self.center is None else {}


@dataclass(frozen=True)
class Triangle(_PolygonShape):
    """Triangle with the barycenter as default center; ``center_rule``
    ``"incenter"`` picks the center of the inscribed circle instead."""

    points: tuple = ((1.0, 0.0), (-0.5, math.sqrt(3) / 2), (-0.5, -math.sqrt(3) / 2))
    center_rule: str = "barycenter"
    center: Optional[tuple] = None
    kind: ClassVar[str] = "triangle"

    def __post_init__(self):
        if len(self.points) != 3:
            raise ValueError("a triangle needs exactly 3 points")
        if self.center_rule not in ("barycenter", "incenter"):
            raise ValueError(f"unknown center_rule {self.center_rule!r}")
        if abs(PolygonSpec(tuple(self.points)).signed_area()) == 0.0:
            raise ValueError("triangle is degenerate")

    def vertices(self):
        return [tuple(map(float, p)) for p in self.points]

    def default_center(self):
        (ax, ay), (bx, by), (cx, cy) = self.vertices()
        if self.center_rule == "barycenter":
            return ((ax + bx + cx) / 3.0, (ay + by + cy) / 3.0)
        a = math.hypot(bx - cx, by - cy)
        b = math.hypot(ax - cx, ay - cy)
        c = math.hypot(ax - bx, ay - by)
        s = a + b + c
        return ((a * ax + b * bx + c * cx) / s, (a * ay + b * by + c * cy) / s)


@dataclass(frozen=True)
class Rhombus(_PolygonShape):
    """Diagonals ``p`` (along x) and ``q`` (along y)."""

    p: float = 2.0
    q: float = 1.0
    center: Optional[tuple] = None
    kind: ClassVar[str] = "rhombus"

    def __post_init__(self):
        _positive("p", self.p)
        _positive("q", self.q)

    def vertices(self):
        return [(self.p / 2, 0.0), (0.0, self.q / 2), (-self.p / 2, 0.0), (0.0, -self.q / 2)]


@dataclass(frozen=True)
class Polygon(_PolygonShape):
    """Arbitrary polygon; the center defaults to the barycenter."""

    points: tuple = ()
    center: Optional[tuple] = None
    kind: ClassVar[str] = "polygon"

    def vertices(self):
        return [tuple(map(float, p)) for p in self.points]

    def default_center(self):
        return PolygonSpec(tuple(self.vertices())).barycenter()


# ---------------------------------------------------------------------------
# Counterexamples
# ---------------------------------------------------------------------------


class _Counterexample(_Shape):
    #: parameter direction that makes the family more extreme
    extreme: ClassVar[int] = 1
    param_name: ClassVar[str] = ""

    @property
    def parameter(self):
        return getattr(self, self.param_name)

    def cut(self) -> CutSpec:
        raise NotImplementedError

    def sin_omega(self):
        """``(sin omega, cos omega)`` of the Horgan-Payne angle."""
        raise NotImplementedError

    def hp_claimed_beta2(self):
        return _half_angle_sin2(*self.sin_omega())

    def omega(self):
        s, c = self.sin_omega()
        return math.atan2(s, c)


@dataclass(frozen=True)
class CupidsBow(_Counterexample):
    """Four log-spiral arcs ``f = exp(-c (pi/2 - |pi/2 - |theta||))``."""

    c: float = 2.58
    kind: ClassVar[str] = "cupid"
    param_name: ClassVar[str] = "c"
    extreme: ClassVar[int] = 1

    def __post_init__(self):
        _positive("c", self.c)

    def build(self):
        c, h = self.c, math.pi / 2
        low = math.exp(-c * h)
        pieces = [
            LogSpiral(0.0, h, amplitude=1.0, rate=c, sign=-1),
            LogSpiral(h, math.pi, amplitude=low, rate=c, sign=1),
            LogSpiral(math.pi, 3 * h, amplitude=1.0, rate=c, sign=-1),
            LogSpiral(3 * h, TWO_PI, amplitude=low, rate=c, sign=1),
        ]
        return PolarBoundary.from_pieces(pieces)

    def sin_omega(self):
        r = math.hypot(1.0, self.c)
        return 1.0 / r, self.c / r

    def cut(self):
        half = -math.expm1(-self.c * math.pi) / (2.0 * self.c)
        return CutSpec(area_plus=half, area_minus=half, width=2.0 * math.exp(-self.c * math.pi / 2))


@dataclass(frozen=True)
class DoubleStadium(_Counterexample):
    """Two stadiums ``(s, s/eps) x (-1, 1)`` capped by unit disks at
    ``x = s`` and ``x = s/eps`` (``s = sqrt(1 - eps^2)``), mirrored in the
    vertical axis.  The inner disks meet the axis at ``(0, +-eps)``.

    Needs ``eps <= 1/sqrt(2)`` so the outer disks stay in their half-plane.
    """

    eps: float = 0.25
    kind: ClassVar[str] = "stadium"
    param_name: ClassVar[str] = "eps"
    extreme: ClassVar[int] = -1

    def __post_init__(self):
        _positive("eps", self.eps)
        if self.eps > 1.0 / math.sqrt(2.0) + 1e-15:
            raise ValueError(f"eps must lie in (0, 1/sqrt(2)], got {self.eps}")

    @property
    def s(self):
        return math.sqrt(1.0 - self.eps ** 2)

    def build(self):
        s, a = self.s, self.s / self.eps
        a1 = math.atan2(1.0, a)  # ray to the top of the outer disk
        a2 = math.atan2(1.0, s)  # ray to the top of the inner disk
        pi, h = math.pi, math.pi / 2
        pieces = [
            Segment(a1, a2, d=1.0, foot=h),
            CircularArc(a2, h, center=(s, 0.0), radius=1.0),
            CircularArc(h, pi - a2, center=(-s, 0.0), radius=1.0),
            Segment(pi - a2, pi - a1, d=1.0, foot=h),
            CircularArc(pi - a1, pi + a1, center=(-a, 0.0), radius=1.0),
            Segment(pi + a1, pi + a2, d=1.0, foot=3 * h),
            CircularArc(pi + a2, 3 * h, center=(-s, 0.0), radius=1.0),
            CircularArc(3 * h, TWO_PI - a2, center=(s, 0.0), radius=1.0),
            Segment(TWO_PI - a2, TWO_PI - a1, d=1.0, foot=3 * h),
            CircularArc(TWO_PI - a1, TWO_PI + a1, center=(a, 0.0), radius=1.0),
        ]
        return PolarBoundary.from_pieces(pieces)

    def sin_omega(self):
        return self.eps, self.s

    def half_area(self):
        """``|Omega_+|``: rectangle, two half disks, minus the cap of the
        inner disk beyond the axis."""
        e, s = self.eps, self.s
        cap = math.asin(e) - s * e
        return 2.0 * s * (1.0 / e - 1.0) + math.pi - cap

    def cut(self):
        half = self.half_area()
        return CutSpec(area_plus=half, area_minus=half, width=2.0 * self.eps)


@dataclass(frozen=True)
class OctagonCE(_Counterexample):
    """Octagon with corners at distance ``1, q, q^2, q, 1, q, q^2, q`` on
    the rays ``k pi/4``."""

    q: float = 0.25
    kind: ClassVar[str] = "octagon"
    param_name: ClassVar[str] = "q"
    extreme: ClassVar[int] = -1

    def __post_init__(self):
        _positive("q", self.q)
        if self.q >= 1.0:
            raise ValueError(f"q must lie in (0, 1), got {self.q}")

    def polygon(self):
        q = self.q
        radii = [1.0, q, q * q, q, 1.0, q, q * q, q]
        return PolygonSpec(
            tuple((r * math.cos(k * math.pi / 4), r * math.sin(k * math.pi / 4)) for k, r in enumerate(radii))
        )

    def build(self):
        return geometry.polygon_to_boundary(self.polygon())

    def sin_omega(self):
        u = self.q / math.sqrt(2.0)
        r = math.hypot(u, 1.0 - u)
        return u / r, (1.0 - u) / r

    def cut(self):
        q = self.q
        half = q * (1.0 + q * q) / math.sqrt(2.0)
        return CutSpec(area_plus=half, area_minus=half, width=2.0 * q * q)


FAMILIES = {"cupid": CupidsBow, "stadium": DoubleStadium, "octagon": OctagonCE}
KINDS = {
    cls.kind: cls
    for cls in (Disk, Ellipse, RegularPolygon, Rectangle, Triangle, Rhombus, Polygon,
                CupidsBow, DoubleStadium, OctagonCE)
}


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def build(spec: _Shape) -> PolarBoundary:
    return spec.build()


def reference_constants(spec: _Shape) -> dict:
    """Known exact constants (or reference bounds) for the shape; empty if
    none are known."""
    return spec.reference()


def counterexample_cut(spec: _Counterexample) -> CutSpec:
    """Closed-form cut measures in the family's native scale."""
    if not isinstance(spec, _Counterexample):
        raise TypeError(f"{type(spec).__name__} is not a counterexample family")
    return spec.cut()


@dataclass(frozen=True)
class Refutation:
    family: str
    parameter: float
    omega: float
    claimed_beta2: float
    upper_beta2: float
    margin: float
    verdict: str


def hp_refutation_report(spec: _Counterexample) -> Refutation:
    """Compare the Horgan-Payne claim ``beta^2 >= sin^2(omega/2)`` with the
    proven cut bound on ``beta^2``."""
    if not isinstance(spec, _Counterexample):
        raise TypeError(f"{type(spec).__name__} is not a counterexample family")
    claimed = spec.hp_claimed_beta2()
    upper = cutbound.beta_upper(spec.cut()) ** 2
    margin = cutbound.refutation_margin(claimed, upper)
    return Refutation(
        family=spec.kind,
        parameter=float(spec.parameter),
        omega=spec.omega(),
        claimed_beta2=claimed,
        upper_beta2=upper,
        margin=margin,
        verdict=REFUTED if margin > 0 else NOT_REFUTED,
    )


def family_report(family: str, value: float) -> Refutation:
    try:
        cls = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}") from None
    return hp_refutation_report(cls(value))


def _round_sig(x, sig=3):
    if x == 0:
        return 0.0
    return round(x, sig - 1 - int(math.floor(math.log10(abs(x)))))


class Threshold(NamedTuple):
    value: float  # rounded to the requested significant digits
    refuting: float  # refuting end of the final bracket
    other: float  # non-refuting end


def refutation_threshold(family: str, lo: float, hi: float, steps: int = 50, sig: int = 3):
    """Least extreme refuting parameter in ``[lo, hi]``.

    Scans ``steps`` equispaced values from the mild end, then bisects the
    first sign change of the margin until both ends of the bracket round to the
    same ``sig`` significant digits.  Returns ``None`` if
    nothing in range refutes.
    """
    cls = FAMILIES[family]
    if steps < 2:
        raise ValueError("need at least 2 sweep steps")
    xs = [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    if cls.extreme < 0:
        xs = xs[::-1]

    def refutes(x):
        return family_report(family, x).margin > 0

    prev = None
    for x in xs:
        if refutes(x):
            if prev is None:
                return Threshold(_round_sig(x, sig), x, x)
            good, bad = x, prev
            while True:
                # both ends agree to `sig` digits, or the threshold sits on
                # a rounding boundary and the bracket has collapsed
                if (_round_sig(good, sig) == _round_sig(bad, sig)
                        or abs(good - bad) <= 1e-12 * abs(good)):
                    return Threshold(_round_sig(good, sig), good, bad)
                mid = 0.5 * (good + bad)
                if refutes(mid):
                    good = mid
                else:
                    bad = mid
        prev = x
    return None
