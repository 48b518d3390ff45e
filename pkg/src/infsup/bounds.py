"""Bounds on the inf-sup constant of star-shaped plane domains.

The three constants are tied together by

    C = 1 / beta^2,    C = Gamma + 1,

so every upper bound on the Friedrichs constant ``Gamma`` is a lower bound
on ``beta``.  Two candidate upper bounds for ``Gamma`` come from the weight
function

    P(alpha, theta) = 1/(alpha f^2) * (1 + f'^2 / (f^2 - alpha f^4)),

namely ``M = inf_alpha sup_theta P`` (a theorem) and
``m = sup_theta inf_alpha P`` (the Horgan-Payne claim, false in general).
``m <= M`` always.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import geometry
from .geometry import DEFAULT_GRID, DEFAULT_TOL, PolarBoundary, PolygonSpec, StarShapeError
from .optimize import golden_section

ALPHA_DELTA = 1e-9
ALPHA_TOL = 1e-12
ALPHA_MAXITER = 200
IDENTITY_TOL = 1e-12

# provenance labels
PROVEN = "PROVEN"
CLAIMED = "CLAIMED"
GEOMETRIC = "GEOMETRIC"
SMOOTH_ONLY = "SMOOTH_ONLY"
ALPHA_LIMIT = "ALPHA_LIMIT"

SQUARE_C_LOWER = 1.0 / (0.5 - 1.0 / math.pi)
SQUARE_C_CONJECTURE = 3.5  # Horgan-Payne conjecture, known to be too small


class IdentityError(ArithmeticError):
    """An algebraic identity between two computed bounds failed."""


def _check_identity(a, b, what, tol=IDENTITY_TOL):
    if math.isfinite(a) and math.isfinite(b) and abs(a - b) > tol:
        raise IdentityError(f"{what}: {a!r} != {b!r}")


# ---------------------------------------------------------------------------
# The weight P and its pointwise minimizer
# ---------------------------------------------------------------------------


def p_value(alpha, f, fp):
    """``P`` from pointwise data ``(f, f')``; ``+inf`` on the pole
    ``alpha f^2 = 1`` unless ``f' = 0`` there."""
    f = np.asarray(f, dtype=float)
    fp = np.asarray(fp, dtype=float)
    u = alpha * f * f
    gap = 1.0 - u
    t2 = (fp / f) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        extra = np.where(t2 == 0.0, 0.0, np.where(gap > 0, t2 / gap, np.inf))
        out = (1.0 + extra) / u
    return out if out.ndim else float(out)


def P(boundary: PolarBoundary, alpha: float, theta: float) -> float:
    """Weight ``P(alpha, theta)`` on a normalized boundary; at a joint the
    larger one-sided value."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return max(p_value(alpha, f, fp) for f, fp in boundary.one_sided(theta))


def alpha_from(f, fp):
    """Minimizer of ``alpha -> P(alpha)`` over ``(0, 1/f^2]``:
    ``alpha f^2 = 1 + t^2 - |t| sqrt(1 + t^2)`` with ``t = f'/f``."""
    t = abs(fp / f)
    s = math.sqrt(1.0 + t * t)
    # 1 + t^2 - t s == 1 / (1 + t^2 + t s) * (1 + t^2), cancellation-free
    zeta = (1.0 + t * t) / (1.0 + t * t + t * s) if t else 1.0
    return zeta / (f * f)


def alpha_theta(boundary: PolarBoundary, theta: float) -> float:
    """Pointwise optimal ``alpha(theta)``; at a joint, the side with the
    steeper boundary."""
    f, fp = max(boundary.one_sided(theta), key=lambda v: abs(v[1] / v[0]))
    return alpha_from(f, fp)


def hp_weight(tan_gamma):
    """``(sqrt(1+t^2) + t)^2 = (1/cos g + tan g)^2`` for ``t = tan g``."""
    t = abs(tan_gamma)
    if not math.isfinite(t):
        return math.inf
    return (math.sqrt(1.0 + t * t) + t) ** 2


# ---------------------------------------------------------------------------
# m and M
# ---------------------------------------------------------------------------


def m_of(boundary: PolarBoundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> float:
    """Horgan-Payne candidate ``m = sup_theta min_alpha P``; ``+inf`` when
    some tangent passes through the center."""
    T, _ = geometry.max_tan_gamma(boundary, grid=grid, tol=tol)
    return hp_weight(T)


class MResult(NamedTuple):
    M: float
    alpha: float
    at_limit: bool  # infimum reached only as alpha -> 1-


def _minimize_convex(Q, *, delta=ALPHA_DELTA, tol=ALPHA_TOL, maxiter=ALPHA_MAXITER):
    a, q = golden_section(Q, delta, 1.0 - delta, tol=tol, maxiter=maxiter)
    # convex and lower semicontinuous: the value at alpha = 1 is the limit
    q1 = Q(1.0)
    if q1 <= q:
        return MResult(q1, 1.0, True)
    return MResult(q, a, False)


def sup_P(boundary: PolarBoundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL):
    """``alpha -> sup_theta P(alpha, theta)``, with the theta grids cached."""
    entries = []
    for p in boundary.pieces:
        if p.critical_angles() is None:
            th = np.linspace(p.t0, p.t1, geometry._grid_size(p, grid))
            entries.append((p, (th, p.f(th), p.fp(th))))
        else:
            entries.append((p, None))

    def Q(alpha):
        best = -math.inf
        for p, cache in entries:
            v, _ = geometry.piece_extremum(
                p, lambda t, f, fp: p_value(alpha, f, fp),
                maximize=True, grid=grid, tol=tol, cache=cache,
            )
            best = max(best, v)
        return best

    return Q


def M_of(boundary: PolarBoundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> MResult:
    """Proven bound ``M = inf_{alpha in (0,1)} sup_theta P(alpha, theta)``.

    Each ``P(., theta)`` is convex, hence so is the supremum and a
    golden-section search in alpha converges.
    """
    if geometry.rho_max(boundary, grid=grid, tol=tol) <= 0.0:
        return MResult(math.inf, math.nan, False)
    return _minimize_convex(sup_P(boundary, grid=grid, tol=tol))


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------


def _normalized_rd(poly: PolygonSpec):
    geometry.polygon_to_boundary(poly)  # validates the kernel condition
    r = np.asarray(poly.radii())
    d = np.asarray(poly.distances())
    R = r.max()
    return r / R, d / R


def polygon_M(poly: PolygonSpec) -> float:
    """``M = inf_alpha max_j (1 - alpha d_j^2) / (alpha d_j^2 (1 - alpha r_j^2))``
    (normalized so that ``max r_j = 1``)."""
    r, d = _normalized_rd(poly)
    d2, r2 = d * d, r * r

    def Q(alpha):
        with np.errstate(divide="ignore"):
            gap = 1.0 - alpha * r2
            vals = np.where(gap > 0, (1.0 - alpha * d2) / (alpha * d2 * np.where(gap > 0, gap, 1.0)), np.inf)
        return float(vals.max())

    return _minimize_convex(Q).M


def polygon_m(poly: PolygonSpec) -> float:
    """``m = max_j (r_j/d_j + sqrt(r_j^2/d_j^2 - 1))^2``."""
    r, d = _normalized_rd(poly)
    k = (r / d).max()
    return (k + math.sqrt(max(k * k - 1.0, 0.0))) ** 2


def closed_form_dM(d: float):
    """``(M, alpha0)`` for cyclic or circumscribed polygons with
    ``d = min_j d_j`` after normalization."""
    if not d > 0:
        raise ValueError(f"d must be positive, got {d}")
    if d >= 1.0:
        return 1.0, 1.0
    inv = 1.0 / d
    alpha0 = inv * inv - math.sqrt(inv ** 4 - inv * inv)
    M = (inv + math.sqrt(inv * inv - 1.0)) ** 2
    return M, alpha0


def beta_lower_from_d(d: float) -> float:
    """``d / sqrt(2) * (1 + sqrt(1 - d^2))^{-1/2}``, i.e. ``(1 + M(d))^{-1/2}``."""
    return d / math.sqrt(2.0) / math.sqrt(1.0 + math.sqrt(max(1.0 - d * d, 0.0)))


# ---------------------------------------------------------------------------
# Radii ratio
# ---------------------------------------------------------------------------


class RadiiBounds(NamedTuple):
    tau: float
    psi: float
    M_tau: float
    beta_lower: float


def radii_ratio_from(rho: float, R: float) -> RadiiBounds:
    """Bounds from a center disk of radius ``rho`` and enclosing radius ``R``."""
    if not rho > 0:
        return RadiiBounds(math.pi / 2, 0.0, math.inf, 0.0)
    k = min(rho / R, 1.0)
    tau = math.acos(k)
    psi = math.pi / 2 - tau
    M_tau = (1.0 / k + math.sqrt(max(1.0 / (k * k) - 1.0, 0.0))) ** 2
    beta = k / math.sqrt(2.0) / math.sqrt(1.0 + math.sqrt(max(1.0 - k * k, 0.0)))
    _check_identity(beta, math.sin(psi / 2), "beta_Rrho vs sin(psi/2)")
    _check_identity(beta, (1.0 + M_tau) ** -0.5, "beta_Rrho vs (1+M_tau)^-1/2")
    return RadiiBounds(tau, psi, M_tau, beta)


def radii_ratio_bounds(boundary: PolarBoundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> RadiiBounds:
    """``tau = arccos(rho_max/R_min)``, ``psi = pi/2 - tau``,
    ``M <= M_tau``, and ``beta >= sin(psi/2)``."""
    rho = geometry.rho_max(boundary, grid=grid, tol=tol)
    R = geometry.r_min(boundary, grid=grid, tol=tol)
    return radii_ratio_from(rho, R)


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constants:
    beta: float
    C: float
    Gamma: float
    K: float
    K_provenance: str = SMOOTH_ONLY


def convert(kind: str, value: float) -> Constants:
    """Fill in ``beta, C, Gamma, K`` from any one of them.

    ``K = 2C`` holds for smooth (C^2) domains only and is labeled so.
    """
    if kind == "beta":
        if not 0.0 < value <= 1.0:
            raise ValueError(f"beta must lie in (0, 1], got {value}")
        C = 1.0 / (value * value)
    elif kind == "C":
        if not value >= 1.0:
            raise ValueError(f"C must be >= 1, got {value}")
        C = value
    elif kind == "Gamma":
        if not value >= 0.0:
            raise ValueError(f"Gamma must be >= 0, got {value}")
        C = value + 1.0
    elif kind == "K":
        if not value >= 2.0:
            raise ValueError(f"K must be >= 2, got {value}")
        C = value / 2.0
    else:
        raise ValueError(f"unknown constant {kind!r}; expected beta, C, Gamma or K")
    if math.isinf(C):
        return Constants(0.0, C, C, C)
    beta = value if kind == "beta" else C ** -0.5
    return Constants(beta, C, C - 1.0, 2.0 * C)


def hp_lower_bound(boundary: PolarBoundary, *, grid=DEFAULT_GRID, tol=DEFAULT_TOL) -> float:
    """``sin(omega/2)``: the Horgan-Payne lower bound for beta.  CLAIMED only;
    it fails for some star-shaped domains."""
    omega = geometry.horgan_payne_angle(boundary, grid=grid, tol=tol)
    value = math.sin(omega / 2.0)
    _check_identity(value, (1.0 + m_of(boundary, grid=grid, tol=tol)) ** -0.5,
                    "sin(omega/2) vs (1+m)^-1/2")
    return value


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------


@dataclass
class BoundReport:
    """Every bound for one domain/center, each with a provenance label."""

    omega_HP: float
    m: float
    M: float
    alpha_star_global: float
    rho_max: float
    R_min: float
    tau: float
    psi: float
    M_tau: float
    beta_lower_proven: float
    beta_lower_HP_claimed: float
    beta_lower_Rrho: float
    C_upper_proven: float
    Gamma_upper_proven: float
    K_upper_smooth_only: float
    beta_upper: Optional[float] = None
    area: Optional[float] = None
    normalization_scale: float = 1.0
    flags: dict = field(default_factory=dict)
    reference: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def check(self, tol=1e-8):
        """Raise :class:`IdentityError` if the ordering invariants fail."""
        if not self.beta_lower_Rrho <= self.beta_lower_proven + tol:
            raise IdentityError("beta_lower_Rrho > beta_lower_proven")
        if not self.beta_lower_proven <= self.beta_lower_HP_claimed + tol:
            raise IdentityError("beta_lower_proven > beta_lower_HP_claimed")
        if self.beta_upper is not None and not self.beta_lower_proven <= self.beta_upper + 1e-12:
            raise IdentityError("proven lower bound exceeds proven upper bound")
        _check_identity(self.Gamma_upper_proven, self.C_upper_proven - 1.0, "Gamma = C - 1")
        _check_identity(self.beta_lower_proven, self.C_upper_proven ** -0.5, "beta = C^-1/2")


def bound_report(boundary: PolarBoundary, *, cut=None, grid=DEFAULT_GRID,
                 tol=DEFAULT_TOL, reference=None) -> BoundReport:
    """Run the whole pipeline on a normalized boundary.

    ``cut`` is an optional :class:`~infsup.cutbound.CutSpec`; without it no
    upper bound on beta is reported.
    """
    T, theta_T = geometry.max_tan_gamma(boundary, grid=grid, tol=tol)
    if not math.isfinite(T):
        raise StarShapeError(
            f"boundary is tangent to the ray at theta={theta_T:.6g}", theta=theta_T
        )
    omega = math.atan2(1.0, T)
    m = hp_weight(T)
    Mres = M_of(boundary, grid=grid, tol=tol)
    rho = geometry.rho_max(boundary, grid=grid, tol=tol)
    R = geometry.r_min(boundary, grid=grid, tol=tol)
    rr = radii_ratio_from(rho, R)

    hp = math.sin(omega / 2.0)
    _check_identity(hp, (1.0 + m) ** -0.5, "sin(omega/2) vs (1+m)^-1/2")
    proven = convert("Gamma", Mres.M)

    flags = {
        "omega_HP": GEOMETRIC,
        "m": CLAIMED,
        "M": PROVEN,
        "rho_max": GEOMETRIC,
        "R_min": GEOMETRIC,
        "tau": GEOMETRIC,
        "psi": GEOMETRIC,
        "M_tau": PROVEN,
        "beta_lower_proven": PROVEN,
        "beta_lower_HP_claimed": CLAIMED,
        "beta_lower_Rrho": PROVEN,
        "C_upper_proven": PROVEN,
        "Gamma_upper_proven": PROVEN,
        "K_upper_smooth_only": SMOOTH_ONLY,
    }
    if Mres.at_limit:
        flags["alpha_star_global"] = ALPHA_LIMIT
    beta_upper = None
    if cut is not None:
        from .cutbound import beta_upper as _beta_upper

        beta_upper = _beta_upper(cut)
        flags["beta_upper"] = PROVEN

    scale = boundary.normalization_scale
    report = BoundReport(
        omega_HP=omega,
        m=m,
        M=Mres.M,
        alpha_star_global=Mres.alpha,
        rho_max=rho * scale,
        R_min=R * scale,
        tau=rr.tau,
        psi=rr.psi,
        M_tau=rr.M_tau,
        beta_lower_proven=proven.beta,
        beta_lower_HP_claimed=hp,
        beta_lower_Rrho=rr.beta_lower,
        C_upper_proven=proven.C,
        Gamma_upper_proven=proven.Gamma,
        K_upper_smooth_only=proven.K,
        beta_upper=beta_upper,
        area=geometry.area(boundary, native=True),
        normalization_scale=scale,
        flags=flags,
        reference=dict(reference or {}),
    )
    return report
