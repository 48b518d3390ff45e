"""Upper bound on beta for a domain split by a short straight cut.

With ``Omega_+`` and ``Omega_-`` the two sides of a flat cut ``Sigma`` of
width ``L``,

    beta <= c_d * (|Omega| L |Sigma| / (|Omega_+| |Omega_-|))^{1/2},

and in the plane (``|Sigma| = L``, ``c_2 = sqrt(8/3)``)

    beta <= (8/3 * |Omega| / (|Omega_+| |Omega_-|))^{1/2} * L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import geometry
from .geometry import PolarBoundary

C2 = math.sqrt(8.0 / 3.0)


@dataclass(frozen=True)
class CutSpec:
    """Measures of a cut configuration.  Areas are ``d``-dimensional,
    ``sigma_measure`` is ``(d-1)``-dimensional; for ``d = 2`` it defaults
    to the width."""

    area_plus: float
    area_minus: float
    width: float
    area_total: Optional[float] = None
    sigma_measure: Optional[float] = None
    dim: int = 2
    c_d: Optional[float] = None

    def __post_init__(self):
        if self.area_total is None:
            object.__setattr__(self, "area_total", self.area_plus + self.area_minus)
        if self.sigma_measure is None:
            if self.dim != 2:
                raise ValueError("sigma_measure is required for dim > 2")
            object.__setattr__(self, "sigma_measure", self.width)
        for name in ("area_plus", "area_minus", "area_total", "width", "sigma_measure"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if self.dim < 2:
            raise ValueError("dimension must be at least 2")
        total = self.area_plus + self.area_minus
        if abs(self.area_total - total) > 1e-9 * total:
            raise ValueError(
                f"area_total={self.area_total} differs from area_plus + area_minus={total}"
            )
        if self.dim == 2 and abs(self.sigma_measure - self.width) > 1e-12 * self.width:
            raise ValueError("in the plane the cut is an interval: sigma_measure must equal width")
        if self.c_d is not None and not self.c_d > 0:
            raise ValueError("c_d must be positive")

    @property
    def constant(self):
        if self.c_d is not None:
            return self.c_d
        if self.dim == 2:
            return C2
        raise ValueError(
            f"no built-in constant for dimension {self.dim}; supply c_d explicitly"
        )


def beta_upper(cut: CutSpec) -> float:
    """Upper bound on the inf-sup constant from the cut."""
    c = cut.constant
    if cut.dim == 2 and cut.c_d is None:
        return math.sqrt(8.0 / 3.0 * cut.area_total / (cut.area_plus * cut.area_minus)) * cut.width
    return c * math.sqrt(
        cut.area_total * cut.width * cut.sigma_measure / (cut.area_plus * cut.area_minus)
    )


def refutation_margin(lower_claimed: float, upper: float) -> float:
    """``lower_claimed - upper`` (both on the same scale, e.g. beta^2).
    Positive means the claimed lower bound is impossible."""
    return lower_claimed - upper


def cut_through_center(boundary: PolarBoundary, angle: float = math.pi / 2) -> CutSpec:
    """Cut along the line through the center with direction ``angle``,
    in the boundary's native scale.  Star-shapedness makes the
    intersection a single interval."""
    L = geometry.eval_f(boundary, angle) + geometry.eval_f(boundary, angle + math.pi)
    plus = geometry.sector_area(boundary, angle - math.pi, angle, native=True)
    minus = geometry.sector_area(boundary, angle, angle + math.pi, native=True)
    return CutSpec(area_plus=plus, area_minus=minus, width=L * boundary.normalization_scale)
