"""Certified bounds on the inf-sup (LBB), Babuska-Aziz and Friedrichs
constants of star-shaped plane domains."""

from .bounds import (
    BoundReport,
    M_of,
    bound_report,
    closed_form_dM,
    convert,
    hp_lower_bound,
    m_of,
    polygon_M,
    polygon_m,
    radii_ratio_bounds,
)
from .cutbound import CutSpec, beta_upper, cut_through_center
from .geometry import (
    GeometryError,
    NumericError,
    PolarBoundary,
    PolygonSpec,
    StarShapeError,
    polygon_to_boundary,
)
from .shapes import (
    CupidsBow,
    Disk,
    DoubleStadium,
    Ellipse,
    OctagonCE,
    Polygon,
    Rectangle,
    RegularPolygon,
    Rhombus,
    Triangle,
    family_report,
    hp_refutation_report,
    refutation_threshold,
)

__version__ = "0.1.0"
