"""Regular polygons at fixed perimeter: areas, wasted area, efficiency
indices, an average-apothem estimator for convex polygons, and numerical
checks of all of them."""

__version__ = "0.1.0"

from .errors import DomainError, PolygonInvariantError, PolygonParseError
from .regular_geometry import (
    DerivedGeometry,
    RegularPolygonSpec,
    area_apothem,
    area_circumradius,
    derive,
    vertices,
)
from .isoperimetric import (
    WastedAreaReport,
    circle_area,
    elementary_inequality_margin,
    wasted_area,
    wasted_area_asymptotic,
    wasted_area_bound,
    wasted_report,
)
from .metrics import REGISTRY, MetricId, evaluate, evaluate_all
from .convex_estimator import ConvexPolygon, EstimateReport, estimate, load_polygon

__all__ = [
    "DomainError",
    "PolygonInvariantError",
    "PolygonParseError",
    "DerivedGeometry",
    "RegularPolygonSpec",
    "area_apothem",
    "area_circumradius",
    "derive",
    "vertices",
    "WastedAreaReport",
    "circle_area",
    "elementary_inequality_margin",
    "wasted_area",
    "wasted_area_asymptotic",
    "wasted_area_bound",
    "wasted_report",
    "REGISTRY",
    "MetricId",
    "evaluate",
    "evaluate_all",
    "ConvexPolygon",
    "EstimateReport",
    "estimate",
    "load_polygon",
]
