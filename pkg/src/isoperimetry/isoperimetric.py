"""Circle baseline and the wasted-area function of a regular polygon.

The wasted area is the deficit between the circle of perimeter ``p`` and the
regular n-gon of the same perimeter.  Besides the exact value, this module
provides the leading Taylor term ``pi p**2 / (12 n**2)`` and the closed-form
bound ``pi p**2 / (4 (3 n**2 + pi**2))``.

The bound is frequently presented as an *upper* bound on the wasted area.
It is not: it comes from an upper bound on the polygon area, and
subtracting that from the circle area bounds the deficit from *below*.  At
``n = 3, p = 1`` the bound is 0.0213 while the wasted area is 0.0315.  The
value is kept as printed and tagged ``"lower"`` so callers see the actual
relationship.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .regular_geometry import area_apothem, check_n, check_p, tan_minus_x

__all__ = [
    "BOUND_DIRECTION",
    "WastedAreaReport",
    "circle_area",
    "wasted_area",
    "wasted_area_asymptotic",
    "wasted_area_bound",
    "elementary_inequality_margin",
    "wasted_report",
]

#: Relationship between :func:`wasted_area_bound` and the exact wasted area.
BOUND_DIRECTION = "lower"


def circle_area(p) -> float:
    """Area of the circle whose circumference is ``p``."""
    p = check_p(p)
    return p * p / (4.0 * math.pi)


def wasted_area(n, p) -> float:
    """Exact area deficit ``p**2/4 * (1/pi - 1/(n tan(pi/n)))``.

    Evaluated as ``p**2/4 * (tan x - x) / (pi tan x)`` with ``x = pi/n`` so
    that the result keeps full relative precision for large ``n``.
    """
    n, p = check_n(n), check_p(p)
    x = math.pi / n
    return 0.25 * p * p * tan_minus_x(x) / (math.pi * math.tan(x))


def wasted_area_asymptotic(n, p) -> float:
    n, p = check_n(n), check_p(p)
    return math.pi * p * p / (12.0 * n * n)


def wasted_area_bound(n, p) -> tuple[float, str]:
    """Closed-form bound on the wasted area and its direction.

    Returns ``(value, "lower")``.  The derivation uses ``tan x > x + x**3/3``
    on ``(0, pi/2)``; this bounds the polygon area from above and hence the
    wasted area from below.
    """
    n, p = check_n(n), check_p(p)
    return math.pi * p * p / (4.0 * (3.0 * n * n + math.pi**2)), BOUND_DIRECTION


def elementary_inequality_margin(n) -> float:
    """``n tan(pi/n) - pi``; positive for every n >= 3."""
    n = check_n(n)
    return n * tan_minus_x(math.pi / n)


@dataclass(frozen=True)
class WastedAreaReport:
    n: int
    p: float
    circle_area: float
    polygon_area: float
    wasted_exact: float
    wasted_asymptotic: float
    bound_value: float
    bound_direction: str


def wasted_report(n, p) -> WastedAreaReport:
    n, p = check_n(n), check_p(p)
    bound, direction = wasted_area_bound(n, p)
    return WastedAreaReport(
        n=n,
        p=p,
        circle_area=circle_area(p),
        polygon_area=area_apothem(n, p),
        wasted_exact=wasted_area(n, p),
        wasted_asymptotic=wasted_area_asymptotic(n, p),
        bound_value=bound,
        bound_direction=direction,
    )
