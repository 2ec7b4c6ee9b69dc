"""Closed-form geometry of a regular n-gon with a fixed perimeter.

Every quantity is a function of the side count ``n`` and the perimeter ``p``.
Two independent area formulas are provided (apothem based and circumradius
based) together with explicit vertex generation, which lets the shoelace
formula act as a brute-force cross-check.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "N_MAX",
    "RegularPolygonSpec",
    "DerivedGeometry",
    "as_spec",
    "check_n",
    "check_p",
    "one_minus_cos",
    "tan_minus_x",
    "derive",
    "area_apothem",
    "area_circumradius",
    "vertices",
    "shoelace",
]

#: Largest supported side count. Beyond this the trig arguments are so small
#: that the asymptotic forms should be used instead.
N_MAX = 10**9


def check_n(n) -> int:
    """Validate a side count and return it as a plain ``int``."""
    if isinstance(n, bool):
        raise DomainError(f"side count must be an integer, got {n!r}")
    try:
        n = operator.index(n)
    except TypeError:
        raise DomainError(f"side count must be an integer, got {n!r}") from None
    if n < 3:
        raise DomainError(f"side count must satisfy n >= 3, got n={n}")
    if n > N_MAX:
        raise DomainError(f"side count must satisfy n <= {N_MAX}, got n={n}")
    return n


def check_p(p) -> float:
    """Validate a perimeter (strictly positive, finite) and return it as float."""
    try:
        p = float(p)
    except (TypeError, ValueError):
        raise DomainError(f"perimeter must be a real number, got {p!r}") from None
    if not math.isfinite(p) or p <= 0.0:
        raise DomainError(f"perimeter must be positive and finite, got p={p!r}")
    return p


def one_minus_cos(x: float) -> float:
    """``1 - cos(x)`` without cancellation for small ``x``."""
    s = math.sin(0.5 * x)
    return 2.0 * s * s


def _tan_series(terms):
    # tan x = sum_k T_k x**(2k-1), T_k = (-1)**(k-1) 4**k (4**k - 1) B_2k / (2k)!
    B = [Fraction(1)]
    for m in range(1, 2 * terms + 1):
        B.append(-sum(math.comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return [
        float((-1) ** (k - 1) * 4**k * (4**k - 1) * B[2 * k] / math.factorial(2 * k))
        for k in range(2, terms + 1)
    ]


# coefficients of x**3, x**5, ... in tan(x) - x
_TAN_TAIL = _tan_series(30)
_SERIES_MAX_X = 0.5


def tan_minus_x(x: float) -> float:
    """``tan(x) - x`` for ``0 <= x < pi/2`` without cancellation near 0.

    Below 0.5 the Taylor series is summed (terms shrink by at least
    ``(2x/pi)**2`` each); above it the direct difference loses no more than
    a few ulps.
    """
    if x > _SERIES_MAX_X:
        return math.tan(x) - x
    x2 = x * x
    acc = 0.0
    for c in reversed(_TAN_TAIL):
        acc = acc * x2 + c
    return acc * x2 * x


@dataclass(frozen=True)
class RegularPolygonSpec:
    """Side count and perimeter of a regular polygon."""

    n: int
    p: float

    def __post_init__(self):
        object.__setattr__(self, "n", check_n(self.n))
        object.__setattr__(self, "p", check_p(self.p))


def as_spec(spec, p=None) -> RegularPolygonSpec:
    """Accept a spec, an ``(n, p)`` pair, or separate ``n`` and ``p``."""
    if isinstance(spec, RegularPolygonSpec):
        if p is not None:
            raise TypeError("perimeter given twice")
        return spec
    if p is None:
        n, p = spec
    else:
        n = spec
    return RegularPolygonSpec(n, p)


@dataclass(frozen=True)
class DerivedGeometry:
    """Lengths and angles of a regular polygon.

    ``h`` is the centre-to-vertex distance and is always equal to ``R``; it
    is kept under its own name because several efficiency indices are
    written in terms of it.
    """

    s: float
    a: float
    R: float
    theta: float
    half_angle: float

    @property
    def h(self) -> float:
        return self.R


def derive(spec, p=None) -> DerivedGeometry:
    """Side, apothem, circumradius and angles for a regular polygon.

    >>> g = derive(RegularPolygonSpec(4, 4.0))
    >>> g.s, g.a
    (1.0, 0.5)
    """
    spec = as_spec(spec, p)
    n, p = spec.n, spec.p
    half = math.pi / n
    return DerivedGeometry(
        s=p / n,
        a=p / (2.0 * n * math.tan(half)),
        R=p / (2.0 * n * math.sin(half)),
        theta=2.0 * math.pi / n,
        half_angle=half,
    )


def area_apothem(spec, p=None) -> float:
    """Area as ``p**2 / (4 n tan(pi/n))`` (half apothem times perimeter)."""
    spec = as_spec(spec, p)
    n, p = spec.n, spec.p
    return p * p / (4.0 * n * math.tan(math.pi / n))


def area_circumradius(spec, p=None) -> float:
    """Area as ``(n/2) R**2 sin(2 pi / n)``, the sum of n central triangles."""
    spec = as_spec(spec, p)
    R = spec.p / (2.0 * spec.n * math.sin(math.pi / spec.n))
    return 0.5 * spec.n * R * R * math.sin(2.0 * math.pi / spec.n)


def vertices(spec, p=None, rotation: float = 0.0) -> np.ndarray:
    """Counterclockwise vertices of the polygon, centred at the origin.

    Vertex ``k`` sits at angle ``rotation + 2*pi*k/n`` on the circumcircle.
    Returns an ``(n, 2)`` float array.
    """
    spec = as_spec(spec, p)
    rotation = float(rotation)
    if not math.isfinite(rotation):
        raise DomainError(f"rotation must be finite, got {rotation!r}")
    R = derive(spec).R
    angles = rotation + 2.0 * np.pi * np.arange(spec.n) / spec.n
    return np.column_stack((R * np.cos(angles), R * np.sin(angles)))


def shoelace(points) -> float:
    """Signed area of a simple polygon (positive when counterclockwise)."""
    pts = np.asarray(points, dtype=float)
    # shift to the mean to limit cancellation for far-from-origin inputs
    pts = pts - pts.mean(axis=0)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
