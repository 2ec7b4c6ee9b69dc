"""Efficiency indices of regular polygons.

Each index is a dimensionless number describing how closely a regular
n-gon approaches the circle.  Most depend on ``n`` alone; a few also take
the perimeter ``p`` (they are scale invariant, so ``p`` cancels) or an
average boundary slope ``m``.

Several indices share a formula.  Radial packing, sector fill and the
angle-hypotenuse index are all ``n sin(2 pi/n) / (2 pi)``; the chord-arc
and chord-angle indices are both ``n sin(pi/n) / pi``.  The registry keeps
one entry per name and :func:`evaluate_all` computes each shared formula
once.

A few indices are described in the literature with limits or directions
that their formulas do not have.  The formulas are implemented as written;
the actual limit and direction are stored in :data:`REGISTRY`, and the
discrepancy is recorded in ``MetricDescriptor.erratum_note``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .regular_geometry import area_apothem, check_n, check_p, derive, one_minus_cos

__all__ = [
    "MetricId",
    "MetricDescriptor",
    "MetricValue",
    "REGISTRY",
    "ALIAS_GROUPS",
    "check_m",
    "geometric_slope",
    "smoothness",
    "perimeter_slope_efficiency",
    "slant_angle_index",
    "iso_slope_index",
    "iso_slope_normalized",
    "apothem_angle_raw",
    "apothem_angle_index",
    "sector_fill",
    "radial_packing",
    "angle_hypotenuse",
    "angle_area_unbounded",
    "chord_arc",
    "apothem_hypotenuse",
    "slant_curvature",
    "angle_triangle_packing",
    "half_angle_tangent",
    "side_apothem",
    "evaluate",
    "evaluate_all",
]


class MetricId(enum.Enum):
    SMOOTHNESS = "smoothness"
    PERIMETER_SLOPE = "perimeter_slope"
    SLANT_ANGLE = "slant_angle"
    ISO_SLOPE = "iso_slope"
    ISO_SLOPE_NORMALIZED = "iso_slope_normalized"
    APOTHEM_ANGLE = "apothem_angle"
    RADIAL_PACKING = "radial_packing"
    ANGLE_AREA_UNBOUNDED = "angle_area_unbounded"
    SECTOR_FILL = "sector_fill"
    CHORD_ARC = "chord_arc"
    APOTHEM_HYPOTENUSE = "apothem_hypotenuse"
    SLANT_CURVATURE = "slant_curvature"
    ANGLE_HYPOTENUSE = "angle_hypotenuse"
    ANGLE_TRIANGLE_PACKING = "angle_triangle_packing"
    HALF_ANGLE_TANGENT = "half_angle_tangent"
    SIDE_APOTHEM = "side_apothem"


# ---------------------------------------------------------------------------
# argument checks


def check_m(m) -> float:
    try:
        m = float(m)
    except (TypeError, ValueError):
        raise DomainError(f"slope must be a real number, got {m!r}") from None
    if not math.isfinite(m) or m < 0.0:
        raise DomainError(f"slope must be finite and >= 0, got m={m!r}")
    return m


def _check_length(name, value) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")
    return value


def geometric_slope(n) -> float:
    """Convenience slope ``m = tan(pi/n)``.

    Half a side over the apothem.  This is a convention of this package, not
    a canonical definition of the average boundary slope, which is left to
    the caller everywhere else.
    """
    n = check_n(n)
    return math.tan(math.pi / n)


# ---------------------------------------------------------------------------
# individual indices


def smoothness(n) -> float:
    """Apothem over circumradius, ``cos(pi/n)``."""
    n = check_n(n)
    return math.cos(math.pi / n)


def perimeter_slope_efficiency(p, a, m) -> float:
    """``p / sqrt(p**2 + (2 a m)**2)``: perimeter over slope-corrected perimeter.

    Equals 1 for ``m = 0`` and tends to 0 as ``m`` grows.
    """
    p = _check_length("perimeter", p)
    a = _check_length("apothem", a)
    m = check_m(m)
    return p / math.hypot(p, 2.0 * a * m)


def slant_angle_index(p, a, m) -> float:
    """``1 / sqrt(1 + D**2)`` with distortion ratio ``D = 2 a m / p``."""
    p = _check_length("perimeter", p)
    a = _check_length("apothem", a)
    m = check_m(m)
    d = 2.0 * a * m / p
    return 1.0 / math.sqrt(1.0 + d * d)


def iso_slope_index(n, p) -> float:
    """Polygon area over the squared slant length of one central triangle.

    Increases with ``n`` towards ``pi``; it is not confined to ``(0, 1)``.
    """
    n, p = check_n(n), check_p(p)
    half_side = p / (2.0 * n)
    apothem = p / (2.0 * n * math.tan(math.pi / n))
    return area_apothem(n, p) / (half_side * half_side + apothem * apothem)


def iso_slope_normalized(n, p) -> float:
    """:func:`iso_slope_index` divided by its limit ``pi``."""
    return iso_slope_index(n, p) / math.pi


def apothem_angle_raw(n) -> float:
    """Unbounded apothem-angle ratio ``a n / (p (1 - cos(pi/n)))``.

    With ``a = p / (2 n tan(pi/n))`` the perimeter cancels, leaving
    ``1 / (2 tan(pi/n) (1 - cos(pi/n)))``.  Grows like ``n**3 / pi**3``.
    """
    n = check_n(n)
    x = math.pi / n
    return 1.0 / (2.0 * math.tan(x) * one_minus_cos(x))


def apothem_angle_index(n) -> float:
    """Bounded apothem-angle index ``E / (1 + E)`` with ``E`` the raw ratio."""
    raw = apothem_angle_raw(n)
    return raw / (1.0 + raw)


def sector_fill(n) -> float:
    """Central triangle area over its circular sector: ``n sin(2 pi/n) / (2 pi)``."""
    n = check_n(n)
    return n * math.sin(2.0 * math.pi / n) / (2.0 * math.pi)


# Same formula under different names.
radial_packing = sector_fill
angle_hypotenuse = sector_fill


def angle_area_unbounded(n) -> float:
    """Area over the angle-sum reference ``(n - 2) pi R**2``.

    Equal to ``sector_fill(n) / (n - 2)``; decreases to 0.
    """
    n = check_n(n)
    return sector_fill(n) / (n - 2)


def chord_arc(n) -> float:
    """Side length over the circumcircle arc it replaces: ``n sin(pi/n) / pi``."""
    n = check_n(n)
    return n * math.sin(math.pi / n) / math.pi


def apothem_hypotenuse(n) -> float:
    """``sqrt(2) a / sqrt(a**2 + h**2)`` with ``a / h = cos(pi/n)``."""
    n = check_n(n)
    c = math.cos(math.pi / n)
    return math.sqrt(2.0) * c / math.sqrt(1.0 + c * c)


def slant_curvature(n, p, m=0.0) -> float:
    """``2 A / (R p sqrt(1 + (2 a m / p)**2))``.

    At ``m = 0`` this reduces to ``cos(pi/n)``.
    """
    n, p, m = check_n(n), check_p(p), check_m(m)
    g = derive(n, p)
    d = 2.0 * g.a * m / p
    return 2.0 * area_apothem(n, p) / (g.R * p * math.sqrt(1.0 + d * d))


def _packing(n: int) -> float:
    # unchecked: half_angle_tangent's identity needs it at arbitrary n
    return math.pi / (n * math.tan(math.pi / n))


def angle_triangle_packing(n) -> float:
    """``pi / (n tan(pi/n))``, the polygon-to-circle area ratio at equal perimeter."""
    return _packing(check_n(n))


def half_angle_tangent(n) -> float:
    """``x / tan(x)`` at the half central angle ``x = pi / (2n)``."""
    n = check_n(n)
    x = math.pi / (2 * n)
    return x / math.tan(x)


def side_apothem(n) -> float:
    """``1 / (1 + tan(pi/n))``; half-side over apothem mapped into (0, 1)."""
    n = check_n(n)
    return 1.0 / (1.0 + math.tan(math.pi / n))


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class MetricDescriptor:
    """Static facts about one index.

    ``limit_at_infinity`` is the limit as ``n`` grows, except for the two
    pure slope indices where ``limit_variable`` is ``"m"``.  It is a float
    or the string ``"diverges"``.  ``bounded_01`` records the actual range
    used for the boundedness checks, not the range claimed in the
    literature.
    """

    id: MetricId
    paper_section: str
    title: str
    requires_slope: bool
    bounded_01: bool
    limit_at_infinity: float | str
    monotonic_in_n: str
    erratum_note: str = ""
    aliases: tuple = ()
    limit_variable: str = "n"

    @property
    def name(self) -> str:
        return self.id.value


_FILL_GROUP = (MetricId.RADIAL_PACKING, MetricId.SECTOR_FILL, MetricId.ANGLE_HYPOTENUSE)
_SLOPE_PAIR = (MetricId.PERIMETER_SLOPE, MetricId.SLANT_ANGLE)

#: Groups of ids whose formulas are identical.
ALIAS_GROUPS = (_FILL_GROUP, _SLOPE_PAIR)


def _aliases(mid):
    for group in ALIAS_GROUPS:
        if mid in group:
            return tuple(g for g in group if g is not mid)
    return ()


_ENTRIES = [
    (MetricId.SMOOTHNESS, "4.1", "Smoothness ratio", False, True, 1.0, "increasing",
     "intermediate step a/R is tan(pi/n)/sin(pi/n) as originally printed (inverted); "
     "the stated result cos(pi/n) is correct and is what is computed"),
    (MetricId.PERIMETER_SLOPE, "4.2", "Perimeter slope efficiency", True, False, 0.0, "n/a",
     "limit as m -> infinity is 0, not infinity as originally stated; the value lies in (0, 1]"),
    (MetricId.SLANT_ANGLE, "4.3", "Slant-angle efficiency index", True, False, 0.0, "n/a", ""),
    (MetricId.ISO_SLOPE, "4.4", "Isoperimetric slope index", False, False, math.pi, "increasing",
     "originally described as bounded and decreasing in n; the formula increases "
     "with n towards pi (see iso_slope_normalized)"),
    (MetricId.ISO_SLOPE_NORMALIZED, "4.4", "Isoperimetric slope index / pi", False, True, 1.0,
     "increasing", ""),
    (MetricId.APOTHEM_ANGLE, "4.5", "Apothem-angle index", False, True, 1.0, "increasing",
     "printed normalisation is garbled; implemented as E_raw / (1 + E_raw)"),
    (MetricId.RADIAL_PACKING, "4.6", "Radial packing efficiency", False, True, 1.0,
     "increasing", ""),
    (MetricId.ANGLE_AREA_UNBOUNDED, "4.7", "Angle-sum area efficiency", False, False, 0.0,
     "decreasing",
     "limit is 0, not 1 as originally computed; 1/(n-2) vanishes as n -> infinity"),
    (MetricId.SECTOR_FILL, "4.7", "Triangle sector fill efficiency", False, True, 1.0,
     "increasing", ""),
    (MetricId.CHORD_ARC, "4.7/4.13", "Chord-arc ratio (chord-angle compactness)", False, True,
     1.0, "increasing", ""),
    (MetricId.APOTHEM_HYPOTENUSE, "4.8", "Apothem-hypotenuse index", False, True, 1.0,
     "increasing", ""),
    (MetricId.SLANT_CURVATURE, "4.9", "Slant-curvature efficiency", True, True, 1.0,
     "increasing", ""),
    (MetricId.ANGLE_HYPOTENUSE, "4.10", "Angle-hypotenuse index", False, True, 1.0,
     "increasing", ""),
    (MetricId.ANGLE_TRIANGLE_PACKING, "4.11", "Angle-triangle packing index", False, True, 1.0,
     "increasing", ""),
    (MetricId.HALF_ANGLE_TANGENT, "4.12", "Half-angle tangent efficiency", False, True, 1.0,
     "increasing",
     "limit is 1, not infinity as originally stated; x/tan(x) -> 1 as x -> 0"),
    (MetricId.SIDE_APOTHEM, "4.12", "Side-apothem efficiency index", False, True, 1.0,
     "increasing", ""),
]

#: One descriptor per :class:`MetricId`, in enum order.
REGISTRY: dict[MetricId, MetricDescriptor] = {
    mid: MetricDescriptor(
        id=mid,
        paper_section=section,
        title=title,
        requires_slope=slope,
        bounded_01=bounded,
        limit_at_infinity=limit,
        monotonic_in_n=mono,
        erratum_note=note,
        aliases=_aliases(mid),
        limit_variable="m" if mid in _SLOPE_PAIR else "n",
    )
    for (mid, section, title, slope, bounded, limit, mono, note) in _ENTRIES
}


@dataclass(frozen=True)
class MetricValue:
    id: MetricId
    n: int
    value: float


def evaluate(mid, n, p=1.0, m=0.0) -> float:
    """Evaluate a single index by id."""
    mid = MetricId(mid)
    n, p, m = check_n(n), check_p(p), check_m(m)
    if mid in _SLOPE_PAIR:
        a = derive(n, p).a
        if mid is MetricId.PERIMETER_SLOPE:
            return perimeter_slope_efficiency(p, a, m)
        return slant_angle_index(p, a, m)
    return _N_ONLY[mid](n) if mid in _N_ONLY else _N_P[mid](n, p, m)


_N_ONLY = {
    MetricId.SMOOTHNESS: smoothness,
    MetricId.APOTHEM_ANGLE: apothem_angle_index,
    MetricId.RADIAL_PACKING: sector_fill,
    MetricId.ANGLE_AREA_UNBOUNDED: angle_area_unbounded,
    MetricId.SECTOR_FILL: sector_fill,
    MetricId.CHORD_ARC: chord_arc,
    MetricId.APOTHEM_HYPOTENUSE: apothem_hypotenuse,
    MetricId.ANGLE_HYPOTENUSE: sector_fill,
    MetricId.ANGLE_TRIANGLE_PACKING: angle_triangle_packing,
    MetricId.HALF_ANGLE_TANGENT: half_angle_tangent,
    MetricId.SIDE_APOTHEM: side_apothem,
}

_N_P = {
    MetricId.ISO_SLOPE: lambda n, p, m: iso_slope_index(n, p),
    MetricId.ISO_SLOPE_NORMALIZED: lambda n, p, m: iso_slope_normalized(n, p),
    MetricId.SLANT_CURVATURE: slant_curvature,
}


def evaluate_all(n, p=1.0, m=0.0) -> list[MetricValue]:
    """Every index at ``(n, p, m)``, one :class:`MetricValue` per id in enum order.

    Each alias group is evaluated once and the value copied to every member.
    """
    n, p, m = check_n(n), check_p(p), check_m(m)
    a = derive(n, p).a
    fill = sector_fill(n)
    slope = perimeter_slope_efficiency(p, a, m)
    shared = {mid: fill for mid in _FILL_GROUP}
    shared.update({mid: slope for mid in _SLOPE_PAIR})
    out = []
    for mid in MetricId:
        value = shared[mid] if mid in shared else evaluate(mid, n, p, m)
        out.append(MetricValue(mid, n, value))
    return out
