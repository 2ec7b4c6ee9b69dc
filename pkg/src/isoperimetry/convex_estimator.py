"""Area of an irregular convex polygon from its average apothem.

For a regular polygon the area is half the apothem times the perimeter.
The natural extension to an irregular convex polygon replaces the apothem
by an average of the distances ``d_i`` from an interior reference point
(here: the area centroid) to the lines carrying each side.

Two averages are offered.  The plain mean of the ``d_i`` is the naive
reading and is only exact for polygons whose ``d_i`` are all equal.  The
side-length weighted mean ``sum(s_i d_i) / p`` is always exact, since
``s_i d_i / 2`` is the area of the triangle fanned from the reference point
to side ``i``.  The shoelace area is reported alongside as ground truth.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import PolygonInvariantError, PolygonParseError
from .regular_geometry import shoelace

__all__ = [
    "ConvexPolygon",
    "EstimateReport",
    "shoelace_area",
    "centroid",
    "side_distances",
    "average_apothem",
    "average_circumradius",
    "estimate",
    "parse_polygon",
    "load_polygon",
]

_REL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """Strictly convex polygon with counterclockwise vertices.

    Construct from any sequence of ``(x, y)`` pairs.  A clockwise vertex
    list is reversed and ``reoriented`` is set.  Raises
    :class:`~isoperimetry.errors.PolygonInvariantError` on fewer than three
    vertices, non-finite coordinates, repeated consecutive vertices, or a
    vertex that is reflex or collinear with its neighbours.
    """

    vertices: np.ndarray
    reoriented: bool = field(default=False)

    def __init__(self, vertices):
        pts = np.array(vertices, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise PolygonInvariantError(
                "vertex-shape", f"expected a list of (x, y) pairs, got shape {pts.shape}"
            )
        k = len(pts)
        if k < 3:
            raise PolygonInvariantError("min-vertices", f"need at least 3 vertices, got {k}")
        bad = np.flatnonzero(~np.isfinite(pts).all(axis=1))
        if bad.size:
            raise PolygonInvariantError("finite-coordinates", "non-finite coordinate", int(bad[0]))

        scale = float(np.max(np.abs(pts)))
        if scale == 0.0:
            raise PolygonInvariantError("distinct-vertices", "all vertices coincide", 1)
        edge = np.roll(pts, -1, axis=0) - pts
        lengths = np.hypot(edge[:, 0], edge[:, 1])
        short = np.flatnonzero(lengths <= _REL_TOL * scale)
        if short.size:
            i = int(short[0])
            raise PolygonInvariantError(
                "distinct-vertices", f"vertex repeats its predecessor {i}", (i + 1) % k
            )

        reoriented = shoelace(pts) < 0.0
        if reoriented:
            pts = pts[::-1].copy()
            edge = np.roll(pts, -1, axis=0) - pts

        # cross of incoming and outgoing edge at each vertex
        prev = np.roll(edge, 1, axis=0)
        cross = prev[:, 0] * edge[:, 1] - prev[:, 1] * edge[:, 0]
        tol = _REL_TOL * scale * scale
        bad = np.flatnonzero(cross <= tol)
        if bad.size:
            i = int(bad[0])
            if reoriented:
                i = k - 1 - i
            kind = "reflex" if cross[bad[0]] < -tol else "collinear"
            raise PolygonInvariantError(
                "strict-convexity", f"{kind} turn (cross product {cross[bad[0]]:.3g})", i
            )
        pts.setflags(write=False)
        object.__setattr__(self, "vertices", pts)
        object.__setattr__(self, "reoriented", bool(reoriented))

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self) -> np.ndarray:
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @property
    def side_lengths(self) -> np.ndarray:
        e = self.edges
        return np.hypot(e[:, 0], e[:, 1])

    @property
    def perimeter(self) -> float:
        return float(self.side_lengths.sum())


def _as_polygon(poly) -> ConvexPolygon:
    return poly if isinstance(poly, ConvexPolygon) else ConvexPolygon(poly)


def shoelace_area(poly) -> float:
    return abs(shoelace(_as_polygon(poly).vertices))


def centroid(poly) -> np.ndarray:
    """Area centroid."""
    pts = _as_polygon(poly).vertices
    origin = pts.mean(axis=0)
    q = pts - origin
    nxt = np.roll(q, -1, axis=0)
    w = q[:, 0] * nxt[:, 1] - nxt[:, 0] * q[:, 1]
    area = 0.5 * w.sum()
    c = ((q + nxt) * w[:, None]).sum(axis=0) / (6.0 * area)
    return origin + c


def side_distances(poly) -> np.ndarray:
    """Perpendicular distance from the area centroid to each side's line."""
    poly = _as_polygon(poly)
    c = centroid(poly)
    e = poly.edges
    rel = c - poly.vertices
    return (e[:, 0] * rel[:, 1] - e[:, 1] * rel[:, 0]) / poly.side_lengths


def average_apothem(poly, weighting="unweighted") -> float:
    """Mean centroid-to-side distance.

    ``weighting`` is ``"unweighted"`` (plain mean over sides) or
    ``"length_weighted"`` (each distance weighted by its side length).
    """
    poly = _as_polygon(poly)
    d = side_distances(poly)
    if weighting == "unweighted":
        return float(d.mean())
    if weighting == "length_weighted":
        s = poly.side_lengths
        return float((s * d).sum() / s.sum())
    raise ValueError(f"unknown weighting {weighting!r}")


def average_circumradius(poly) -> float:
    """Mean centroid-to-vertex distance."""
    poly = _as_polygon(poly)
    r = poly.vertices - centroid(poly)
    return float(np.hypot(r[:, 0], r[:, 1]).mean())


@dataclass(frozen=True)
class EstimateReport:
    exact_area: float
    perimeter: float
    avg_apothem_unweighted: float
    avg_apothem_weighted: float
    avg_circumradius: float
    estimate_unweighted: float
    estimate_weighted: float
    relative_error_unweighted: float
    notes: tuple = ()


def estimate(poly) -> EstimateReport:
    """Average-apothem area estimates with the exact area for comparison.

    The average circumradius is reported but does not enter either
    estimate.
    """
    poly = _as_polygon(poly)
    exact = shoelace_area(poly)
    perim = poly.perimeter
    a_u = average_apothem(poly, "unweighted")
    a_w = average_apothem(poly, "length_weighted")
    est_u = 0.5 * perim * a_u
    notes = ("input was clockwise; vertex order reversed",) if poly.reoriented else ()
    return EstimateReport(
        exact_area=exact,
        perimeter=perim,
        avg_apothem_unweighted=a_u,
        avg_apothem_weighted=a_w,
        avg_circumradius=average_circumradius(poly),
        estimate_unweighted=est_u,
        estimate_weighted=0.5 * perim * a_w,
        relative_error_unweighted=abs(est_u - exact) / exact,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# file ingestion


def _number(text, location):
    try:
        value = float(text)
    except ValueError:
        raise PolygonParseError(f"not a number: {text.strip()!r}", location) from None
    return value


def _parse_csv(text):
    points = []
    for lineno, row in enumerate(csv.reader(text.splitlines()), start=1):
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 2:
            raise PolygonParseError(f"expected 'x,y', got {len(row)} fields", f"line {lineno}")
        points.append((_number(row[0], f"line {lineno}"), _number(row[1], f"line {lineno}")))
    return points


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolygonParseError(exc.msg, f"line {exc.lineno} (offset {exc.pos})") from None
    if not isinstance(data, list):
        raise PolygonParseError("expected a JSON array of [x, y] pairs", "offset 0")
    points = []
    for i, item in enumerate(data):
        ok = (
            isinstance(item, list)
            and len(item) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
        )
        if not ok:
            raise PolygonParseError(f"expected [x, y] pair, got {item!r}", f"element {i}")
        points.append((float(item[0]), float(item[1])))
    return points


def parse_polygon(text, fmt) -> list[tuple[float, float]]:
    """Parse vertex pairs from ``"csv"`` or ``"json"`` text."""
    if fmt == "csv":
        return _parse_csv(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown polygon format {fmt!r}")


def load_polygon(path, fmt=None) -> ConvexPolygon:
    """Read a polygon file; the format follows the extension unless given.

    ``OSError`` propagates for unreadable files.
    """
    path = Path(path)
    if fmt is None:
        fmt = path.suffix.lower().lstrip(".")
        if fmt not in ("csv", "json"):
            raise PolygonParseError(
                f"cannot infer format from extension {path.suffix!r}; use .csv or .json"
            )
    text = path.read_text(encoding="utf-8")
    return ConvexPolygon(parse_polygon(text, fmt))
