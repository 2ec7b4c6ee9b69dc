import json
import math

import numpy as np
import pytest

from _polygons import random_convex_polygon
from isoperimetry.convex_estimator import (
    ConvexPolygon,
    average_apothem,
    average_circumradius,
    centroid,
    estimate,
    load_polygon,
    parse_polygon,
    shoelace_area,
)
from isoperimetry.errors import PolygonInvariantError, PolygonParseError
from isoperimetry.regular_geometry import area_apothem, vertices

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
RECT = [(0, 0), (2, 0), (2, 1), (0, 1)]


def rectangle(k):
    return [(0, 0), (k, 0), (k, 1), (0, 1)]


class TestShoelace:
    def test_square_and_rectangle(self):
        assert shoelace_area(SQUARE) == 1.0
        assert shoelace_area(RECT) == 2.0

    def test_hexagon(self):
        assert shoelace_area(vertices(6, 6.0)) == pytest.approx(2.598076211353316, rel=1e-14)

    def test_clockwise_reversed(self):
        poly = ConvexPolygon(SQUARE[::-1])
        assert poly.reoriented
        assert shoelace_area(poly) == 1.0
        assert estimate(poly).notes


class TestInvariants:
    def test_too_few(self):
        with pytest.raises(PolygonInvariantError) as exc:
            ConvexPolygon([(0, 0), (1, 0)])
        assert exc.value.invariant == "min-vertices"

    def test_repeated_vertex(self):
        with pytest.raises(PolygonInvariantError) as exc:
            ConvexPolygon([(0, 0), (1, 0), (1, 0), (1, 1)])
        assert exc.value.invariant == "distinct-vertices"
        assert exc.value.index == 2

    def test_collinear(self):
        with pytest.raises(PolygonInvariantError) as exc:
            ConvexPolygon([(0, 0), (1, 0), (2, 0), (2, 1)])
        assert exc.value.invariant == "strict-convexity"
        assert exc.value.index == 1

    def test_reflex(self):
        star = [(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)]
        with pytest.raises(PolygonInvariantError) as exc:
            ConvexPolygon(star)
        assert exc.value.invariant == "strict-convexity"
        assert exc.value.index == 2
        assert "vertex 2" in str(exc.value)

    def test_reflex_index_refers_to_input_order_when_clockwise(self):
        star = [(0, 0), (2, 0), (1, 0.5), (2, 2), (0, 2)][::-1]
        with pytest.raises(PolygonInvariantError) as exc:
            ConvexPolygon(star)
        assert star[exc.value.index] == (1, 0.5)

    def test_non_finite(self):
        with pytest.raises(PolygonInvariantError):
            ConvexPolygon([(0, 0), (1, math.nan), (1, 1)])

    def test_tiny_and_huge_scales(self):
        for scale in (1e-9, 1e9):
            poly = ConvexPolygon(np.array(SQUARE, dtype=float) * scale)
            assert shoelace_area(poly) == pytest.approx(scale * scale, rel=1e-12)


class TestAverages:
    def test_square(self):
        assert average_apothem(SQUARE) == pytest.approx(0.5)
        assert average_apothem(SQUARE, "length_weighted") == pytest.approx(0.5)
        assert average_circumradius(SQUARE) == pytest.approx(math.sqrt(0.5), rel=1e-14)

    def test_rectangle(self):
        assert average_apothem(RECT) == pytest.approx(0.75, rel=1e-14)
        assert average_apothem(RECT, "length_weighted") == pytest.approx(4 / 6, rel=1e-14)
        assert average_circumradius(RECT) == pytest.approx(math.sqrt(1.25), rel=1e-14)

    def test_hexagon_circumradius(self):
        assert average_circumradius(vertices(6, 6.0)) == pytest.approx(1.0, rel=1e-14)

    def test_unknown_weighting(self):
        with pytest.raises(ValueError):
            average_apothem(SQUARE, "median")

    def test_centroid_triangle(self):
        np.testing.assert_allclose(centroid([(0, 0), (3, 0), (0, 3)]), (1, 1), atol=1e-15)


class TestEstimate:
    def test_square(self):
        r = estimate(SQUARE)
        assert r.estimate_unweighted == pytest.approx(1.0)
        assert r.relative_error_unweighted == pytest.approx(0.0, abs=1e-15)

    def test_rectangle(self):
        r = estimate(RECT)
        assert r.exact_area == 2.0
        assert r.perimeter == 6.0
        assert r.estimate_unweighted == pytest.approx(2.25, rel=1e-14)
        assert r.estimate_weighted == pytest.approx(2.0, rel=1e-14)
        assert r.relative_error_unweighted == pytest.approx(0.125, rel=1e-13)

    @pytest.mark.parametrize("k, expected", [(1, 0.0), (2, 0.125), (4, 0.5625)])
    def test_rectangle_family(self, k, expected):
        # hand derivation: mean apothem (k+1)/4, perimeter 2(k+1) -> error (k-1)^2 / (4k)
        assert estimate(rectangle(k)).relative_error_unweighted == pytest.approx(expected, abs=1e-14)

    @pytest.mark.parametrize("n", [3, 5, 12, 257])
    def test_regular_exact(self, n):
        r = estimate(vertices(n, 3.0, rotation=0.1))
        area = area_apothem(n, 3.0)
        assert r.estimate_unweighted == pytest.approx(area, rel=1e-10)
        assert r.estimate_weighted == pytest.approx(area, rel=1e-10)

    def test_weighted_exact_random(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            r = estimate(random_convex_polygon(rng))
            assert r.estimate_weighted == pytest.approx(r.exact_area, rel=1e-10)
            assert r.relative_error_unweighted >= 0

    def test_rigid_motion_invariance(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            pts = random_convex_polygon(rng)
            phi = rng.uniform(0, 2 * np.pi)
            rot = np.array([[np.cos(phi), -np.sin(phi)], [np.sin(phi), np.cos(phi)]])
            moved = pts @ rot.T + rng.uniform(-1e3, 1e3, 2)
            a, b = estimate(pts), estimate(moved)
            for field in ("exact_area", "perimeter", "avg_apothem_unweighted", "avg_apothem_weighted",
                          "avg_circumradius", "estimate_unweighted", "estimate_weighted"):
                assert getattr(b, field) == pytest.approx(getattr(a, field), rel=1e-10), field


class TestFiles:
    def test_csv(self, tmp_path):
        f = tmp_path / "sq.csv"
        f.write_text("# unit square\n0,0\n1,0\n1,1\n0,1\n\n")
        assert shoelace_area(load_polygon(f)) == 1.0

    def test_json(self, tmp_path):
        f = tmp_path / "rect.json"
        f.write_text(json.dumps([[0, 0], [2, 0], [2, 1], [0, 1]]))
        assert estimate(load_polygon(f)).estimate_weighted == pytest.approx(2.0)

    def test_format_override(self, tmp_path):
        f = tmp_path / "poly.txt"
        f.write_text("[[0, 0], [1, 0], [0, 1]]")
        assert shoelace_area(load_polygon(f, "json")) == 0.5
        with pytest.raises(PolygonParseError):
            load_polygon(f)

    def test_csv_error_location(self):
        with pytest.raises(PolygonParseError) as exc:
            parse_polygon("0,0\n1,zero\n1,1\n", "csv")
        assert exc.value.location == "line 2"
        with pytest.raises(PolygonParseError, match="line 1"):
            parse_polygon("0,0,0\n", "csv")

    def test_json_error_location(self):
        with pytest.raises(PolygonParseError, match="offset"):
            parse_polygon("[[0, 0], [1, 0]", "json")
        with pytest.raises(PolygonParseError, match="element 1"):
            parse_polygon('[[0, 0], ["a", 0], [1, 1]]', "json")

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_polygon(tmp_path / "nope.csv")
