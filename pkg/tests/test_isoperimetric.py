import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from isoperimetry.errors import DomainError
from isoperimetry.isoperimetric import (
    circle_area,
    elementary_inequality_margin,
    wasted_area,
    wasted_area_asymptotic,
    wasted_area_bound,
    wasted_report,
)
from isoperimetry.regular_geometry import area_apothem

# 30-digit mpmath values of p^2/(4 pi) - p^2/(4 n tan(pi/n)) and friends
W4_P4 = 0.27323954473516268615107010698
W3_P1 = 0.0314649491134788541753461499778
W100_P1 = 0.0000261816615127727860930081064193
W26426_P1 = 3.74891648536433980518427958346e-10
W1E6_P1 = 2.61799387799321693639680765795e-13
BOUND3 = 0.0213020501889150385796795083408
BOUND100 = 0.0000261713287578652442101416208692

GRID = sorted({int(round(v)) for v in np.geomspace(3, 10**6, 120)})


def test_circle_area():
    assert circle_area(2 * math.pi) == pytest.approx(math.pi, rel=1e-15)
    assert circle_area(1.0) == pytest.approx(1 / (4 * math.pi), rel=1e-15)
    assert circle_area(4.0) == pytest.approx(4 / math.pi, rel=1e-15)
    with pytest.raises(DomainError):
        circle_area(0.0)


@pytest.mark.parametrize(
    "n, p, expected",
    [(4, 4.0, W4_P4), (3, 1.0, W3_P1), (100, 1.0, W100_P1), (26426, 1.0, W26426_P1), (10**6, 1.0, W1E6_P1)],
)
def test_wasted_area_reference(n, p, expected):
    assert wasted_area(n, p) == pytest.approx(expected, rel=1e-13)


def test_wasted_area_matches_definition_at_small_n():
    for n in range(3, 40):
        assert wasted_area(n, 2.0) == pytest.approx(circle_area(2.0) - area_apothem(n, 2.0), rel=1e-12)


def test_asymptotic():
    assert wasted_area_asymptotic(100, 1.0) == pytest.approx(math.pi / 120000, rel=1e-15)
    assert wasted_area_asymptotic(3, 1.0) == pytest.approx(math.pi / 108, rel=1e-15)
    # leading term underestimates at small n
    assert wasted_area_asymptotic(3, 1.0) / wasted_area(3, 1.0) == pytest.approx(0.9245, abs=1e-3)


def test_bound_values_and_direction():
    v, d = wasted_area_bound(3, 1.0)
    assert d == "lower"
    assert v == pytest.approx(BOUND3, rel=1e-14)
    assert v < wasted_area(3, 1.0)
    v, _ = wasted_area_bound(100, 1.0)
    assert v == pytest.approx(BOUND100, rel=1e-14)
    assert v < wasted_area(100, 1.0)


def test_bound_ratio_to_asymptotic_tends_to_one():
    for n in (10, 1000, 10**6):
        ratio = wasted_area_bound(n, 1.0)[0] / wasted_area_asymptotic(n, 1.0)
        assert ratio == pytest.approx(3 * n * n / (3 * n * n + math.pi**2), rel=1e-14)
    assert wasted_area_bound(10**6, 1.0)[0] / wasted_area_asymptotic(10**6, 1.0) == pytest.approx(1, abs=1e-11)


@pytest.mark.parametrize("p", [0.1, 1.0, 1000.0])
def test_ordering_chain(p):
    for n in GRID:
        w = wasted_area(n, p)
        b = wasted_area_bound(n, p)[0]
        assert w > 0
        assert b < wasted_area_asymptotic(n, p)
        assert b < w


def test_asymptotic_sharpness():
    assert wasted_area(4096, 1.0) * 4096**2 == pytest.approx(math.pi / 12, rel=1e-6)


def test_monotone_decrease_exhaustive():
    prev = wasted_area(3, 1.0)
    for n in range(4, 10**4 + 1):
        cur = wasted_area(n, 1.0)
        assert cur < prev, n
        prev = cur


@given(st.integers(3, 10**6), st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
def test_scale_law(n, p, c):
    assert wasted_area(n, c * p) == pytest.approx(c * c * wasted_area(n, p), rel=1e-12)


class TestMargin:
    def test_values(self):
        assert elementary_inequality_margin(4) == pytest.approx(4 - math.pi, rel=1e-14)
        assert elementary_inequality_margin(3) == pytest.approx(3 * math.sqrt(3) - math.pi, rel=1e-14)
        assert elementary_inequality_margin(10**4) == pytest.approx(1.03354259681262027388632344348e-7, rel=1e-13)

    def test_positive_and_decreasing(self):
        prev = elementary_inequality_margin(3)
        for n in range(4, 10**4 + 1):
            cur = elementary_inequality_margin(n)
            assert 0 < cur < prev
            prev = cur


def test_report():
    r = wasted_report(4, 4.0)
    assert r.polygon_area == pytest.approx(1.0)
    assert r.wasted_exact == pytest.approx(W4_P4, rel=1e-14)
    assert r.circle_area - r.polygon_area == pytest.approx(r.wasted_exact, rel=1e-14)
    assert r.bound_direction == "lower"


@pytest.mark.parametrize("fn", [wasted_area, wasted_area_asymptotic, wasted_area_bound])
@pytest.mark.parametrize("n, p", [(2, 1.0), (4, 0.0), (4, -1.0)])
def test_domain(fn, n, p):
    with pytest.raises(DomainError):
        fn(n, p)
