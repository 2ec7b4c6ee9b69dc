"""Numerical verification: sweeps, monotonicity scans, bound direction
classification, convergence-order fits and identity audits.

Every check here works on scalar generators ``f(n) -> float``.  The
:func:`run_suite` entry point bundles the default checks together with
their expected verdicts.  Among those verdicts, the closed-form wasted-area
bound is *expected* to be observed as a lower bound.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import metrics
from .errors import DomainError
from .isoperimetric import (
    circle_area,
    wasted_area,
    wasted_area_asymptotic,
    wasted_area_bound,
)
from .metrics import MetricId
from .regular_geometry import area_apothem, area_circumradius, check_n, check_p, derive

__all__ = [
    "SweepRow",
    "BoundClassification",
    "ConvergenceFit",
    "MonotoneResult",
    "IdentityCheck",
    "CheckResult",
    "SLOPE_TOL",
    "IDENTITY_TOL",
    "R2_MIN",
    "geometric_grid",
    "sweep_grid",
    "sweep",
    "fit_convergence_order",
    "classify_bound",
    "check_monotone",
    "identity_audit",
    "run_suite",
    "SUITES",
]

#: Accepted deviation of a fitted convergence order from its expected value.
SLOPE_TOL = 0.005
#: Pass threshold (relative) for identity audits.
IDENTITY_TOL = 1e-11
#: Minimum r**2 for a fit to count as conclusive.
R2_MIN = 0.999
#: Default window for convergence fits.
FIT_WINDOW = (64, 4096)
#: Largest range scanned pair by pair in :func:`check_monotone`.
EXHAUSTIVE_LIMIT = 10**5


def _check_range(n_min, n_max):
    n_min, n_max = check_n(n_min), check_n(n_max)
    if n_min >= n_max:
        raise DomainError(f"need n_min < n_max, got ({n_min}, {n_max})")
    return n_min, n_max


def geometric_grid(n_min, n_max, points=50, ratio=1.15) -> list[int]:
    """Integer grid from ``n_min`` to ``n_max`` (both included).

    Log-uniform with at least ``points`` nodes and spacing no coarser than
    ``ratio``.  A grid with ``2k - 1`` points contains the grid with ``k``.
    """
    n_min, n_max = _check_range(n_min, n_max)
    span = math.log(n_max / n_min)
    count = max(int(points), math.ceil(span / math.log(ratio)) + 1, 2)
    nodes = np.rint(np.exp(np.linspace(math.log(n_min), math.log(n_max), count)))
    nodes[0], nodes[-1] = n_min, n_max
    return sorted({int(v) for v in nodes})


def sweep_grid(n_min, n_max, step=1, ratio=None) -> list[int]:
    """Side counts for a sweep: linear with ``step`` or geometric with ``ratio``.

    Geometric nodes are ``round(n_min * ratio**k)``, deduplicated; ``n_max``
    is included only if a node lands on it.
    """
    n_min, n_max = _check_range(n_min, n_max)
    if ratio is None:
        step = int(step)
        if step < 1:
            raise DomainError(f"linear step must be >= 1, got {step}")
        return list(range(n_min, n_max + 1, step))
    ratio = float(ratio)
    if not math.isfinite(ratio) or ratio <= 1.0:
        raise DomainError(f"geometric ratio must be > 1, got {ratio}")
    out = []
    k = 0
    while True:
        n = round(n_min * ratio**k)
        if n > n_max:
            break
        if not out or n != out[-1]:
            out.append(n)
        k += 1
    return out


@dataclass(frozen=True)
class SweepRow:
    n: int
    p: float
    metrics: dict
    polygon_area: float
    wasted_exact: float
    wasted_asymptotic: float
    bound_value: float

    def record(self) -> dict:
        """Flat ``{column: value}`` mapping with a fixed key order."""
        rec = {"n": self.n, "p": self.p}
        rec.update((mid.value, v) for mid, v in self.metrics.items())
        rec.update(
            polygon_area=self.polygon_area,
            wasted_exact=self.wasted_exact,
            wasted_asymptotic=self.wasted_asymptotic,
            bound_value=self.bound_value,
        )
        return rec


def _row(n, p, m):
    return SweepRow(
        n=n,
        p=p,
        metrics={mv.id: mv.value for mv in metrics.evaluate_all(n, p, m)},
        polygon_area=area_apothem(n, p),
        wasted_exact=wasted_area(n, p),
        wasted_asymptotic=wasted_area_asymptotic(n, p),
        bound_value=wasted_area_bound(n, p)[0],
    )


def sweep(n_min, n_max, step=1, ratio=None, p=1.0, m=0.0, workers=1) -> list[SweepRow]:
    """Evaluate every quantity over a range of side counts.

    Rows are independent; with ``workers > 1`` they are computed in a thread
    pool and assembled in order, so the output does not depend on
    ``workers``.
    """
    p, m = check_p(p), metrics.check_m(m)
    grid = sweep_grid(n_min, n_max, step, ratio)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda n: _row(n, p, m), grid))
    return [_row(n, p, m) for n in grid]


# ---------------------------------------------------------------------------
# convergence order


@dataclass(frozen=True)
class ConvergenceFit:
    slope: float
    intercept: float
    r_squared: float
    range: tuple

    @property
    def conclusive(self) -> bool:
        return self.r_squared >= R2_MIN


def fit_convergence_order(series) -> ConvergenceFit:
    """Least-squares line through ``(log n, log value)``.

    ``series`` is a sequence of ``(n, value)`` with at least four points,
    strictly increasing ``n`` and positive values.
    """
    data = [(float(n), float(v)) for n, v in series]
    if len(data) < 4:
        raise DomainError(f"need at least 4 points, got {len(data)}")
    for i, (n, v) in enumerate(data):
        if not (v > 0.0 and math.isfinite(v)):
            raise DomainError(f"value at index {i} (n={n:g}) must be positive, got {v!r}")
        if n <= 0.0:
            raise DomainError(f"n at index {i} must be positive, got {n!r}")
        if i and n <= data[i - 1][0]:
            raise DomainError(f"n must be strictly increasing (index {i})")
    x = np.log([n for n, _ in data])
    y = np.log([v for _, v in data])
    xm, ym = x.mean(), y.mean()
    dx, dy = x - xm, y - ym
    slope = float((dx * dy).sum() / (dx * dx).sum())
    intercept = float(ym - slope * xm)
    ss_tot = float((dy * dy).sum())
    resid = dy - slope * dx
    ss_res = float((resid * resid).sum())
    r2 = 1.0 if ss_tot == 0.0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return ConvergenceFit(slope, intercept, r2, (data[0][0], data[-1][0]))


# ---------------------------------------------------------------------------
# bound classification


@dataclass(frozen=True)
class BoundClassification:
    claimed: str
    observed: str
    first_violation_n: int | None
    max_gap: float
    range: tuple
    points: int = 0

    @property
    def claim_holds(self) -> bool:
        return self.first_violation_n is None


def classify_bound(target, bound, n_range, claimed, grid=None, points=50) -> BoundClassification:
    """Decide empirically whether ``bound(n)`` lies above or below ``target(n)``.

    ``observed`` is ``"upper"`` if ``bound > target`` at every node,
    ``"lower"`` if ``bound < target`` everywhere, and ``"crossing"``
    otherwise (equality at a node counts as a crossing).
    ``first_violation_n`` is the smallest node where the ``claimed`` strict
    direction fails.  ``max_gap`` is the largest ``|bound - target|``.
    An explicit ``grid`` replaces the default geometric one.
    """
    if claimed not in ("upper", "lower"):
        raise DomainError(f"claimed direction must be 'upper' or 'lower', got {claimed!r}")
    n_min, n_max = _check_range(*n_range)
    nodes = sorted(set(grid)) if grid is not None else geometric_grid(n_min, n_max, points)
    above = below = False
    first = None
    max_gap = 0.0
    for n in nodes:
        diff = bound(n) - target(n)
        above |= diff > 0.0
        below |= diff < 0.0
        if diff == 0.0:
            above = below = True
        ok = diff > 0.0 if claimed == "upper" else diff < 0.0
        if not ok and first is None:
            first = n
        max_gap = max(max_gap, abs(diff))
    observed = "crossing" if above == below else ("upper" if above else "lower")
    return BoundClassification(claimed, observed, first, max_gap, (n_min, n_max), len(nodes))


# ---------------------------------------------------------------------------
# monotonicity


@dataclass(frozen=True)
class MonotoneResult:
    passed: bool
    direction: str
    counterexample: tuple | None
    pairs_checked: int
    exhaustive: bool


def _monotone_pairs(n_min, n_max):
    if n_max - n_min <= EXHAUSTIVE_LIMIT:
        return [(n, n + 1) for n in range(n_min, n_max)], True
    nodes = geometric_grid(n_min, n_max, points=200, ratio=1.05)
    pairs = list(zip(nodes, nodes[1:]))
    # adjacent refinement at each sample
    pairs += [(n, n + 1) for n in nodes if n < n_max]
    return sorted(set(pairs)), False


def check_monotone(f, n_range, direction) -> MonotoneResult:
    """Check strict monotonicity of ``f`` over integer ``n`` in ``n_range``.

    Ranges up to 1e5 wide are compared pair by pair; wider ones use a
    geometric sample plus the adjacent pair at each sample.  The first
    failing pair is returned as ``counterexample``.
    """
    if direction not in ("increasing", "decreasing"):
        raise DomainError(f"direction must be 'increasing' or 'decreasing', got {direction!r}")
    n_min, n_max = _check_range(*n_range)
    pairs, exhaustive = _monotone_pairs(n_min, n_max)
    cache = {}

    def value(n):
        if n not in cache:
            cache[n] = f(n)
        return cache[n]

    for lo, hi in pairs:
        a, b = value(lo), value(hi)
        ok = b > a if direction == "increasing" else b < a
        if not ok:
            return MonotoneResult(False, direction, (lo, hi), len(pairs), exhaustive)
    return MonotoneResult(True, direction, None, len(pairs), exhaustive)


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    description: str
    max_rel_deviation: float
    passed: bool


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def identity_audit(p=1.0, n_range=(3, 10**4), points=200, tol=IDENTITY_TOL) -> list[IdentityCheck]:
    """Evaluate the algebraic identities between independent formulas.

    I0  apothem and circumradius area formulas agree
    I1  sector fill = chord-arc * smoothness
    I2  angle-triangle packing = polygon area / circle area
    I3  half-angle tangent at n = angle-triangle packing at 2n
    I4  perimeter slope efficiency = slant-angle index
    """
    p = check_p(p)
    grid = geometric_grid(*n_range, points=points)
    slopes = (0.0, 0.5, 1.0, 10.0)

    def i0(n):
        return _rel(area_apothem(n, p), area_circumradius(n, p))

    def i1(n):
        return _rel(metrics.sector_fill(n), metrics.chord_arc(n) * metrics.smoothness(n))

    def i2(n):
        return _rel(metrics.angle_triangle_packing(n), area_apothem(n, p) / circle_area(p))

    def i3(n):
        return _rel(metrics.half_angle_tangent(n), metrics._packing(2 * n))

    def i4(n):
        a = derive(n, p).a
        ms = slopes + (metrics.geometric_slope(n),)
        return max(
            _rel(metrics.perimeter_slope_efficiency(p, a, m), metrics.slant_angle_index(p, a, m))
            for m in ms
        )

    table = [
        ("I0", "area_apothem == area_circumradius", i0),
        ("I1", "sector_fill == chord_arc * smoothness", i1),
        ("I2", "angle_triangle_packing == polygon_area / circle_area", i2),
        ("I3", "half_angle_tangent(n) == angle_triangle_packing(2n)", i3),
        ("I4", "perimeter_slope_efficiency == slant_angle_index", i4),
    ]
    out = []
    for name, desc, fn in table:
        dev = max(fn(n) for n in grid)
        out.append(IdentityCheck(name, desc, dev, dev <= tol))
    return out


# ---------------------------------------------------------------------------
# suites with expected verdicts


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    expected: str
    observed: str
    passed: bool
    detail: str = field(default="")

    def record(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "expected": self.expected,
            "observed": self.observed,
            "passed": self.passed,
            "detail": self.detail,
        }


def _wasted(p):
    return lambda n: wasted_area(n, p)


def _bound(p):
    return lambda n: wasted_area_bound(n, p)[0]


def _bounds_suite():
    rng = (3, 10**6)
    out = []
    c = classify_bound(_wasted(1.0), _bound(1.0), rng, "upper")
    out.append(CheckResult(
        "bounds", "wasted_bound_claimed_upper",
        "observed=lower first_violation_n=3",
        f"observed={c.observed} first_violation_n={c.first_violation_n}",
        c.observed == "lower" and c.first_violation_n == 3,
        f"max_gap={c.max_gap!r} points={c.points}",
    ))
    c = classify_bound(_wasted(1.0), _bound(1.0), rng, "lower")
    out.append(CheckResult(
        "bounds", "wasted_bound_claimed_lower",
        "observed=lower first_violation_n=None",
        f"observed={c.observed} first_violation_n={c.first_violation_n}",
        c.observed == "lower" and c.first_violation_n is None,
        f"max_gap={c.max_gap!r} points={c.points}",
    ))
    c = classify_bound(
        lambda n: area_apothem(n, 1.0), lambda n: circle_area(1.0), rng, "upper"
    )
    out.append(CheckResult(
        "bounds", "circle_area_over_polygon_area",
        "observed=upper first_violation_n=None",
        f"observed={c.observed} first_violation_n={c.first_violation_n}",
        c.observed == "upper" and c.first_violation_n is None,
        f"max_gap={c.max_gap!r} points={c.points}",
    ))
    c = classify_bound(
        lambda n: wasted_area_asymptotic(n, 1.0), _bound(1.0), rng, "lower"
    )
    out.append(CheckResult(
        "bounds", "wasted_bound_below_asymptotic",
        "observed=lower first_violation_n=None",
        f"observed={c.observed} first_violation_n={c.first_violation_n}",
        c.observed == "lower" and c.first_violation_n is None,
        f"max_gap={c.max_gap!r} points={c.points}",
    ))
    return out


def _monotone_checks():
    """(name, generator, direction, expected pass, expected counterexample)."""
    checks = [
        ("polygon_area", lambda n: area_apothem(n, 1.0), "increasing", True, None),
        ("wasted_area", _wasted(1.0), "decreasing", True, None),
        ("n_tan_pi_over_n", lambda n: n * math.tan(math.pi / n), "decreasing", True, None),
    ]
    for mid, desc in metrics.REGISTRY.items():
        if desc.monotonic_in_n not in ("increasing", "decreasing"):
            continue
        checks.append((
            mid.value,
            lambda n, mid=mid: metrics.evaluate(mid, n, 1.0, 0.0),
            desc.monotonic_in_n,
            True,
            None,
        ))
    checks.append((
        "angle_area_unbounded_claimed_increasing",
        metrics.angle_area_unbounded,
        "increasing",
        False,
        (3, 4),
    ))
    return checks


def _monotone_suite():
    out = []
    for name, f, direction, expect_pass, expect_cx in _monotone_checks():
        r = check_monotone(f, (3, 10**4), direction)
        expected = f"{direction} pass" if expect_pass else f"{direction} fail at {expect_cx}"
        observed = (
            f"{direction} pass" if r.passed else f"{direction} fail at {r.counterexample}"
        )
        ok = r.passed == expect_pass and (expect_pass or r.counterexample == expect_cx)
        out.append(CheckResult(
            "monotone", name, expected, observed, ok, f"pairs={r.pairs_checked}"
        ))
    return out


def _identity_suite():
    return [
        CheckResult(
            "identities", c.name, f"max_rel_deviation<={IDENTITY_TOL:g}",
            f"max_rel_deviation={c.max_rel_deviation:.3e}", c.passed, c.description,
        )
        for c in identity_audit(1.0)
    ]


def _powers_of_two(lo, hi):
    n = lo
    while n <= hi:
        yield n
        n *= 2


def _convergence_suite():
    lo, hi = FIT_WINDOW
    out = []
    grid = list(_powers_of_two(lo, hi))
    fit = fit_convergence_order([(n, wasted_area(n, 1.0)) for n in grid])
    amp = math.exp(fit.intercept)
    ok = (
        abs(fit.slope + 2.0) <= SLOPE_TOL
        and fit.conclusive
        and abs(amp / (math.pi / 12.0) - 1.0) <= 0.01
    )
    out.append(CheckResult(
        "convergence", "wasted_area_order",
        f"slope=-2+-{SLOPE_TOL} r2>={R2_MIN} amplitude=pi/12+-1%",
        f"slope={fit.slope:.6f} r2={fit.r_squared:.9f} amplitude={amp:.6f}",
        ok, f"n in [{lo}, {hi}], p=1",
    ))
    fit = fit_convergence_order([(n, 1.0 - metrics.smoothness(n)) for n in grid])
    out.append(CheckResult(
        "convergence", "one_minus_smoothness_order",
        f"slope=-2+-{SLOPE_TOL} r2>={R2_MIN}",
        f"slope={fit.slope:.6f} r2={fit.r_squared:.9f}",
        abs(fit.slope + 2.0) <= SLOPE_TOL and fit.conclusive, f"n in [{lo}, {hi}]",
    ))
    return out


SUITES = {
    "bounds": _bounds_suite,
    "monotone": _monotone_suite,
    "identities": _identity_suite,
    "convergence": _convergence_suite,
}


def run_suite(name="all") -> list[CheckResult]:
    """Run one named suite (or ``"all"``) and compare with expected verdicts."""
    if name == "all":
        return [r for fn in SUITES.values() for r in fn()]
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name]()
