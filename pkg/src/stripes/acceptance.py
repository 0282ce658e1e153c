"""Executable acceptance criteria, shared by the test suite and ``stripes check``."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable

import numpy as np

from .closure import StructuredSlope, closure_on_axis, trace_axis_intercepts
from .core import Scheme, model_set_arrays
from .density import kronecker_density_check
from .render import figure
from .suspension import circle_hausdorff, lemma4_alphas, orbit, predicted_alpha_set, step_gap

SQRT3 = math.sqrt(3.0)
STRIPE_SLOPE = StructuredSlope(1, -1, 1)


def pi6(epsilon: float | None = None) -> Scheme:
    return Scheme.from_radians(math.pi / 6, epsilon)


def fibonacci(epsilon: float | None = None) -> Scheme:
    return Scheme.from_tan((math.sqrt(5.0) - 1.0) / 2.0, epsilon)


def covering_radius(values: np.ndarray, lo: float, hi: float) -> float:
    """Largest distance from a point of [lo, hi] to the nearest value."""
    v = np.sort(values[(values >= lo) & (values <= hi)])
    if len(v) == 0:
        return math.inf
    inner = float(np.max(np.diff(v))) / 2.0 if len(v) > 1 else 0.0
    return max(v[0] - lo, hi - v[-1], inner)


def nearest_distance(points: np.ndarray, values: np.ndarray) -> np.ndarray:
    v = np.sort(values)
    i = np.clip(np.searchsorted(v, points), 1, len(v) - 1)
    return np.minimum(np.abs(points - v[i - 1]), np.abs(v[i] - points))


def golden_svg(number: int) -> str:
    return resources.files("stripes.data").joinpath(f"fig{number}.svg").read_text("utf-8")


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number}. {self.title}: {self.detail} ({self.seconds:.2f}s)"


def stripe_soundness():
    scheme = pi6((1 + SQRT3) / 2)
    t0 = time.perf_counter()
    tr = trace_axis_intercepts(scheme, STRIPE_SLOPE, 200.0, -3.0, 3.0)
    worst = float(np.max(closure_on_axis(scheme, STRIPE_SLOPE, -3.0, 3.0).distance(tr.values)))
    dt = time.perf_counter() - t0
    return (worst <= 1e-9 and dt < 5.0,
            f"{len(tr)} intercepts, max distance to closure {worst:.3g}, limit 5s", dt)


def stripe_completeness():
    scheme = pi6((1 + SQRT3) / 2)
    t0 = time.perf_counter()
    tr = trace_axis_intercepts(scheme, STRIPE_SLOPE, 2000.0, -3.0, 3.0)
    grid = closure_on_axis(scheme, STRIPE_SLOPE, -3.0, 3.0).grid(1e-3)
    worst = float(np.max(nearest_distance(grid, tr.values)))
    dt = time.perf_counter() - t0
    return (worst <= 2e-3 and dt < 30.0,
            f"{len(grid)} grid points, worst distance {worst:.3g} (limit 2e-3)", dt)


def dense_threshold():
    t0 = time.perf_counter()
    inv = 1.0 / abs(STRIPE_SLOPE.lam_star(pi6()))
    dense = trace_axis_intercepts(pi6(2.75), STRIPE_SLOPE, 500.0, 0.0, 1.0)
    radius = covering_radius(dense.values, 0.0, 1.0)
    gaps = [trace_axis_intercepts(pi6(2.70), STRIPE_SLOPE, ext, 0.0, 1.0).max_gap(0.0, 1.0)
            for ext in (500.0, 2000.0)]
    closure_gap = 1.0 - closure_on_axis(pi6(2.70), STRIPE_SLOPE, 0.0, 1.0).total_length()
    ok = 2.70 < inv <= 2.75 and radius <= 0.02 and min(gaps) >= 0.005 and closure_gap >= 0.005
    detail = (f"1/|lambda*|={inv:.7f}; eps=2.75 covering radius {radius:.3g}; "
              f"eps=2.70 largest gaps {gaps[0]:.4f}, {gaps[1]:.4f}, predicted {closure_gap:.4f}")
    return ok, detail, time.perf_counter() - t0


def figure_reproduction():
    t0 = time.perf_counter()
    ok = True
    parts = []
    for num, want in ((1, 112), (2, 241)):
        fig = figure(num)
        lines = fig.lines()
        same = fig.svg() == golden_svg(num)
        ok &= abs(len(lines) - want) <= 5 and same
        parts.append(f"figure {num}: {len(lines)} lines (want {want}+-5), golden "
                     f"{'match' if same else 'MISMATCH'}")
    return ok, "; ".join(parts), time.perf_counter() - t0


def iet_invariant():
    rng = np.random.default_rng(20240101)
    alphas = rng.uniform(0.0, 1.0, 20)
    t0 = time.perf_counter()
    orb = orbit(pi6(), STRIPE_SLOPE, alphas, 10**5)
    worst = float(np.max(orb.residual))
    dt = time.perf_counter() - t0
    return worst < 1e-9 and dt < 1.0, f"max residual {worst:.3g} over 20 x 1e5 steps", dt


def lemma4_crosscheck():
    scheme = pi6()
    t0 = time.perf_counter()
    alphas = lemma4_alphas(scheme, STRIPE_SLOPE, -10**4, 10**4)
    predicted = predicted_alpha_set(scheme, STRIPE_SLOPE, 1e-5)
    dist = circle_hausdorff(alphas, predicted, 1.0 / STRIPE_SLOPE.d)
    return dist <= 1e-3, f"Hausdorff distance {dist:.3g} (limit 1e-3)", time.perf_counter() - t0


def kronecker_probe():
    scheme = pi6((1 + SQRT3) / 2)
    rng = np.random.default_rng(7)
    targets = rng.uniform(-1.0, 1.0, (20, 2))
    t0 = time.perf_counter()
    hits, monotone, worst = 0, True, 0.0
    for target in targets:
        dists = []
        for t_max in (10.0, 100.0, 1000.0, 10000.0):
            res = kronecker_density_check(scheme, math.sqrt(2.0), tuple(target), 0.05, t_max)
            dists.append(res.min_distance)
        hits += res.hit
        worst = max(worst, dists[-1])
        monotone &= all(b <= a for a, b in zip(dists, dists[1:]))
    return (hits == 20 and monotone,
            f"{hits}/20 hit at t_max=1e4, worst distance {worst:.3g}, monotone={monotone}",
            time.perf_counter() - t0)


def step_lemma():
    t0 = time.perf_counter()
    worst = 0.0
    count = 0
    for scheme in (fibonacci(), pi6()):
        pts = model_set_arrays(scheme, -50.0, 50.0)
        for j in range(len(pts) - 1):
            dx, dxs = step_gap(float(pts.x_star[j]), scheme)
            worst = max(worst, abs(pts.x[j + 1] - pts.x[j] - dx),
                        abs(pts.x_star[j + 1] - pts.x_star[j] - dxs))
            count += 1
    return worst <= 1e-12, f"{count} gaps, worst mismatch {worst:.3g}", time.perf_counter() - t0


CRITERIA: list[tuple[str, Callable]] = [
    ("stripe closure soundness", stripe_soundness),
    ("stripe closure completeness", stripe_completeness),
    ("dense threshold", dense_threshold),
    ("figure reproduction", figure_reproduction),
    ("IET invariant", iet_invariant),
    ("hit-class cross-check", lemma4_crosscheck),
    ("Kronecker probe", kronecker_probe),
    ("gap-rule equivalence", step_lemma),
]


def run_criterion(number: int) -> CriterionResult:
    title, fn = CRITERIA[number - 1]
    passed, detail, seconds = fn()
    return CriterionResult(number, title, bool(passed), detail, seconds)


def run_all() -> list[CriterionResult]:
    return [run_criterion(i) for i in range(1, len(CRITERIA) + 1)]
