"""Slopes, the discrete / dense / stripes classification, and the y-axis trace.

For w = (1, lambda/d) with lambda = a cos - b sin, the line through
(x, k) in Lambda meets the y-axis at

    k - lambda x / d = k - (a m + b n) / d + lambda* x* / d,

with lambda* = a sin + b cos.  The second form is what gets evaluated: it
keeps the unbounded part rational and the irrational part bounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Union

import numpy as np

from .core import DEFAULT_BUDGET, TOL, LatticePoint, Scheme, model_set_arrays

LAMBDA_STAR_TOL = 1e-12


@dataclass(frozen=True)
class StructuredSlope:
    """Slope (a cos - b sin) / d, stored in lowest terms with d > 0."""

    a: int
    b: int
    d: int = 1

    def __post_init__(self):
        a, b, d = int(self.a), int(self.b), int(self.d)
        if d == 0:
            raise ValueError("d must be nonzero")
        if a == 0 and b == 0:
            raise ValueError("(a, b) = (0, 0) is the horizontal slope; use HORIZONTAL")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(math.gcd(a, b), d)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)
        object.__setattr__(self, "d", d // g)

    def lam(self, scheme: Scheme) -> float:
        return self.a * scheme.cos_theta - self.b * scheme.sin_theta

    def lam_star(self, scheme: Scheme) -> float:
        return self.a * scheme.sin_theta + self.b * scheme.cos_theta

    def value(self, scheme: Scheme) -> float:
        return self.lam(scheme) / self.d


@dataclass(frozen=True)
class GenericSlope:
    """A real slope s declared to lie outside Q cos + Q sin."""

    s: float

    def __post_init__(self):
        s = float(self.s)
        if not math.isfinite(s):
            raise ValueError("vertical or non-finite slopes are not of the form (1, s)")
        if s == 0.0:
            raise ValueError("s = 0 is the horizontal slope; use HORIZONTAL")
        object.__setattr__(self, "s", s)

    def value(self, scheme: Scheme | None = None) -> float:
        return self.s


@dataclass(frozen=True)
class HorizontalSlope:
    def value(self, scheme: Scheme | None = None) -> float:
        return 0.0


HORIZONTAL = HorizontalSlope()

Slope = Union[StructuredSlope, GenericSlope, HorizontalSlope]


def slope_from_real(s: float) -> Slope:
    return HORIZONTAL if float(s) == 0.0 else GenericSlope(s)


@dataclass(frozen=True)
class Discrete:
    name = "discrete"


@dataclass(frozen=True)
class Dense:
    reason: str = ""
    name = "dense"


@dataclass(frozen=True)
class Stripes:
    d: int
    lambda_star: float
    epsilon: float
    name = "stripes"

    def __post_init__(self):
        if not self.epsilon * abs(self.lambda_star) < 1.0:
            raise ValueError("stripes need epsilon * |lambda*| < 1")

    @property
    def width(self) -> float:
        return self.epsilon * abs(self.lambda_star) / self.d

    @property
    def spacing(self) -> float:
        return 1.0 / self.d

    @property
    def offset(self) -> float:
        """Signed extent eps * lambda* / d of each stripe away from l / d."""
        return self.epsilon * self.lambda_star / self.d


Classification = Union[Discrete, Dense, Stripes]


def classify_slope(scheme: Scheme, slope: Slope) -> Classification:
    if isinstance(slope, HorizontalSlope):
        return Discrete()
    if isinstance(slope, GenericSlope):
        return Dense("generic slope")
    lam_star = slope.lam_star(scheme)
    if abs(lam_star) < LAMBDA_STAR_TOL:
        raise ValueError(
            f"lambda* = {lam_star!r} vanishes for slope {slope}; tan(theta) looks rational"
        )
    if scheme.epsilon >= 1.0 / abs(lam_star):
        return Dense("epsilon >= 1/|lambda*|")
    return Stripes(slope.d, lam_star, scheme.epsilon)


@dataclass(frozen=True)
class IntervalSet:
    """Sorted disjoint closed intervals; touching or overlapping ones are merged."""

    intervals: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        merged: list[list[float]] = []
        for lo, hi in sorted((float(lo), float(hi)) for lo, hi in self.intervals):
            if lo > hi:
                raise ValueError(f"interval [{lo}, {hi}] is reversed")
            if merged and lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        object.__setattr__(self, "intervals", tuple((lo, hi) for lo, hi in merged))

    def __iter__(self) -> Iterator[tuple[float, float]]:
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __bool__(self):
        return bool(self.intervals)

    @property
    def lows(self) -> np.ndarray:
        return np.array([lo for lo, _ in self.intervals], dtype=float)

    @property
    def highs(self) -> np.ndarray:
        return np.array([hi for _, hi in self.intervals], dtype=float)

    def total_length(self) -> float:
        return float(sum(hi - lo for lo, hi in self.intervals))

    def distance(self, y):
        """Distance from each y to the set (0 inside); inf for an empty set."""
        y = np.asarray(y, dtype=float)
        if not self.intervals:
            return np.full(y.shape, np.inf)
        lows, highs = self.lows, self.highs
        i = np.clip(np.searchsorted(lows, y, side="right") - 1, 0, len(lows) - 1)
        inside = np.maximum(0.0, np.maximum(lows[i] - y, y - highs[i]))
        j = np.clip(i + 1, 0, len(lows) - 1)
        nxt = np.maximum(0.0, lows[j] - y)
        return np.minimum(inside, np.where(j == i, np.inf, nxt))

    def contains(self, y, tol: float = TOL):
        return self.distance(y) <= tol

    def grid(self, h: float) -> np.ndarray:
        """Points of h Z lying in the set."""
        pts = [np.arange(math.ceil(lo / h), math.floor(hi / h) + 1) * h
               for lo, hi in self.intervals]
        return np.concatenate(pts) if pts else np.empty(0)


def closure_on_axis(scheme: Scheme, slope: StructuredSlope,
                    y_min: float, y_max: float) -> IntervalSet:
    """Closure of the y-axis trace, as the union of [l/d, (l + eps lambda*)/d], clipped."""
    if not y_min <= y_max:
        raise ValueError("y_min must not exceed y_max")
    cls = classify_slope(scheme, slope)
    if not isinstance(cls, Stripes):
        raise ValueError(f"closure is the whole axis in the {cls.name} regime")
    d = cls.d
    lo_off, hi_off = sorted((0.0, cls.epsilon * cls.lambda_star))
    out = []
    for l in range(math.floor(y_min * d - hi_off) - 1, math.ceil(y_max * d - lo_off) + 2):
        lo, hi = max((l + lo_off) / d, y_min), min((l + hi_off) / d, y_max)
        if lo <= hi:
            out.append((lo, hi))
    return IntervalSet(tuple(out))


@dataclass(frozen=True)
class AxisTrace:
    """Intercepts k - (lambda/d) x, sorted, with their source lattice points."""

    values: np.ndarray
    m: np.ndarray = field(repr=False)
    n: np.ndarray = field(repr=False)
    k: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.values)

    def points(self) -> Iterator[tuple[float, LatticePoint]]:
        for v, m, n, k in zip(self.values, self.m, self.n, self.k):
            yield float(v), LatticePoint(int(m), int(n), int(k))

    def max_gap(self, lo: float, hi: float) -> float:
        """Largest stretch of [lo, hi] containing no intercept."""
        v = self.values[(self.values >= lo) & (self.values <= hi)]
        edges = np.concatenate(([lo], v, [hi]))
        return float(np.max(np.diff(edges)))


def intercepts(scheme: Scheme, slope: StructuredSlope | GenericSlope, m, n, k):
    """Intercept of the line through the lattice point (m, n, k), evaluated from integers."""
    if isinstance(slope, StructuredSlope):
        d = slope.d
        whole = (np.asarray(k) * d - (slope.a * np.asarray(m) + slope.b * np.asarray(n))) / d
        return whole + slope.lam_star(scheme) * scheme.internal(m, n) / d
    return np.asarray(k) - slope.s * scheme.physical(m, n)


def trace_axis_intercepts(scheme: Scheme, slope: StructuredSlope | GenericSlope,
                          x_extent: float, y_min: float, y_max: float,
                          budget: int = DEFAULT_BUDGET) -> AxisTrace:
    """Brute-force y-axis trace of the lines through Lambda with |x| <= x_extent."""
    if not x_extent > 0:
        raise ValueError("x_extent must be positive")
    if not y_min <= y_max:
        raise ValueError("y_min must not exceed y_max")
    pts = model_set_arrays(scheme, -x_extent, x_extent, budget)
    base = intercepts(scheme, slope, pts.m, pts.n, np.zeros_like(pts.m))
    k0 = np.ceil(y_min - base - 1e-9).astype(np.int64)
    ks = k0[:, None] + np.arange(int(math.floor(y_max - y_min)) + 3, dtype=np.int64)
    mm = np.broadcast_to(pts.m[:, None], ks.shape)
    nn = np.broadcast_to(pts.n[:, None], ks.shape)
    vals = intercepts(scheme, slope, mm, nn, ks)
    keep = (vals >= y_min) & (vals <= y_max)
    vals, mm, nn, ks = vals[keep], mm[keep], nn[keep], ks[keep]
    order = np.lexsort((ks, nn, mm, vals))
    return AxisTrace(vals[order], mm[order], nn[order], ks[order])
