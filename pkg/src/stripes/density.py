"""Finite density certificates for generic slopes, and a rationality guard."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .closure import GenericSlope
from .core import DEFAULT_BUDGET, LatticePoint, Scheme, model_set_arrays


@dataclass(frozen=True)
class KroneckerResult:
    hit: bool
    min_distance: float
    nearest: LatticePoint
    #: smallest |x - target_x| over the points closer than delta (None if no hit)
    hit_extent: float | None


def kronecker_density_check(scheme: Scheme, slope: GenericSlope | float,
                            target: tuple[float, float], delta: float, t_max: float,
                            budget: int = DEFAULT_BUDGET) -> KroneckerResult:
    """Scan the line target + t (1, s), |t| <= t_max, for nearby points of Lambda.

    Every point (x, k) of Lambda with |x - target_x| <= t_max is a candidate;
    for fixed x the closest k is the integer nearest to the line's height
    there.  Distances are perpendicular distances to the line, so enlarging
    t_max only adds candidates and ``min_distance`` can never grow.
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    s = slope.s if isinstance(slope, GenericSlope) else GenericSlope(slope).s
    tx, ty = float(target[0]), float(target[1])
    pts = model_set_arrays(scheme, tx - t_max, tx + t_max, budget)
    if len(pts) == 0:
        return KroneckerResult(False, math.inf, LatticePoint(0, 0, 0), None)
    height = ty + s * (pts.x - tx)
    k = np.rint(height)
    dist = np.abs(k - height) / math.hypot(1.0, s)
    i = int(np.argmin(dist))
    close = dist < delta
    extent = float(np.min(np.abs(pts.x[close] - tx))) if close.any() else None
    return KroneckerResult(
        bool(close.any()),
        float(dist[i]),
        LatticePoint(int(pts.m[i]), int(pts.n[i]), int(k[i])),
        extent,
    )


def convergents(x: float, max_denominator: int):
    """Continued-fraction convergents p/q of x (exactly, as a binary rational)."""
    frac = Fraction(x)
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        a = math.floor(frac)
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        if q1 > max_denominator:
            return
        yield Fraction(p1, q1)
        rest = frac - a
        if rest == 0:
            return
        frac = 1 / rest


def rationality_warning(scheme: Scheme, max_denominator: int = 10**4) -> str | None:
    """Warn if tan(theta) is numerically indistinguishable from a small rational.

    Returns a message for the first convergent p/q (q <= max_denominator)
    within 1e-9 / q**2 of tan(theta), else None.  Never raises on a hit.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be at least 1")
    tan = scheme.tan_theta
    for c in convergents(tan, max_denominator):
        q = c.denominator
        if abs(tan - c.numerator / q) < 1e-9 / (q * q):
            return (
                f"tan(theta) = {tan!r} is within 1e-9/q^2 of {c.numerator}/{q}; "
                "results assume an irrational tangent"
            )
    return None
