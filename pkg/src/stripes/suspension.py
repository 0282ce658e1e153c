"""Suspension dynamics over the two-interval exchange, for the window cos + sin.

With eps = cos + sin consecutive points of Lambda_F differ by (cos, sin) or
(sin, -cos) in (x, x*), depending on which half of the window x* sits in.
The plane is folded onto a phase space X of stacked rectangles over the
base M = [0, cos + sin) x [0, 1/d); a line of slope lambda/d then returns to
M by an interval exchange and its returns fill the line

    L_alpha = { (xi, alpha - (lambda*/d) xi mod 1/d) }.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closure import StructuredSlope
from .core import DEFAULT_BUDGET, TOL, Scheme, model_set_arrays, model_set_point, model_set_window


def require_unit_window(scheme: Scheme) -> None:
    if not scheme.has_unit_window():
        raise ValueError(
            f"suspension dynamics need epsilon = cos + sin = {scheme.unit_window!r}, "
            f"got {scheme.epsilon!r}"
        )


def cmod(value, period: float):
    """Floor-based canonical representative in [0, period); near-period values wrap to 0."""
    r = np.mod(value, period)
    r = np.where(r >= period - TOL, 0.0, r)
    return float(r) if np.ndim(r) == 0 else r


def step_gap(x_star: float, scheme: Scheme) -> tuple[float, float]:
    """Increments (x_{j+1} - x_j, x*_{j+1} - x*_j) given x*_j."""
    require_unit_window(scheme)
    if not 0.0 <= x_star < scheme.epsilon:
        raise ValueError(f"x* = {x_star!r} lies outside the window")
    if x_star < scheme.cos_theta:
        return scheme.cos_theta, scheme.sin_theta
    return scheme.sin_theta, -scheme.cos_theta


@dataclass(frozen=True)
class BaseState:
    xi: float
    eta: float


@dataclass(frozen=True)
class SuspensionState:
    xi: float
    eta: float
    zeta: float

    @property
    def base(self) -> BaseState:
        return BaseState(self.xi, self.eta)


@dataclass(frozen=True)
class LineLAlpha:
    alpha: float
    slope: StructuredSlope

    def __call__(self, xi, scheme: Scheme):
        return l_alpha_eval(self.alpha, xi, scheme, self.slope)


def roof(xi: float, scheme: Scheme) -> float:
    """Height of the fibre above xi."""
    return scheme.cos_theta if xi < scheme.cos_theta else scheme.sin_theta


def glue(state: SuspensionState, scheme: Scheme, d: int = 1) -> SuspensionState:
    """Canonical representative under the three identifications of X."""
    xi, eta, zeta = state.xi, cmod(state.eta, 1.0 / d), state.zeta
    while zeta >= roof(xi, scheme) - TOL:
        top = roof(xi, scheme)
        if xi < scheme.cos_theta:
            xi += scheme.sin_theta
        else:
            xi -= scheme.cos_theta
        zeta = max(zeta - top, 0.0)
    return SuspensionState(xi, eta, zeta)


def album_map(x: float, y: float, scheme: Scheme, d: int = 1,
              budget: int = DEFAULT_BUDGET) -> SuspensionState:
    """Fold (x, y) into X: (x_j*, y mod 1/d, x - x_j) for x_j <= x < x_{j+1}."""
    require_unit_window(scheme)
    # gaps are cos or sin, both < 1, so some x_j lies in [x - 1, x]
    pts = model_set_arrays(scheme, x - 1.0, x + TOL, budget)
    j = int(np.searchsorted(pts.x, x + TOL, side="right")) - 1
    zeta = max(x - float(pts.x[j]), 0.0)
    return glue(SuspensionState(float(pts.x_star[j]), y, zeta), scheme, d)


def poincare_step(state: BaseState, scheme: Scheme, slope: StructuredSlope) -> BaseState:
    """One return of the line flow to the base M."""
    require_unit_window(scheme)
    rise = slope.lam(scheme) / slope.d
    period = 1.0 / slope.d
    if state.xi < scheme.cos_theta:
        return BaseState(state.xi + scheme.sin_theta,
                         cmod(state.eta + rise * scheme.cos_theta, period))
    return BaseState(state.xi - scheme.cos_theta,
                     cmod(state.eta + rise * scheme.sin_theta, period))


def l_alpha_eval(alpha: float, xi, scheme: Scheme, slope: StructuredSlope):
    return cmod(alpha - slope.lam_star(scheme) / slope.d * np.asarray(xi, dtype=float),
                1.0 / slope.d)


def alpha_for_star(x_star, scheme: Scheme, slope: StructuredSlope):
    """Intercept class alpha whose L_alpha passes through (x_star, 0)."""
    return cmod(slope.lam_star(scheme) / slope.d * np.asarray(x_star, dtype=float),
                1.0 / slope.d)


def lemma4_alpha_for_hit(j: int, scheme: Scheme, slope: StructuredSlope,
                         budget: int = DEFAULT_BUDGET) -> float:
    require_unit_window(scheme)
    return float(alpha_for_star(model_set_point(scheme, j, budget).x_star, scheme, slope))


def lemma4_alphas(scheme: Scheme, slope: StructuredSlope, j_min: int, j_max: int,
                  budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """alpha values for every x_j with j_min <= j <= j_max, in index order."""
    require_unit_window(scheme)
    return alpha_for_star(model_set_window(scheme, j_min, j_max, budget).x_star, scheme, slope)


@dataclass(frozen=True)
class Orbit:
    """Returns of the lines through (0, alpha) to the base, indexed by step.

    ``m`` and ``n`` are the lattice integers of x_j; ``xi`` and ``eta`` have
    shape (len(alpha), steps + 1).
    """

    alpha: np.ndarray
    m: np.ndarray
    n: np.ndarray
    xi: np.ndarray
    eta: np.ndarray
    residual: np.ndarray


def integer_orbit(scheme: Scheme, steps: int) -> tuple[np.ndarray, np.ndarray]:
    """Lattice integers (m_j, n_j) of x_0 = 0, ..., x_steps under the exchange.

    The branch is decided on x* recomputed from the integers, so the orbit
    cannot drift off the model set.
    """
    require_unit_window(scheme)
    c, s = scheme.cos_theta, scheme.sin_theta
    ms, ns = [0], [0]
    mj = nj = 0
    for _ in range(steps):
        if mj * s + nj * c < c:
            mj += 1
        else:
            nj -= 1
        ms.append(mj)
        ns.append(nj)
    return np.array(ms, dtype=np.int64), np.array(ns, dtype=np.int64)


def orbit(scheme: Scheme, slope: StructuredSlope, alpha, steps: int) -> Orbit:
    """Iterate the base map from (0, alpha) for each alpha.

    eta is evaluated as alpha + lambda x_j / d mod 1/d from the integers of
    x_j; the residual measures how far eta + (lambda*/d) xi strays from alpha
    on the circle of length 1/d.
    """
    alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
    m, n = integer_orbit(scheme, steps)
    period = 1.0 / slope.d
    xi = np.broadcast_to(scheme.internal(m, n), (len(alpha), steps + 1))
    eta = cmod(alpha[:, None] + slope.lam(scheme) / slope.d * scheme.physical(m, n)[None, :],
               period)
    drift = cmod(eta + slope.lam_star(scheme) / slope.d * xi - alpha[:, None], period)
    residual = np.minimum(drift, period - drift)
    return Orbit(alpha, m, n, np.asarray(xi), np.asarray(eta), residual)


def circle_hausdorff(a, b: np.ndarray, period: float) -> float:
    """Hausdorff distance between two finite point sets on R / period Z."""
    a = np.sort(cmod(np.asarray(a, dtype=float), period))
    b = np.sort(cmod(np.asarray(b, dtype=float), period))

    def one_sided(p, q):
        qq = np.concatenate((q - period, q, q + period))
        i = np.clip(np.searchsorted(qq, p), 1, len(qq) - 1)
        return float(np.max(np.minimum(np.abs(p - qq[i - 1]), np.abs(qq[i] - p))))

    return max(one_sided(a, b), one_sided(b, a))


def predicted_alpha_set(scheme: Scheme, slope: StructuredSlope, h: float) -> np.ndarray:
    """Grid of spacing <= h over the projection t lambda*/d mod 1/d, 0 <= t <= eps."""
    length = abs(scheme.epsilon * slope.lam_star(scheme) / slope.d)
    t = np.linspace(0.0, 1.0, max(2, math.ceil(length / h) + 1))
    return cmod(t * scheme.epsilon * slope.lam_star(scheme) / slope.d, 1.0 / slope.d)
