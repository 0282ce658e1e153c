"""Cut-and-project sets in the line and in the plane.

The one-dimensional model set is

    Lambda_F = { m cos(t) - n sin(t) : 0 <= m sin(t) + n cos(t) < eps }

and the planar set is Lambda = Lambda_F x Z.  Every real coordinate handled
here is a view of the integers (m, n, k); nothing real is ever accumulated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Tolerance for comparisons against window and interval boundaries.
TOL = 1e-12

#: Default number of candidate (m, n) pairs an enumeration may inspect.
DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would inspect more lattice pairs than allowed."""

    def __init__(self, needed: int, budget: int):
        super().__init__(
            f"enumeration needs {needed} candidate lattice pairs, budget is {budget}"
        )
        self.needed = needed
        self.budget = budget


@dataclass(frozen=True)
class Scheme:
    """Rotation angle (as cosine and sine) and window [0, epsilon)."""

    cos_theta: float
    sin_theta: float
    epsilon: float

    def __post_init__(self):
        c, s, e = self.cos_theta, self.sin_theta, self.epsilon
        if not all(math.isfinite(v) for v in (c, s, e)):
            raise ValueError("scheme parameters must be finite")
        if not (0.0 < c < 1.0 and 0.0 < s < 1.0):
            raise ValueError(
                f"angle must lie strictly inside the first quadrant (cos={c!r}, sin={s!r})"
            )
        if abs(c * c + s * s - 1.0) > TOL:
            raise ValueError(f"cos^2 + sin^2 = {c * c + s * s!r}, expected 1")
        if not e > 0.0:
            raise ValueError(f"window length must be positive, got {e!r}")

    @classmethod
    def from_cos_sin(cls, cos_theta: float, sin_theta: float,
                     epsilon: float | None = None) -> Scheme:
        """Build from (cos, sin); ``epsilon=None`` selects the unit window cos + sin."""
        cos_theta, sin_theta = float(cos_theta), float(sin_theta)
        if epsilon is None:
            epsilon = cos_theta + sin_theta
        return cls(cos_theta, sin_theta, float(epsilon))

    @classmethod
    def from_tan(cls, tan_theta: float, epsilon: float | None = None) -> Scheme:
        if not tan_theta > 0:
            raise ValueError(f"tan(theta) must be positive, got {tan_theta!r}")
        c = 1.0 / math.sqrt(1.0 + tan_theta * tan_theta)
        return cls.from_cos_sin(c, tan_theta * c, epsilon)

    @classmethod
    def from_radians(cls, theta: float, epsilon: float | None = None) -> Scheme:
        return cls.from_cos_sin(math.cos(theta), math.sin(theta), epsilon)

    @classmethod
    def from_degrees(cls, degrees: float, epsilon: float | None = None) -> Scheme:
        return cls.from_radians(math.radians(degrees), epsilon)

    @property
    def tan_theta(self) -> float:
        return self.sin_theta / self.cos_theta

    @property
    def unit_window(self) -> float:
        """The window length cos + sin for which consecutive gaps are cos or sin."""
        return self.cos_theta + self.sin_theta

    def has_unit_window(self, tol: float = TOL) -> bool:
        return abs(self.epsilon - self.unit_window) <= tol

    def with_epsilon(self, epsilon: float) -> Scheme:
        return Scheme(self.cos_theta, self.sin_theta, float(epsilon))

    def physical(self, m, n):
        return m * self.cos_theta - n * self.sin_theta

    def internal(self, m, n):
        return m * self.sin_theta + n * self.cos_theta

    def in_window(self, x_star):
        return (x_star > -TOL) & (x_star < self.epsilon - TOL)


def star(m: int, n: int, scheme: Scheme) -> float:
    """Internal coordinate x* = m sin + n cos of the lattice point (m, n)."""
    return m * scheme.sin_theta + n * scheme.cos_theta


@dataclass(frozen=True, order=True)
class LatticePoint:
    m: int
    n: int
    k: int = 0

    def x(self, scheme: Scheme) -> float:
        return scheme.physical(self.m, self.n)

    def x_star(self, scheme: Scheme) -> float:
        return star(self.m, self.n, scheme)

    def in_model_set(self, scheme: Scheme) -> bool:
        return bool(scheme.in_window(self.x_star(scheme)))


@dataclass(frozen=True)
class ModelSetPoint:
    lattice: LatticePoint
    x: float
    x_star: float

    @classmethod
    def from_integers(cls, m: int, n: int, scheme: Scheme) -> ModelSetPoint:
        p = LatticePoint(int(m), int(n), 0)
        return cls(p, p.x(scheme), p.x_star(scheme))


@dataclass(frozen=True)
class ModelSetArrays:
    """Column form of an enumeration, sorted by physical coordinate."""

    m: np.ndarray
    n: np.ndarray
    x: np.ndarray
    x_star: np.ndarray

    def __len__(self):
        return len(self.x)

    def index_of(self, m: int, n: int) -> int:
        hit = np.flatnonzero((self.m == m) & (self.n == n))
        if len(hit) == 0:
            raise KeyError((m, n))
        return int(hit[0])

    def points(self) -> list[ModelSetPoint]:
        return [
            ModelSetPoint(LatticePoint(int(m), int(n), 0), float(x), float(xs))
            for m, n, x, xs in zip(self.m, self.n, self.x, self.x_star)
        ]


def _column_height(scheme: Scheme) -> int:
    # n-candidates per m: n spans a window of length eps / cos, plus rounding slack
    return int(math.floor(scheme.epsilon / scheme.cos_theta)) + 2


def search_size(scheme: Scheme, x_min: float, x_max: float) -> int:
    """Number of candidate (m, n) pairs inspected for the range [x_min, x_max]."""
    m_lo = math.floor(x_min * scheme.cos_theta)
    m_hi = math.ceil(x_max * scheme.cos_theta + scheme.epsilon * scheme.sin_theta)
    return (m_hi - m_lo + 1) * _column_height(scheme)


def model_set_arrays(scheme: Scheme, x_min: float, x_max: float,
                     budget: int = DEFAULT_BUDGET) -> ModelSetArrays:
    """Vectorised enumeration of Lambda_F over [x_min, x_max].

    Inverting the rotation gives m = x cos + x* sin, which bounds m over the
    strip x in [x_min, x_max], x* in [0, eps).  For each such m the window
    condition 0 <= m sin + n cos < eps pins n to a run of at most
    floor(eps / cos) + 1 integers.  Every candidate is then tested exactly.
    """
    if not x_min < x_max:
        raise ValueError(f"empty range [{x_min!r}, {x_max!r}]")
    needed = search_size(scheme, x_min, x_max)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    c, s = scheme.cos_theta, scheme.sin_theta
    m_lo = math.floor(x_min * c)
    m_hi = math.ceil(x_max * c + scheme.epsilon * s)
    ms = np.arange(m_lo, m_hi + 1, dtype=np.int64)
    n_lo = np.ceil(-ms * s / c - 1e-9).astype(np.int64)
    ns = n_lo[:, None] + np.arange(_column_height(scheme), dtype=np.int64)
    mm = np.broadcast_to(ms[:, None], ns.shape)
    xs = scheme.internal(mm, ns)
    x = scheme.physical(mm, ns)
    keep = scheme.in_window(xs) & (x >= x_min) & (x <= x_max)
    m_out, n_out, x_out, xs_out = mm[keep], ns[keep], x[keep], xs[keep]
    order = np.argsort(x_out, kind="stable")
    return ModelSetArrays(m_out[order], n_out[order], x_out[order], xs_out[order])


def enumerate_model_set(scheme: Scheme, x_min: float, x_max: float,
                        budget: int = DEFAULT_BUDGET) -> list[ModelSetPoint]:
    """All points of Lambda_F with x in [x_min, x_max], sorted by x."""
    return model_set_arrays(scheme, x_min, x_max, budget).points()


def model_set_window(scheme: Scheme, j_min: int, j_max: int,
                     budget: int = DEFAULT_BUDGET) -> ModelSetArrays:
    """Points x_j for j_min <= j <= j_max, with the indexing anchored at x_0 = 0."""
    if j_min > j_max:
        raise ValueError("j_min must not exceed j_max")
    reach = (max(abs(j_min), abs(j_max)) + 4) / scheme.epsilon + 4.0
    while True:
        arr = model_set_arrays(scheme, min(-reach, j_min / scheme.epsilon - 4.0),
                               max(reach, j_max / scheme.epsilon + 4.0), budget)
        zero = arr.index_of(0, 0)
        lo, hi = zero + j_min, zero + j_max
        if lo >= 0 and hi < len(arr):
            sl = slice(lo, hi + 1)
            return ModelSetArrays(arr.m[sl], arr.n[sl], arr.x[sl], arr.x_star[sl])
        reach *= 2.0


def model_set_point(scheme: Scheme, j: int, budget: int = DEFAULT_BUDGET) -> ModelSetPoint:
    """The j-th point of Lambda_F, counting from x_0 = 0."""
    return model_set_window(scheme, j, j, budget).points()[0]
