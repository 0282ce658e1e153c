import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stripes import BudgetExceeded, LatticePoint, Scheme, enumerate_model_set, star
from stripes.core import model_set_arrays, model_set_point, model_set_window


def brute_model_set(scheme, x_min, x_max, box):
    """Exhaustive double loop over |m|, |n| <= box, independent of the enumerator."""
    out = []
    for m in range(-box, box + 1):
        for n in range(-box, box + 1):
            xs = m * scheme.sin_theta + n * scheme.cos_theta
            x = m * scheme.cos_theta - n * scheme.sin_theta
            if 0 <= xs < scheme.epsilon and x_min <= x <= x_max:
                out.append((x, m, n))
    return sorted(out)


class TestScheme:
    def test_constructors_agree(self):
        a = Scheme.from_degrees(30, 1.0)
        b = Scheme.from_radians(math.pi / 6, 1.0)
        c = Scheme.from_tan(1 / math.sqrt(3), 1.0)
        d = Scheme.from_cos_sin(math.sqrt(3) / 2, 0.5, 1.0)
        for other in (b, c, d):
            assert other.cos_theta == pytest.approx(a.cos_theta, abs=1e-15)
            assert other.sin_theta == pytest.approx(a.sin_theta, abs=1e-15)

    def test_default_window_is_cos_plus_sin(self):
        s = Scheme.from_degrees(30)
        assert s.epsilon == s.cos_theta + s.sin_theta
        assert s.has_unit_window()

    @pytest.mark.parametrize("c, s, e", [
        (0.6, 0.7, 1.0),      # not on the unit circle
        (1.0, 0.0, 1.0),      # axis angle
        (-0.6, 0.8, 1.0),     # second quadrant
        (0.6, 0.8, 0.0),      # empty window
        (0.6, 0.8, -1.0),
    ])
    def test_invalid(self, c, s, e):
        with pytest.raises(ValueError):
            Scheme(c, s, e)


class TestStar:
    def test_examples(self, pi6):
        assert star(0, 0, pi6) == 0.0
        assert star(1, 0, pi6) == pi6.sin_theta
        assert star(1, 0, pi6) == pytest.approx(0.5, abs=1e-15)
        assert star(0, 1, pi6) == pytest.approx(0.8660254037844386, abs=1e-15)

    def test_lattice_point_views(self, pi6):
        p = LatticePoint(3, -2, 7)
        assert p.x(pi6) == 3 * pi6.cos_theta + 2 * pi6.sin_theta
        assert p.x_star(pi6) == star(3, -2, pi6)


class TestEnumerate:
    def test_step_lemma_range(self, pi6):
        pts = enumerate_model_set(pi6, 0.0, 2.0)
        assert [(p.lattice.m, p.lattice.n) for p in pts] == [(0, 0), (1, 0), (2, 0)]
        np.testing.assert_allclose([p.x for p in pts], [0, 0.8660254, 1.7320508], atol=1e-7)

    def test_origin_only(self, pi6):
        pts = enumerate_model_set(pi6, -0.1, 0.1)
        assert len(pts) == 1 and pts[0].x == 0.0

    def test_fibonacci_gaps(self, fib):
        xs = [p.x for p in enumerate_model_set(fib, 0.0, 3.0)]
        for gap in np.diff(xs):
            assert min(abs(gap - fib.cos_theta), abs(gap - fib.sin_theta)) < 1e-12

    @pytest.mark.parametrize("eps", [0.3, 1.1, 1.3660254037844386, 2.75])
    def test_matches_exhaustive_loop(self, eps):
        scheme = Scheme.from_degrees(30, eps)
        got = [(p.x, p.lattice.m, p.lattice.n) for p in enumerate_model_set(scheme, -8.0, 8.0)]
        assert got == brute_model_set(scheme, -8.0, 8.0, 40)

    def test_exact_window_edge_excluded(self):
        # 2 sin 30deg is exactly 1, which float arithmetic rounds to just below 1
        scheme = Scheme.from_degrees(30, 1.0)
        assert star(2, 0, scheme) < 1.0
        got = {(p.lattice.m, p.lattice.n) for p in enumerate_model_set(scheme, 0.0, 3.0)}
        assert (2, 0) not in got

    def test_membership_recomputed(self, fib):
        for p in enumerate_model_set(fib.with_epsilon(0.7), -30, 30):
            xs = p.lattice.m * fib.sin_theta + p.lattice.n * fib.cos_theta
            assert 0 <= xs < 0.7
            assert xs == p.x_star

    def test_budget(self, pi6):
        with pytest.raises(BudgetExceeded):
            model_set_arrays(pi6, -1e6, 1e6, budget=1000)
        with pytest.raises(BudgetExceeded):
            model_set_arrays(pi6.with_epsilon(1e9), 0, 1)

    def test_empty_range_rejected(self, pi6):
        with pytest.raises(ValueError):
            enumerate_model_set(pi6, 1.0, 1.0)

    def test_indexing_from_origin(self, pi6):
        assert model_set_point(pi6, 0).lattice == LatticePoint(0, 0, 0)
        assert model_set_point(pi6, 1).lattice == LatticePoint(1, 0, 0)
        w = model_set_window(pi6, -5, 5)
        assert len(w) == 11 and w.m[5] == 0 and w.n[5] == 0
        assert np.all(np.diff(w.x) > 0)


@settings(max_examples=40, deadline=None)
@given(
    tan=st.floats(0.05, 20.0),
    eps=st.floats(0.05, 3.0),
    lo=st.floats(-20.0, 20.0),
    width=st.floats(0.1, 10.0),
)
def test_enumeration_property(tan, eps, lo, width):
    scheme = Scheme.from_tan(tan, eps)
    pts = model_set_arrays(scheme, lo, lo + width)
    assert np.all(np.diff(pts.x) > 0)
    assert np.all((pts.x >= lo) & (pts.x <= lo + width))
    xs = pts.m * scheme.sin_theta + pts.n * scheme.cos_theta
    assert np.all((xs >= -1e-12) & (xs < eps))
    box = int(math.ceil(abs(lo) + width + eps)) * 2 + 2
    brute = brute_model_set(scheme, lo, lo + width, box)
    # boundary points within 1e-12 of the window edge may legitimately differ
    brute = [b for b in brute if 1e-12 < b[1] * scheme.sin_theta + b[2] * scheme.cos_theta
             < eps - 1e-12 or (b[1], b[2]) == (0, 0)]
    got = set(zip(pts.m.tolist(), pts.n.tolist()))
    assert {(m, n) for _, m, n in brute} <= got
