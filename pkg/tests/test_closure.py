import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stripes import (
    HORIZONTAL,
    Dense,
    Discrete,
    GenericSlope,
    IntervalSet,
    Scheme,
    Stripes,
    StructuredSlope,
    classify_slope,
    closure_on_axis,
    slope_from_real,
    trace_axis_intercepts,
)
from stripes.acceptance import covering_radius, nearest_distance


class TestSlope:
    def test_normalisation(self):
        assert StructuredSlope(2, -2, -4) == StructuredSlope(-1, 1, 2)
        s = StructuredSlope(3, 6, 9)
        assert (s.a, s.b, s.d) == (1, 2, 3)

    @pytest.mark.parametrize("args", [(0, 0, 1), (1, 1, 0)])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            StructuredSlope(*args)

    def test_derived_values(self, pi6):
        s = StructuredSlope(1, -1, 1)
        assert s.lam(pi6) == pytest.approx((1 + math.sqrt(3)) / 2, abs=1e-15)
        assert s.lam_star(pi6) == pytest.approx((1 - math.sqrt(3)) / 2, abs=1e-15)
        assert StructuredSlope(1, -1, 2).value(pi6) == pytest.approx(s.lam(pi6) / 2)

    def test_real_slopes(self):
        assert slope_from_real(0.0) is HORIZONTAL
        assert slope_from_real(1.5) == GenericSlope(1.5)
        with pytest.raises(ValueError):
            GenericSlope(math.inf)


class TestClassify:
    def test_stripes(self, pi6, stripe_slope):
        c = classify_slope(pi6, stripe_slope)
        assert isinstance(c, Stripes)
        assert c.width == pytest.approx(0.5, abs=1e-12)
        assert c.spacing == 1.0

    def test_generic_dense(self, pi6):
        assert isinstance(classify_slope(pi6, GenericSlope(math.sqrt(2))), Dense)

    def test_large_window_dense(self, pi6, stripe_slope):
        # 1/|lambda*| = sqrt 3 + 1 = 2.732... <= 3
        assert isinstance(classify_slope(pi6.with_epsilon(3.0), stripe_slope), Dense)

    def test_threshold_is_inclusive(self, pi6, stripe_slope):
        edge = 1.0 / abs(stripe_slope.lam_star(pi6))
        assert isinstance(classify_slope(pi6.with_epsilon(edge), stripe_slope), Dense)
        below = pi6.with_epsilon(math.nextafter(edge, 0.0))
        assert isinstance(classify_slope(below, stripe_slope), Stripes)

    def test_horizontal(self, pi6, fib):
        assert isinstance(classify_slope(pi6, HORIZONTAL), Discrete)
        assert isinstance(classify_slope(fib, HORIZONTAL), Discrete)

    def test_vanishing_lambda_star(self):
        # tan = 1/2 makes 2 sin - cos vanish
        with pytest.raises(ValueError):
            classify_slope(Scheme.from_tan(0.5), StructuredSlope(2, -1, 1))


class TestClosure:
    def test_unit_window(self, pi6, stripe_slope):
        got = list(closure_on_axis(pi6, stripe_slope, 0.0, 2.0))
        np.testing.assert_allclose(got, [[0, 0], [0.5, 1], [1.5, 2]], atol=1e-12)

    def test_gap(self, pi6, stripe_slope):
        assert not closure_on_axis(pi6, stripe_slope, 0.1, 0.4)

    def test_d_two(self, pi6):
        got = list(closure_on_axis(pi6, StructuredSlope(1, -1, 2), 0.0, 1.0))
        np.testing.assert_allclose(got, [[0, 0], [0.25, 0.5], [0.75, 1]], atol=1e-12)

    def test_positive_lambda_star(self, pi6):
        slope = StructuredSlope(1, 0, 1)   # lambda* = sin = 1/2
        got = list(closure_on_axis(pi6.with_epsilon(1.0), slope, -0.2, 2.0))
        np.testing.assert_allclose(got, [[0, 0.5], [1, 1.5], [2, 2]], atol=1e-12)

    def test_dense_regime_rejected(self, pi6, stripe_slope):
        with pytest.raises(ValueError):
            closure_on_axis(pi6.with_epsilon(3.0), stripe_slope, 0.0, 1.0)

    def test_component_structure(self, pi6):
        for d in (1, 2, 3, 5):
            slope = StructuredSlope(1, -1, d)
            ivs = closure_on_axis(pi6, slope, -4.0, 4.0)
            inner = [(lo, hi) for lo, hi in ivs if -3.9 < lo and hi < 3.9]
            widths = np.array([hi - lo for lo, hi in inner])
            assert np.allclose(widths, widths[0], atol=1e-12) and widths[0] > 0
            assert widths[0] < 1.0 / d
            lows = np.array([lo for lo, _ in inner])
            assert np.allclose(np.diff(lows), 1.0 / d, atol=1e-12)
            assert len(inner) >= 7 * d


class TestIntervalSet:
    def test_merge(self):
        s = IntervalSet(((2, 3), (0, 1), (1, 1.5), (2.5, 4)))
        assert list(s) == [(0, 1.5), (2, 4)]

    def test_distance(self):
        s = IntervalSet(((0, 1), (2, 3)))
        np.testing.assert_allclose(s.distance([-1, 0.5, 1.4, 1.8, 5]), [1, 0, 0.4, 0.2, 2])
        assert np.all(np.isinf(IntervalSet().distance([0.0])))


class TestTrace:
    def test_origin_line(self, pi6, stripe_slope):
        tr = trace_axis_intercepts(pi6, stripe_slope, 1.0, -0.01, 0.01)
        assert [(v, (p.m, p.n, p.k)) for v, p in tr.points()] == [(0.0, (0, 0, 0))]

    def test_values_match_direct_formula(self, pi6):
        slope = StructuredSlope(2, 3, 5)
        tr = trace_axis_intercepts(pi6.with_epsilon(0.4), slope, 100.0, -2.0, 2.0)
        x = tr.m * pi6.cos_theta - tr.n * pi6.sin_theta
        np.testing.assert_allclose(tr.values, tr.k - slope.lam(pi6) / slope.d * x, atol=1e-11)
        assert np.all(np.diff(tr.values) >= 0)

    def test_containment(self, pi6, stripe_slope):
        tr = trace_axis_intercepts(pi6, stripe_slope, 50.0, -3.0, 3.0)
        assert np.max(closure_on_axis(pi6, stripe_slope, -3, 3).distance(tr.values)) <= 1e-9

    def test_dense_regime(self, pi6, stripe_slope):
        tr = trace_axis_intercepts(pi6.with_epsilon(2.8), stripe_slope, 200.0, 0.0, 1.0)
        assert covering_radius(tr.values, 0.0, 1.0) <= 0.02

    def test_dense_improves_with_extent(self, pi6, stripe_slope):
        scheme = pi6.with_epsilon(2.75)
        radii = [covering_radius(trace_axis_intercepts(scheme, stripe_slope, e, 0, 1).values,
                                 0, 1) for e in (20.0, 100.0, 500.0)]
        assert radii[0] >= radii[1] >= radii[2]

    def test_coverage(self, pi6, stripe_slope):
        tr = trace_axis_intercepts(pi6, stripe_slope, 1000.0, -1.0, 1.0)
        grid = closure_on_axis(pi6, stripe_slope, -1.0, 1.0).grid(1e-3)
        assert np.max(nearest_distance(grid, tr.values)) <= 2e-3

    def test_generic_slope(self, pi6):
        tr = trace_axis_intercepts(pi6, GenericSlope(math.sqrt(2)), 10.0, -1, 1)
        x = tr.m * pi6.cos_theta - tr.n * pi6.sin_theta
        np.testing.assert_allclose(tr.values, tr.k - math.sqrt(2) * x, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(
    theta=st.floats(0.1, 1.4),
    a=st.integers(-4, 4),
    b=st.integers(-4, 4),
    d=st.integers(1, 4),
    frac=st.floats(0.05, 0.95),
)
def test_soundness_property(theta, a, b, d, frac):
    assume((a, b) != (0, 0))
    slope = StructuredSlope(a, b, d)
    scheme = Scheme.from_radians(theta, 1.0)
    lam_star = abs(slope.lam_star(scheme))
    assume(lam_star > 1e-3)
    scheme = scheme.with_epsilon(frac / lam_star)
    assume(scheme.epsilon / scheme.cos_theta < 200)
    tr = trace_axis_intercepts(scheme, slope, 30.0, -2.0, 2.0)
    dist = closure_on_axis(scheme, slope, -2.0, 2.0).distance(tr.values)
    assert len(dist) == 0 or np.max(dist) <= 1e-9
