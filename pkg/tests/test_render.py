import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from stripes import HORIZONTAL, GenericSlope, StructuredSlope, closure_on_axis
from stripes.acceptance import golden_svg
from stripes.render import Figure, Line, Viewport, collect_lines, figure, fmt, render_svg

SVG = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("number, expected", [(1, 112), (2, 241)])
def test_figure_counts(number, expected):
    assert abs(len(figure(number).lines()) - expected) <= 5


@pytest.mark.parametrize("number", [1, 2])
def test_golden(number):
    assert figure(number).svg() == golden_svg(number)


def test_deterministic():
    f = figure(1)
    assert f.svg() == f.svg()


def test_viewport_far_away(pi6, stripe_slope):
    vp = Viewport.square(2.5)
    assert collect_lines(pi6, stripe_slope, vp, Viewport(0, 1, 1000, 1001)) == []
    # no model-set point has x in [0.1, 0.2]
    assert collect_lines(pi6, stripe_slope, vp, Viewport(0.1, 0.2, -2, 2)) == []


def test_visible_rule_brute_force(pi6):
    # each Lambda point in the source box, each line checked at the viewport's edges
    fig = figure(2)
    s = math.sqrt(2.0)
    want = set()
    for m in range(-30, 31):
        for n in range(-30, 31):
            xs = m * pi6.sin_theta + n * pi6.cos_theta
            x = m * pi6.cos_theta - n * pi6.sin_theta
            if 0 <= xs < pi6.epsilon and abs(x) <= 10:
                for k in range(-10, 11):
                    c = k - s * x
                    if c - 2.5 * s <= 2.5 and c + 2.5 * s >= -2.5:
                        want.add(round(c, 8))
    got = {round(line.intercept, 8) for line in fig.lines()}
    assert got == want


def test_stripe_visibility():
    fig = figure(1)
    ivs = closure_on_axis(fig.scheme, fig.slope, -10.0, 10.0)
    c = np.array([line.intercept for line in fig.lines()])
    assert np.max(ivs.distance(c)) <= 1e-9


def test_count_stable_under_larger_search(pi6, stripe_slope):
    fig = figure(1)
    base = fig.lines()
    bigger = collect_lines(fig.scheme, fig.slope, fig.viewport, fig.source, budget=10**8)
    assert base == bigger
    # enlarging the source box only ever adds lines
    wide = collect_lines(fig.scheme, fig.slope, fig.viewport, Viewport.square(6.0))
    assert {ln.intercept for ln in base} <= {ln.intercept for ln in wide}


def test_multiplicity_on_shared_line(pi6):
    # with slope sqrt 3 - 1 = (1 cos - 1 sin)... lines may carry several points
    slope = StructuredSlope(2, 2, 1)   # lambda = 2 (cos - sin)
    lines = collect_lines(pi6, slope, Viewport.square(2.5), Viewport.square(20.0))
    assert sum(ln.count for ln in lines) >= len(lines)
    assert all(ln.count >= 1 for ln in lines)


def test_horizontal(pi6):
    lines = collect_lines(pi6, HORIZONTAL, Viewport.square(2.5))
    assert [ln.intercept for ln in lines] == [-2.0, -1.0, 0.0, 1.0, 2.0]


def test_empty_svg_is_valid():
    doc = render_svg([], Viewport.square(1.0))
    root = ET.fromstring(doc.encode())
    group = root.find(f"{SVG}g")
    assert group is not None and len(group) == 0
    assert root.get("viewBox") == "-1 -1 2 2"


def test_svg_paths_are_clipped():
    root = ET.fromstring(figure(2).svg().encode())
    paths = root.find(f"{SVG}g").findall(f"{SVG}path")
    assert len(paths) == 241
    for p in paths:
        _, x0, y0, _, x1, y1 = p.get("d").split()
        for v in (x0, y0, x1, y1):
            assert -2.5 - 1e-12 <= float(v) <= 2.5 + 1e-12


def test_line_clip():
    vp = Viewport.square(1.0)
    assert Line(0.0, 1.0).clip(vp) == (-1.0, -1.0, 1.0, 1.0)
    assert Line(3.0, 1.0).clip(vp) is None
    assert Line(2.0, 1.0).clip(vp) == (-1.0, 1.0, -1.0, 1.0)   # corner touch counts


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(0.1) == "0.10000000000000001"


def test_bad_viewport():
    with pytest.raises(ValueError):
        Viewport(1, 0, 0, 1)
    with pytest.raises(ValueError):
        figure(3)
