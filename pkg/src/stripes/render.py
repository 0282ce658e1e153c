"""Line families through Lambda, clipped to a viewport and written as SVG."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .closure import HORIZONTAL, GenericSlope, HorizontalSlope, Slope, StructuredSlope, intercepts
from .core import DEFAULT_BUDGET, Scheme, model_set_arrays

DEDUP_TOL = 1e-9
EDGE_TOL = 1e-12


@dataclass(frozen=True)
class Viewport:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    width_px: int = 500
    height_px: int = 500

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError("viewport must have positive width and height")
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("pixel size must be positive")

    @classmethod
    def square(cls, half: float, px: int = 500) -> Viewport:
        return cls(-half, half, -half, half, px, px)

    def as_dict(self) -> dict:
        return {"x": [self.x_min, self.x_max], "y": [self.y_min, self.y_max],
                "pixels": [self.width_px, self.height_px]}


@dataclass(frozen=True, order=True)
class Line:
    """The line y = intercept + slope * x, with the number of Lambda points on it."""

    intercept: float
    slope: float
    count: int = 1

    def clip(self, vp: Viewport) -> tuple[float, float, float, float] | None:
        """Segment of the line inside the closed viewport, or None."""
        x0, x1 = vp.x_min, vp.x_max
        if self.slope != 0.0:
            ta = (vp.y_min - self.intercept) / self.slope
            tb = (vp.y_max - self.intercept) / self.slope
            x0, x1 = max(x0, min(ta, tb)), min(x1, max(ta, tb))
        elif not vp.y_min - EDGE_TOL <= self.intercept <= vp.y_max + EDGE_TOL:
            return None
        if x0 > x1 + EDGE_TOL:
            return None
        x1 = max(x0, x1)
        return x0, self.intercept + self.slope * x0, x1, self.intercept + self.slope * x1


def collect_lines(scheme: Scheme, slope: Slope, viewport: Viewport,
                  source: Viewport | None = None,
                  budget: int = DEFAULT_BUDGET) -> list[Line]:
    """Distinct lines of the given slope through Lambda that meet the viewport.

    Lines are drawn through the points of Lambda inside ``source`` (the
    viewport itself by default).  A line counts iff its segment in the
    closed viewport is nonempty; intercepts within 1e-9 are merged and the
    merged line carries the number of source points on it.
    """
    src = source or viewport
    pts = model_set_arrays(scheme, src.x_min, src.x_max, budget)
    ks = np.arange(math.ceil(src.y_min), math.floor(src.y_max) + 1, dtype=np.int64)
    if len(pts) == 0 or len(ks) == 0:
        return []
    mm = np.repeat(pts.m, len(ks))
    nn = np.repeat(pts.n, len(ks))
    kk = np.tile(ks, len(pts))
    if isinstance(slope, HorizontalSlope):
        s = 0.0
        c = kk.astype(float)
    else:
        s = slope.value(scheme)
        c = intercepts(scheme, slope, mm, nn, kk)
    ya = c + s * viewport.x_min
    yb = c + s * viewport.x_max
    hits = (np.maximum(ya, yb) >= viewport.y_min - EDGE_TOL) & \
           (np.minimum(ya, yb) <= viewport.y_max + EDGE_TOL)
    c = np.sort(c[hits])
    if len(c) == 0:
        return []
    breaks = np.flatnonzero(np.diff(c) > DEDUP_TOL) + 1
    groups = np.split(c, breaks)
    return [Line(float(g[0]), s, len(g)) for g in groups]


@dataclass(frozen=True)
class SvgStyle:
    stroke: str = "#000000"
    stroke_width: float = 0.01
    background: str | None = "#ffffff"


def fmt(v: float) -> str:
    """17 significant digits, no negative zero."""
    v = float(v)
    if v == 0.0:
        v = 0.0
    return format(v, ".17g")


def render_svg(lines, viewport: Viewport, style: SvgStyle | None = None,
               config: dict | None = None) -> str:
    """Standalone SVG 1.1 document, one path per line, y pointing up."""
    style = style or SvgStyle()
    vb = (viewport.x_min, -viewport.y_max,
          viewport.x_max - viewport.x_min, viewport.y_max - viewport.y_min)
    out = ['<?xml version="1.0" encoding="UTF-8" standalone="no"?>']
    if config is not None:
        meta = json.dumps(config, sort_keys=True, separators=(",", ":"))
        out.append("<!-- config: " + meta.replace("--", "- -") + " -->")
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{viewport.width_px}" height="{viewport.height_px}" '
        f'viewBox="{" ".join(fmt(v) for v in vb)}">'
    )
    out.append('<defs><clipPath id="view"><rect x="{}" y="{}" width="{}" height="{}"/>'
               "</clipPath></defs>".format(*(fmt(v) for v in vb)))
    if style.background:
        out.append('<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>'.format(
            *(fmt(v) for v in vb), style.background))
    out.append(f'<g id="lines" clip-path="url(#view)" fill="none" stroke="{style.stroke}" '
               f'stroke-width="{fmt(style.stroke_width)}">')
    for line in sorted(lines):
        seg = line.clip(viewport)
        if seg is None:
            continue
        x0, y0, x1, y1 = seg
        out.append(f'<path d="M {fmt(x0)} {fmt(-y0)} L {fmt(x1)} {fmt(-y1)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Figure:
    """A reproducible picture: scheme, slope, viewport and the Lambda points used."""

    scheme: Scheme
    slope: Slope
    viewport: Viewport
    source: Viewport
    style: SvgStyle = field(default_factory=SvgStyle)

    def lines(self, budget: int = DEFAULT_BUDGET) -> list[Line]:
        return collect_lines(self.scheme, self.slope, self.viewport, self.source, budget)

    def config(self) -> dict:
        from .serialize import scheme_to_json, slope_to_json
        return {"scheme": scheme_to_json(self.scheme), "slope": slope_to_json(self.slope),
                "viewport": self.viewport.as_dict(), "source": self.source.as_dict()}

    def svg(self, budget: int = DEFAULT_BUDGET) -> str:
        return render_svg(self.lines(budget), self.viewport, self.style, self.config())


def figure(number: int) -> Figure:
    """Presets for the thick-stripes picture (1) and the dense-lines picture (2).

    theta = pi/6 is built from sqrt(3)/2 and 1/2 rather than cos/sin calls:
    sqrt is correctly rounded everywhere, libm trigonometry is not, and the
    SVG output has to be byte-identical across platforms.
    """
    c, s = math.sqrt(3.0) / 2.0, 0.5
    scheme = Scheme.from_cos_sin(c, s)
    view = Viewport.square(2.5)
    if number == 1:
        return Figure(scheme, StructuredSlope(1, -1, 1), view, Viewport.square(5.0))
    if number == 2:
        return Figure(scheme, GenericSlope(math.sqrt(2.0)), view, Viewport.square(10.0))
    raise ValueError(f"no figure preset {number!r}; choose 1 or 2")


__all__ = ["Viewport", "Line", "collect_lines", "render_svg", "SvgStyle", "Figure", "figure",
           "HORIZONTAL"]
