"""
Thick stripes and dense lines
=============================

Regenerate both pictures as SVG and probe the dense family with a
Kronecker-style scan.
"""

import math
import pathlib

from stripes import kronecker_density_check
from stripes.render import figure

out = pathlib.Path("figures")
out.mkdir(exist_ok=True)
for number in (1, 2):
    fig = figure(number)
    lines = fig.lines()
    (out / f"fig{number}.svg").write_text(fig.svg())
    print(f"figure {number}: {len(lines)} lines -> {out / f'fig{number}.svg'}")

scheme = figure(2).scheme
for t_max in (1, 10, 100, 1000):
    res = kronecker_density_check(scheme, math.sqrt(2), (0.3, 0.7), 0.05, t_max)
    print(f"t_max={t_max:5}: min distance {res.min_distance:.2e}, hit={res.hit}")
