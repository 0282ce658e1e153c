"""
The Fibonacci model set
=======================

Build the one-dimensional cut-and-project set for tan(theta) = (sqrt5 - 1)/2
and watch its gaps follow the two-letter Fibonacci word.
"""

import math

import numpy as np

from stripes import Scheme, enumerate_model_set, rationality_warning
from stripes.suspension import step_gap

scheme = Scheme.from_tan((math.sqrt(5) - 1) / 2)       # window eps = cos + sin
print(scheme)
print("rationality warning:", rationality_warning(scheme))

points = enumerate_model_set(scheme, 0.0, 20.0)
xs = np.array([p.x for p in points])
print(len(points), "points in [0, 20]")

# Long gaps are cos(theta), short gaps sin(theta): write them as L and S.
word = "".join("L" if abs(g - scheme.cos_theta) < 1e-12 else "S" for g in np.diff(xs))
print(word)

# Each gap is predicted by where x* sits in the window.
for p in points[:6]:
    print(f"x={p.x:8.5f}  x*={p.x_star:.5f}  next gap={step_gap(p.x_star, scheme)}")
