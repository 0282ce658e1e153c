"""
Stripes, density, and the threshold 1/|lambda*|
===============================================

Lines of slope cos + sin through Lambda = Lambda_F x Z.  Their y-axis
intercepts fill closed intervals when the window is short and the whole
axis once the window passes 1/|lambda*|.
"""

import math

import numpy as np

from stripes import (StructuredSlope, Scheme, classify_slope, closure_on_axis,
                     trace_axis_intercepts)
from stripes.acceptance import covering_radius

slope = StructuredSlope(1, -1, 1)                       # (cos + sin) / 1
scheme = Scheme.from_radians(math.pi / 6)
print("lambda* =", slope.lam_star(scheme), " 1/|lambda*| =", 1 / abs(slope.lam_star(scheme)))

for eps in (scheme.epsilon, 2.70, 2.75):
    s = scheme.with_epsilon(eps)
    print(f"eps={eps:.4f}:", classify_slope(s, slope))

# Predicted closure against the brute-force trace
closure = closure_on_axis(scheme, slope, -1.0, 2.0)
print("closure on [-1, 2]:", [(round(a, 4), round(b, 4)) for a, b in closure])
trace = trace_axis_intercepts(scheme, slope, 500.0, -1.0, 2.0)
print(len(trace), "intercepts, worst distance to closure:",
      float(np.max(closure.distance(trace.values))))

# Just above the threshold the trace fills [0, 1]
dense = trace_axis_intercepts(scheme.with_epsilon(2.75), slope, 500.0, 0.0, 1.0)
print("eps=2.75 covering radius on [0,1]:", covering_radius(dense.values, 0.0, 1.0))
thin = trace_axis_intercepts(scheme.with_epsilon(2.70), slope, 2000.0, 0.0, 1.0)
print("eps=2.70 largest gap on [0,1]:", thin.max_gap(0.0, 1.0))
