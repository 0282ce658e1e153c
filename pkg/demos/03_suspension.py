"""
The interval exchange behind the stripes
========================================

With eps = cos + sin, the returns of a line to the base M are an interval
exchange.  The quantity eta + (lambda*/d) xi never changes along an orbit,
and the classes alpha of lines hitting (x_j*, 0) trace out the same
set the closure formula predicts.
"""

import math

import numpy as np

from stripes import Scheme, StructuredSlope
from stripes.suspension import (BaseState, circle_hausdorff, lemma4_alphas, orbit,
                                poincare_step, predicted_alpha_set)

scheme = Scheme.from_radians(math.pi / 6)
slope = StructuredSlope(1, -1, 1)

state = BaseState(0.0, 0.25)
for _ in range(5):
    print(state)
    state = poincare_step(state, scheme, slope)

orb = orbit(scheme, slope, [0.1, 0.25, 0.6], 100_000)
print("max invariant residual over 1e5 steps:", orb.residual.max())

alphas = lemma4_alphas(scheme, slope, -10_000, 10_000)
predicted = predicted_alpha_set(scheme, slope, 1e-5)
print("Hausdorff distance to the predicted arc:", circle_hausdorff(alphas, predicted, 1.0))
print("alpha range:", np.min(alphas[alphas > 0]), "to", np.max(alphas))
