import math

import pytest

from stripes import Scheme, StructuredSlope

SQRT3 = math.sqrt(3.0)


@pytest.fixture
def pi6():
    """theta = pi/6 with the unit window (1 + sqrt 3) / 2."""
    return Scheme.from_radians(math.pi / 6, (1 + SQRT3) / 2)


@pytest.fixture
def fib():
    return Scheme.from_tan((math.sqrt(5.0) - 1) / 2)


@pytest.fixture
def stripe_slope():
    return StructuredSlope(1, -1, 1)
