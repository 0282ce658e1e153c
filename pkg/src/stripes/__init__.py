"""Cut-and-project sets Lambda_F x Z and the closures of their line families."""

from .closure import (
    HORIZONTAL,
    AxisTrace,
    Dense,
    Discrete,
    GenericSlope,
    HorizontalSlope,
    IntervalSet,
    Stripes,
    StructuredSlope,
    classify_slope,
    closure_on_axis,
    slope_from_real,
    trace_axis_intercepts,
)
from .core import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    LatticePoint,
    ModelSetPoint,
    Scheme,
    enumerate_model_set,
    model_set_arrays,
    star,
)
from .density import kronecker_density_check, rationality_warning

__all__ = [
    "HORIZONTAL", "AxisTrace", "Dense", "Discrete", "GenericSlope", "HorizontalSlope",
    "IntervalSet", "Stripes", "StructuredSlope", "classify_slope", "closure_on_axis",
    "slope_from_real", "trace_axis_intercepts", "DEFAULT_BUDGET", "BudgetExceeded",
    "LatticePoint", "ModelSetPoint", "Scheme", "enumerate_model_set", "model_set_arrays",
    "star", "kronecker_density_check", "rationality_warning",
]
