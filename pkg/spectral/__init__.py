"""Spectral core - gaps, pair norms, intertwiners and tuple geometry."""

from .exceptions import (
    QexpError,
    InvalidInputError,
    ShapeMismatchError,
    NonUnitaryError,
    HeterogeneousFamilyError,
    DegenerateDimensionError,
    NoConvergenceError,
    OrderExceededError,
    NonInvertibleGeneratorError,
    SetSizeExceededError,
    NotTransitiveError,
    RingRangeError,
)
from .models import SolveMethod, SolverOptions, SpectralReport, UnitaryTuple
from .linalg import apply_superop, dense_superoperator, hs_inner
from .gap import (
    commutant_dim,
    conjugate_tensor,
    intertwiner_dim,
    lambda_gap,
    pair_norm,
    rep_gap,
    restricted_norm,
    tensor_gap,
)
from .geometry import (
    GeometryReport,
    TuplePoint,
    family_geometry,
    packing_bound_log,
    separation_distance,
    tuple_point,
)

__all__ = [
    "QexpError",
    "InvalidInputError",
    "ShapeMismatchError",
    "NonUnitaryError",
    "HeterogeneousFamilyError",
    "DegenerateDimensionError",
    "NoConvergenceError",
    "OrderExceededError",
    "NonInvertibleGeneratorError",
    "SetSizeExceededError",
    "NotTransitiveError",
    "RingRangeError",
    "SolveMethod",
    "SolverOptions",
    "SpectralReport",
    "UnitaryTuple",
    "apply_superop",
    "dense_superoperator",
    "hs_inner",
    "commutant_dim",
    "conjugate_tensor",
    "intertwiner_dim",
    "lambda_gap",
    "pair_norm",
    "rep_gap",
    "restricted_norm",
    "tensor_gap",
    "GeometryReport",
    "TuplePoint",
    "family_geometry",
    "packing_bound_log",
    "separation_distance",
    "tuple_point",
]
