"""Spectral gaps, pair norms and intertwiner dimensions.

lambda(u) = n^-1 sup { Re <(sum u_j (x) conj(u_j)) xi, xi> : xi _|_ I, ||xi|| = 1 }
is computed through the identification of H (x) conj(H) with N x N matrices,
where the operator becomes x -> sum_j u_j x u_j* and I is the identity matrix.
"""

import logging
from typing import Any, List, Optional

import numpy as np
import scipy.linalg

from .exceptions import DegenerateDimensionError, NonUnitaryError, ShapeMismatchError
from .linalg import as_stack, intertwiner_system, nullity, unitarity_residual
from .logging_utils import build_tuple_summary, log_report_compact
from .models import SolveMethod, SolverOptions, SpectralReport
from .operators import (
    RepresentationHermitianPart,
    SuperoperatorGram,
    TracelessHermitianPart,
)
from .solvers import power_iteration, top_eigenvalue

logger = logging.getLogger(__name__)


def _options(opts: Optional[SolverOptions]) -> SolverOptions:
    return opts if opts is not None else SolverOptions.from_settings()


def _check_unitary(stack: np.ndarray, tol: float) -> None:
    for j, m in enumerate(stack):
        residual = unitarity_residual(m)
        if residual > tol:
            raise NonUnitaryError(
                f"matrix {j} is not unitary (residual {residual:.3e})", residual=residual
            )


def lambda_gap(u: Any, opts: Optional[SolverOptions] = None) -> SpectralReport:
    """
    Quantum-expander gap of a unitary tuple.

    lambda is n^-1 times the top eigenvalue of the Hermitian part of
    T: x -> sum u_j x u_j* on trace-zero matrices; epsilon = 1 - lambda.

    Raises:
        DegenerateDimensionError: N = 1, the trace-zero subspace is {0}
        NoConvergenceError: iterative path exhausted max_iterations
    """
    opts = _options(opts)
    stack = as_stack(u)
    if stack.shape[1] == 1:
        raise DegenerateDimensionError(
            "lambda(u) is undefined for N = 1: no nonzero trace-zero matrix", dim=1
        )

    op = TracelessHermitianPart(stack)
    result = top_eigenvalue(op, opts)
    report = SpectralReport(
        lambda_=result.value / op.scale,
        method=result.method,
        iterations=result.iterations,
        residual=result.residual,
    )
    log_report_compact(logger, "LAMBDA_GAP", build_tuple_summary(u), report, opts)
    return report


def rep_gap(matrices: Any, opts: Optional[SolverOptions] = None) -> SpectralReport:
    """
    Gap epsilon(pi, S) of a representation given by its generator images.

    The joint fixed space H^inv is the nullspace of the stacked system
    (pi(s) - I) xi = 0 (rank by ``opts.fixed_tol``); lambda is n^-1 times
    the top eigenvalue of the Hermitian part of sum_s pi(s) on (H^inv)^perp.
    If H^inv is everything, lambda is clamped to -1 and the report flagged.
    """
    opts = _options(opts)
    stack = as_stack(matrices)
    _check_unitary(stack, opts.unitarity_tol)

    op = RepresentationHermitianPart(stack, opts.fixed_tol)
    summary = build_tuple_summary(stack)
    summary["fixed_dim"] = int(op.fixed_basis.shape[1])

    if op.restricted_dim == 0:
        report = SpectralReport(lambda_=-1.0, method=SolveMethod.dense, clamped=True)
        logger.info(f"REP_GAP: fixed space is everything, clamping (dim={stack.shape[1]})")
    else:
        result = top_eigenvalue(op, opts)
        report = SpectralReport(
            lambda_=result.value / op.scale,
            method=result.method,
            iterations=result.iterations,
            residual=result.residual,
        )
    log_report_compact(logger, "REP_GAP", summary, report, opts)
    return report


def conjugate_tensor(matrices: Any) -> List[np.ndarray]:
    """Generator images of pi (x) conj(pi), row-major like apply_superop."""
    return [np.kron(m, m.conj()) for m in as_stack(matrices)]


def tensor_gap(matrices: Any, opts: Optional[SolverOptions] = None) -> SpectralReport:
    """epsilon(pi (x) conj(pi), S) with the full invariant subspace deflated."""
    return rep_gap(conjugate_tensor(matrices), opts)


def _superop_norm(
    us: np.ndarray, vs: np.ndarray, traceless: bool, opts: SolverOptions
) -> float:
    op = SuperoperatorGram(us, vs, traceless=traceless)
    if opts.use_dense(op.size):
        value = float(scipy.linalg.svdvals(op.dense_matrix())[0])
        logger.debug(f"SUPEROP_NORM: dense value={value:.12g}")
        return value
    result = power_iteration(op, opts)
    logger.debug(
        f"SUPEROP_NORM: iterative iterations={result.iterations} "
        f"residual={result.residual:.2e}"
    )
    return float(np.sqrt(max(result.value, 0.0)))


def pair_norm(u: Any, v: Any, opts: Optional[SolverOptions] = None) -> float:
    """
    Operator norm of Phi: x -> sum u_j x v_j* on Hilbert-Schmidt space.

    Equals ||sum u_j (x) conj(v_j)||; u and v are eps-separated when this is
    at most n(1 - eps).
    """
    opts = _options(opts)
    us, vs = as_stack(u), as_stack(v)
    if us.shape != vs.shape:
        raise ShapeMismatchError(
            f"pair_norm needs equal (n, N, N), got {us.shape} and {vs.shape}"
        )
    value = _superop_norm(us, vs, traceless=False, opts=opts)
    summary = build_tuple_summary(us)
    summary["other"] = build_tuple_summary(vs)["fingerprint"]
    log_report_compact(logger, "PAIR_NORM", summary, value)
    return value


def restricted_norm(u: Any, opts: Optional[SolverOptions] = None) -> float:
    """||(sum u_j (x) conj(u_j)) restricted to I^perp||, the strong gap certificate."""
    opts = _options(opts)
    us = as_stack(u)
    if us.shape[1] == 1:
        raise DegenerateDimensionError("I^perp is {0} for N = 1", dim=1)
    value = _superop_norm(us, us, traceless=True, opts=opts)
    log_report_compact(logger, "RESTRICTED_NORM", build_tuple_summary(us), value)
    return value


def intertwiner_dim(u: Any, v: Any, fixed_tol: Optional[float] = None) -> int:
    """
    Dimension of {x : u_j x = x v_j for all j}.

    u and v may act on different dimensions; x is then dim_u x dim_v.
    """
    us, vs = as_stack(u), as_stack(v)
    if us.shape[0] != vs.shape[0]:
        raise ShapeMismatchError(
            f"tuple lengths differ: {us.shape[0]} vs {vs.shape[0]}"
        )
    tol = fixed_tol if fixed_tol is not None else SolverOptions.from_settings().fixed_tol
    dim = nullity(intertwiner_system(us, vs), tol)
    logger.debug(
        f"INTERTWINER_DIM: shapes={us.shape[1]}x{vs.shape[1]} n={us.shape[0]} dim={dim}"
    )
    return dim


def commutant_dim(u: Any, fixed_tol: Optional[float] = None) -> int:
    """Dimension of the commutant {x : u_j x = x u_j}; 1 iff u is irreducible."""
    return intertwiner_dim(u, u, fixed_tol)
