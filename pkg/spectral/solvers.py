"""Top-eigenvalue solvers: dense Hermitian eigendecomposition and power iteration.

Power iteration runs on the shifted, normalized operator M = A/scale + shift,
whose spectrum lies in [0, 2], so the dominant eigenvalue is the top one.
The restriction projection is re-applied every step to keep the iterate in
the deflated subspace.
"""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .base import BaseOperator
from .exceptions import NoConvergenceError
from .linalg import random_start
from .models import SolveMethod, SolverOptions

logger = logging.getLogger(__name__)

# Below this norm the projected iterate is treated as annihilated
_STAGNATION_NORM = 1e-13


@dataclass(frozen=True)
class EigenResult:
    """Top eigenvalue of an operator (unnormalized) with diagnostics."""

    value: float
    method: SolveMethod
    iterations: int = 0
    residual: float = 0.0


def dense_top_eigenvalue(op: BaseOperator) -> EigenResult:
    matrix = op.dense_restricted()
    values = scipy.linalg.eigh(matrix, eigvals_only=True)
    return EigenResult(value=float(values[-1]), method=SolveMethod.dense)


def power_iteration(op: BaseOperator, opts: SolverOptions) -> EigenResult:
    """
    Matrix-free power iteration with per-step projection.

    Converges when the eigen-residual ||M x - theta x|| of the normalized
    operator drops below ``opts.convergence_tol``. The start vector comes from
    ``opts.seed``; an iterate that collapses under projection is re-drawn from
    the same generator.

    Raises:
        NoConvergenceError: residual still above tolerance after
            ``opts.max_iterations`` steps
    """
    rng = np.random.default_rng(opts.seed)

    def fresh() -> np.ndarray:
        x = op.project(random_start(rng, op.shape))
        return x / np.linalg.norm(x)

    x = fresh()
    theta = 0.0
    residual = float("inf")
    restarts = 0

    for iteration in range(1, opts.max_iterations + 1):
        y = op.project(op.apply(x) / op.scale + op.shift * x)
        theta = float(np.real(np.vdot(x, y)))
        residual = float(np.linalg.norm(y - theta * x))
        if residual < opts.convergence_tol:
            logger.debug(
                f"POWER_ITERATION: converged in {iteration} steps "
                f"(residual={residual:.2e}, restarts={restarts})"
            )
            return EigenResult(
                value=op.scale * (theta - op.shift),
                method=SolveMethod.iterative,
                iterations=iteration,
                residual=residual,
            )
        norm = np.linalg.norm(y)
        if norm < _STAGNATION_NORM:
            restarts += 1
            logger.debug(f"POWER_ITERATION: iterate collapsed, restart {restarts}")
            x = fresh()
            continue
        x = y / norm

    logger.warning(
        f"POWER_ITERATION: no convergence after {opts.max_iterations} steps "
        f"(residual={residual:.2e})"
    )
    raise NoConvergenceError(
        f"power iteration did not reach residual {opts.convergence_tol:.1e} "
        f"in {opts.max_iterations} iterations",
        iterations=opts.max_iterations,
        residual=residual,
    )


def top_eigenvalue(op: BaseOperator, opts: SolverOptions) -> EigenResult:
    """Dispatch to the dense or iterative path per ``opts``."""
    if opts.use_dense(op.size):
        return dense_top_eigenvalue(op)
    return power_iteration(op, opts)
