"""Cayley-graph gap: the left-regular representation with constants deflated."""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from spectral.base import BaseOperator
from spectral.exceptions import InvalidInputError
from spectral.logging_utils import log_report_compact
from spectral.models import SolverOptions, SpectralReport
from spectral.solvers import top_eigenvalue
from .enumeration import FiniteGroupTable

logger = logging.getLogger(__name__)


class PermutationHermitianPart(BaseOperator):
    """Re-part of sum_s P_s on mean-zero vectors, applied as index shuffles.

    (P_s x)[perm[i]] = x[i], i.e. P_s x = x[inverse perm], and P_s^T x = x[perm].
    """

    shift = 1.0

    def __init__(self, perms: Sequence[Sequence[int]]):
        self.perms = np.asarray(perms, dtype=np.intp)
        self.inverses = np.argsort(self.perms, axis=1)
        self.scale = float(self.perms.shape[0])
        self._dim = self.perms.shape[1]

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self._dim,)

    @property
    def restricted_dim(self) -> int:
        return self._dim - 1

    def apply(self, x: np.ndarray) -> np.ndarray:
        forward = x[self.inverses].sum(axis=0)
        backward = x[self.perms].sum(axis=0)
        return 0.5 * (forward + backward)

    def project(self, x: np.ndarray) -> np.ndarray:
        return x - x.mean()

    def dense_restricted(self) -> np.ndarray:
        size = self._dim
        adjacency = np.zeros((size, size))
        points = np.arange(size)
        for p in self.perms:
            adjacency[p, points] += 1.0
        basis = scipy.linalg.null_space(np.ones((1, size)))
        return basis.T @ (0.5 * (adjacency + adjacency.T)) @ basis


def cayley_gap(table: FiniteGroupTable, opts: Optional[SolverOptions] = None) -> SpectralReport:
    """
    epsilon(lambda_G, S) for the table's generating set S.

    S generates G by construction, so the invariant vectors of the regular
    representation are exactly the constants.
    """
    opts = opts if opts is not None else SolverOptions.from_settings()
    if table.order < 2:
        raise InvalidInputError("cayley_gap needs a group of order >= 2")
    op = PermutationHermitianPart(table.generator_perms)
    result = top_eigenvalue(op, opts)
    report = SpectralReport(
        lambda_=result.value / op.scale,
        method=result.method,
        iterations=result.iterations,
        residual=result.residual,
    )
    summary = {"order": table.order, "n": len(table.generators), "symmetric": table.symmetric}
    log_report_compact(logger, "CAYLEY_GAP", summary, report, opts)
    return report
