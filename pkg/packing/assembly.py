"""Block-diagonal assembly of a family and its certification.

The direct sum s_j = (+)_t t_j is a representation whose blocks must be
irreducible, pairwise inequivalent and pairwise eps-separated.
"""

import logging
from typing import List, Optional, Sequence

from spectral.exceptions import HeterogeneousFamilyError
from spectral.gap import commutant_dim, intertwiner_dim, lambda_gap, pair_norm
from spectral.linalg import block_diagonal
from spectral.models import SolverOptions, UnitaryTuple
from .models import CertificationReport, Marginal, Violation, ViolationKind

logger = logging.getLogger(__name__)


def _check_family(family: Sequence[UnitaryTuple]) -> None:
    if not family:
        raise HeterogeneousFamilyError("family is empty")
    n, dim = family[0].n, family[0].dim
    for t, u in enumerate(family):
        if (u.n, u.dim) != (n, dim):
            raise HeterogeneousFamilyError(
                f"member {t} has (n, dim)=({u.n}, {u.dim}), expected ({n}, {dim})"
            )


def assemble_direct_sum(family: Sequence[UnitaryTuple]) -> UnitaryTuple:
    """Tuple of dimension |family| * dim whose block t is member t."""
    _check_family(family)
    if len(family) == 1:
        return family[0]
    stacks = [u.stacked() for u in family]
    assembled = UnitaryTuple.from_matrices(list(block_diagonal(stacks)))
    logger.info(
        f"ASSEMBLE: members={len(family)} n={assembled.n} dim={assembled.dim}"
    )
    return assembled


def certify_family(
    family: Sequence[UnitaryTuple], eps: float, opts: Optional[SolverOptions] = None
) -> CertificationReport:
    """
    Re-check a family from scratch.

    Per member: commutant dimension 1 and epsilon >= eps. Per pair:
    pair_norm <= n(1 - eps) and no nonzero intertwiner. Failures are listed
    as violations; values within convergence_tol of a threshold are also
    listed as marginal.
    """
    opts = opts if opts is not None else SolverOptions.from_settings()
    _check_family(family)
    n, dim = family[0].n, family[0].dim
    count = len(family)
    tol = opts.convergence_tol
    violations: List[Violation] = []
    marginal: List[Marginal] = []

    commutants = []
    gaps: List[Optional[float]] = []
    for t, u in enumerate(family):
        c = commutant_dim(u, opts.fixed_tol)
        commutants.append(c)
        if c != 1:
            violations.append(Violation(ViolationKind.IRREDUCIBILITY, (t,), float(c), 1.0))
        if dim < 2:
            gaps.append(None)
            continue
        gap = lambda_gap(u, opts).epsilon
        gaps.append(gap)
        if abs(gap - eps) <= tol:
            marginal.append(Marginal(ViolationKind.GAP, (t,), gap, eps, admitted=gap >= eps - tol))
        if gap < eps - tol:
            violations.append(Violation(ViolationKind.GAP, (t,), gap, eps))

    threshold = n * (1.0 - eps)
    pairs: List[List[Optional[float]]] = [[None] * count for _ in range(count)]
    intertwiners: List[List[Optional[int]]] = [[None] * count for _ in range(count)]
    for t in range(count):
        for r in range(t + 1, count):
            value = pair_norm(family[t], family[r], opts)
            pairs[t][r] = pairs[r][t] = value
            if abs(value - threshold) <= tol:
                marginal.append(
                    Marginal(
                        ViolationKind.SEPARATION, (t, r), value, threshold,
                        admitted=value <= threshold + tol,
                    )
                )
            if value > threshold + tol:
                violations.append(Violation(ViolationKind.SEPARATION, (t, r), value, threshold))

            dim_tr = intertwiner_dim(family[t], family[r], opts.fixed_tol)
            intertwiners[t][r] = intertwiners[r][t] = dim_tr
            if dim_tr != 0:
                violations.append(Violation(ViolationKind.EQUIVALENCE, (t, r), float(dim_tr), 0.0))

    report = CertificationReport(
        n=n,
        dim=dim,
        eps=eps,
        count=count,
        commutant_dims=commutants,
        gap_certificates=gaps,
        pair_certificates=pairs,
        intertwiner_dims=intertwiners,
        violations=violations,
        marginal=marginal,
        options=opts.model_dump(mode="json"),
    )
    logger.info(
        f"CERTIFY_FAMILY: count={count} n={n} dim={dim} eps={eps} "
        f"violations={len(violations)} marginal={len(marginal)}"
    )
    return report
