"""Greedy construction of eps-separated families of eps-quantum expanders.

Candidates are examined in index order. A candidate is admitted when its gap
certificate is at least eps and its pair norm against every kept tuple is at
most n(1 - eps), both up to convergence_tol. Gap certificates do not depend
on the kept set, so they may be computed on a thread pool; the admission
fold itself is serial.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence

from config.settings import get_settings
from spectral.exceptions import HeterogeneousFamilyError, InvalidInputError
from spectral.gap import lambda_gap, pair_norm, restricted_norm
from spectral.geometry import packing_bound_log
from spectral.models import SolverOptions, UnitaryTuple
from .models import Marginal, PackingResult, ViolationKind
from .sampler import derive_seed, random_tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Candidate:
    index: int
    seed: Optional[int]
    tuple: UnitaryTuple
    gap: float


def gap_certificate(u: UnitaryTuple, opts: SolverOptions) -> float:
    """
    Lower bound for epsilon(u).

    Symmetric tuples use 1 - ||T restricted to I^perp|| / n, which bounds the
    Hermitian-part gap from below; otherwise epsilon(u) itself.
    """
    if u.symmetric:
        return 1.0 - restricted_norm(u, opts) / u.n
    return lambda_gap(u, opts).epsilon


def _check_parameters(n: int, dim: int, eps: float, num_candidates: int) -> None:
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if dim < 2:
        raise InvalidInputError(f"dim must be >= 2, got {dim}")
    if not 0.0 < eps < 1.0:
        raise InvalidInputError(f"eps must lie in (0, 1), got {eps}")
    if num_candidates < 0:
        raise InvalidInputError(f"num_candidates must be >= 0, got {num_candidates}")


def _certify_candidates(
    indices: Iterable[int],
    build,
    opts: SolverOptions,
    threads: int,
) -> List[Candidate]:
    def certify(index: int) -> Candidate:
        seed, u = build(index)
        return Candidate(
            index=index,
            seed=seed,
            tuple=u,
            gap=gap_certificate(u, opts.with_seed(derive_seed(opts.seed, index))),
        )

    indices = list(indices)
    if threads <= 1:
        return [certify(i) for i in indices]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(certify, indices))


def greedy_pack(
    n: int,
    dim: int,
    eps: float,
    num_candidates: int,
    seed: int,
    opts: Optional[SolverOptions] = None,
    symmetric: bool = False,
    candidates: Optional[Sequence[UnitaryTuple]] = None,
    threads: Optional[int] = None,
) -> PackingResult:
    """
    Run the greedy admission fold.

    Args:
        n, dim: tuple length and matrix size of every candidate
        eps: separation and gap threshold, in (0, 1)
        num_candidates: length of the seeded stream (ignored when
            ``candidates`` is given)
        seed: stream seed; candidate i is random_tuple(n, dim, derive_seed(seed, i))
        symmetric: draw symmetric candidates (even n)
        candidates: explicit candidate list instead of the seeded stream
        threads: workers for the gap certificates (defaults to settings.threads)

    Raises:
        InvalidInputError: parameters out of range
        HeterogeneousFamilyError: an explicit candidate has the wrong (n, dim)
    """
    opts = opts if opts is not None else SolverOptions.from_settings()
    threads = get_settings().threads if threads is None else threads
    if candidates is not None:
        num_candidates = len(candidates)
        for i, u in enumerate(candidates):
            if (u.n, u.dim) != (n, dim):
                raise HeterogeneousFamilyError(
                    f"candidate {i} has (n, dim)=({u.n}, {u.dim}), expected ({n}, {dim})"
                )
        symmetric = all(u.symmetric for u in candidates) if candidates else symmetric
    _check_parameters(n, dim, eps, num_candidates)
    if symmetric and n % 2 and candidates is None:
        raise InvalidInputError(f"symmetric candidates need even n, got {n}")
    if threads < 1:
        raise InvalidInputError(f"threads must be >= 1, got {threads}")

    def build(index: int):
        if candidates is not None:
            return None, candidates[index]
        candidate_seed = derive_seed(seed, index)
        return candidate_seed, random_tuple(n, dim, candidate_seed, symmetric=symmetric)

    certified = _certify_candidates(range(num_candidates), build, opts, threads)

    tol = opts.convergence_tol
    separation_threshold = n * (1.0 - eps)
    kept: List[Candidate] = []
    pair_norms: Dict[tuple, float] = {}
    marginal: List[Marginal] = []

    for cand in certified:
        flagged: List[Marginal] = []
        if abs(cand.gap - eps) <= tol:
            flagged.append(Marginal(ViolationKind.GAP, (cand.index,), cand.gap, eps))
        admitted = cand.gap >= eps - tol

        norms = {}
        if admitted:
            for other in kept:
                value = pair_norm(cand.tuple, other.tuple, opts)
                norms[other.index] = value
                if abs(value - separation_threshold) <= tol:
                    flagged.append(
                        Marginal(
                            ViolationKind.SEPARATION,
                            (other.index, cand.index),
                            value,
                            separation_threshold,
                        )
                    )
                if value > separation_threshold + tol:
                    admitted = False
                    break

        for m in flagged:
            m.admitted = admitted
        marginal.extend(flagged)
        if not admitted:
            continue
        for other_index, value in norms.items():
            pair_norms[(other_index, cand.index)] = value
        kept.append(cand)

    count = len(kept)
    pair_matrix: List[List[Optional[float]]] = [[None] * count for _ in range(count)]
    for a in range(count):
        for b in range(a + 1, count):
            value = pair_norms[(kept[a].index, kept[b].index)]
            pair_matrix[a][b] = pair_matrix[b][a] = value

    result = PackingResult(
        n=n,
        dim=dim,
        eps=eps,
        seed=seed if candidates is None else None,
        symmetric=symmetric,
        candidates_examined=num_candidates,
        kept_indices=[c.index for c in kept],
        kept_seeds=[c.seed for c in kept],
        gap_certificates=[c.gap for c in kept],
        pair_certificates=pair_matrix,
        marginal=marginal,
        log_count=math.log(count) if count else None,
        log_volume_bound=packing_bound_log(n, dim, eps),
        options=opts.model_dump(mode="json"),
        tuples=[c.tuple for c in kept],
    )
    if not result.within_bound:
        logger.warning(
            f"GREEDY_PACK: log_count={result.log_count} exceeds bound {result.log_volume_bound}"
        )
    logger.info(
        f"GREEDY_PACK: n={n} dim={dim} eps={eps} examined={num_candidates} "
        f"kept={count} marginal={len(marginal)} threads={threads}"
    )
    return result


def reconstruct_kept(result: PackingResult) -> List[UnitaryTuple]:
    """Kept tuples, regenerated from their seeds if the matrices were not stored."""
    if result.tuples is not None:
        return list(result.tuples)
    if any(s is None for s in result.kept_seeds):
        raise InvalidInputError(
            "packing was built from explicit candidates and stored without tuples"
        )
    return [
        random_tuple(result.n, result.dim, s, symmetric=result.symmetric)
        for s in result.kept_seeds
    ]


def admission_sweep(
    ns: Sequence[int],
    dims: Sequence[int],
    epss: Sequence[float],
    num_candidates: int,
    seed: int,
    opts: Optional[SolverOptions] = None,
    symmetric: bool = False,
    threads: Optional[int] = None,
) -> List[Dict[str, Any]]:
    """Empirical admission rates of greedy_pack over a parameter grid."""
    rows = []
    for n in ns:
        for dim in dims:
            for eps in epss:
                result = greedy_pack(
                    n, dim, eps, num_candidates, seed, opts,
                    symmetric=symmetric, threads=threads,
                )
                rows.append(
                    {
                        "n": n,
                        "dim": dim,
                        "eps": eps,
                        "examined": result.candidates_examined,
                        "kept": result.count,
                        "admission_rate": (
                            result.count / result.candidates_examined
                            if result.candidates_examined
                            else None
                        ),
                        "log_count": result.log_count,
                        "log_volume_bound": result.log_volume_bound,
                    }
                )
    logger.info(f"ADMISSION_SWEEP: rows={len(rows)} candidates={num_candidates}")
    return rows
