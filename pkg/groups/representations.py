"""Finite-dimensional unitary representations built from actions and tables.

A representation is a list of generator images, in the generator order of
the action or table it came from.
"""

import logging
from typing import Any, List, Optional, Sequence

import numpy as np

from spectral.exceptions import InvalidInputError, NotTransitiveError, ShapeMismatchError
from spectral.gap import intertwiner_dim
from spectral.linalg import as_stack, block_diagonal
from spectral.models import UnitaryTuple
from .actions import GroupAction, orbit_count, regular_action
from .enumeration import FiniteGroupTable

logger = logging.getLogger(__name__)


def permutation_matrices(action: GroupAction) -> List[np.ndarray]:
    """P_g with P_g[g(x), x] = 1, so P_g e_x = e_{g(x)}."""
    size = action.set_size
    points = np.arange(size)
    mats = []
    for p in action.generator_perms:
        m = np.zeros((size, size))
        m[np.asarray(p), points] = 1.0
        mats.append(m)
    return mats


def regular_representation(table: FiniteGroupTable) -> List[np.ndarray]:
    """Left-regular representation on C[G] in the table's element order."""
    return permutation_matrices(regular_action(table))


def mean_zero_basis(size: int) -> np.ndarray:
    """Orthonormal basis (columns) of {xi : sum xi = 0} in R^size.

    Columns 1.. of the Householder reflection swapping e_0 and the
    normalized ones vector.
    """
    if size < 2:
        raise InvalidInputError(f"mean-zero subspace of R^{size} is trivial")
    ones = np.full(size, 1.0 / np.sqrt(size))
    w = ones.copy()
    w[0] -= 1.0
    reflection = np.eye(size) - 2.0 * np.outer(w, w) / (w @ w)
    return reflection[:, 1:]


def koopman_rep(action: GroupAction) -> List[np.ndarray]:
    """
    Permutation representation on l^2(X) compressed to the mean-zero subspace.

    Returns one (|X| - 1) x (|X| - 1) real orthogonal matrix per generator.

    Raises:
        NotTransitiveError: |X| < 2 or more than one orbit on X
    """
    if action.set_size < 2:
        raise NotTransitiveError(
            f"Koopman representation needs |X| >= 2, got {action.set_size}", orbits=1
        )
    orbits = orbit_count(action)
    if orbits != 1:
        raise NotTransitiveError(f"action has {orbits} orbits", orbits=orbits)
    basis = mean_zero_basis(action.set_size)
    rep = [basis.T @ p @ basis for p in permutation_matrices(action)]
    logger.info(
        f"KOOPMAN_REP: set_size={action.set_size} dim={action.set_size - 1} "
        f"generators={action.num_generators}"
    )
    return rep


def perm_rep_commutant_dim(action: GroupAction, fixed_tol: Optional[float] = None) -> int:
    """Commutant dimension of the permutation representation, numerically."""
    return intertwiner_dim(permutation_matrices(action), permutation_matrices(action), fixed_tol)


def rep_to_tuple(rep: Sequence[Any], tol: Optional[float] = None) -> UnitaryTuple:
    """Package generator images as a validated UnitaryTuple."""
    return UnitaryTuple.from_matrices(rep, tol=tol)


def permutation_sign(perm: Sequence[int]) -> int:
    """+1 for even, -1 for odd permutations."""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
    return 1 if (len(perm) - cycles) % 2 == 0 else -1


def sign_twist(rep: Sequence[Any], perms: Sequence[Sequence[int]]) -> List[np.ndarray]:
    """rep (x) sign: each generator image times the sign of its permutation."""
    if len(rep) != len(perms):
        raise ShapeMismatchError(f"{len(rep)} images but {len(perms)} permutations")
    return [permutation_sign(p) * np.asarray(m) for m, p in zip(rep, perms)]


def direct_sum_rep(*reps: Sequence[Any]) -> List[np.ndarray]:
    """Block-diagonal sum of representations of the same generating set."""
    if not reps:
        raise InvalidInputError("direct_sum_rep needs at least one representation")
    stacks = [as_stack(r) for r in reps]
    lengths = {s.shape[0] for s in stacks}
    if len(lengths) != 1:
        raise ShapeMismatchError(f"representations have different lengths: {sorted(lengths)}")
    return list(block_diagonal(stacks))


def product_lift(rep: Sequence[Any], factor: int, num_factors: int) -> List[np.ndarray]:
    """
    Pull rep back along the projection of Gamma^num_factors onto one factor.

    Gamma^m is generated by the copies of S in each coordinate, listed
    coordinate-major; a generator from another coordinate maps to I.
    """
    if not 0 <= factor < num_factors:
        raise InvalidInputError(f"factor must lie in [0, {num_factors}), got {factor}")
    stack = as_stack(rep)
    identity = np.eye(stack.shape[1], dtype=stack.dtype)
    return [
        m if i == factor else identity
        for i in range(num_factors)
        for m in stack
    ]
