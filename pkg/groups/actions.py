"""Permutation actions given by generator images, and orbit counting.

Orbits are connected components of the graph whose edges are x -> g(x) for
each generator g; for a finite group this is the same as orbits of the
generated group, so the group itself never has to be enumerated.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse
from scipy.sparse.csgraph import connected_components

from config.settings import get_settings
from spectral.exceptions import InvalidInputError, SetSizeExceededError
from .enumeration import FiniteGroupTable, check_perm
from .gf2 import GF2Matrix, standard_sl_generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupAction:
    """A group acting on {0, ..., set_size - 1} through its generators."""

    set_size: int
    generator_perms: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.set_size < 1:
            raise InvalidInputError(f"set_size must be positive, got {self.set_size}")
        for i, p in enumerate(self.generator_perms):
            if len(p) != self.set_size:
                raise InvalidInputError(
                    f"generator_perms[{i}] has length {len(p)}, expected {self.set_size}"
                )
            check_perm(p)

    @property
    def num_generators(self) -> int:
        return len(self.generator_perms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "set_size": self.set_size,
            "generator_perms": [list(p) for p in self.generator_perms],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GroupAction":
        try:
            return cls(
                set_size=int(data["set_size"]),
                generator_perms=tuple(
                    tuple(int(x) for x in p) for p in data["generator_perms"]
                ),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"malformed action: {e}") from e


def _cap(max_set_size: Optional[int]) -> int:
    return get_settings().max_action_set_size if max_set_size is None else max_set_size


def matrix_action(
    generators: Sequence[GF2Matrix], max_set_size: Optional[int] = None
) -> GroupAction:
    """Action of GF(2) matrices on the nonzero vectors of F_2^d.

    Point v (a nonzero bitmask) has index v - 1. Over F_2 projective points
    and nonzero vectors coincide.
    """
    if not generators:
        raise InvalidInputError("matrix_action needs at least one generator")
    d = generators[0].k
    size = (1 << d) - 1
    cap = _cap(max_set_size)
    if size > cap:
        raise SetSizeExceededError(
            f"projective space of F_2^{d} has {size} points, cap is {cap}",
            set_size=size,
            max_set_size=cap,
        )
    perms = []
    for g in generators:
        if g.k != d:
            raise InvalidInputError(f"mixed matrix sizes {g.k} and {d}")
        perms.append(tuple(g.apply(v) - 1 for v in range(1, size + 1)))
    return GroupAction(set_size=size, generator_perms=tuple(perms))


def projective_space_action(k: int, max_set_size: Optional[int] = None) -> GroupAction:
    """SL_{3k}(F_2) on its 2^{3k} - 1 projective points via the standard generators."""
    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    d = 3 * k
    size = (1 << d) - 1
    cap = _cap(max_set_size)
    if size > cap:
        raise SetSizeExceededError(
            f"projective space for k={k} has {size} points, cap is {cap}",
            set_size=size,
            max_set_size=cap,
        )
    action = matrix_action(standard_sl_generators(d), max_set_size=cap)
    logger.info(f"PROJECTIVE_ACTION: k={k} set_size={size} generators={action.num_generators}")
    return action


def natural_action(table: FiniteGroupTable, max_set_size: Optional[int] = None) -> GroupAction:
    """The defining action of a table's generators: on points for permutation
    groups, on nonzero vectors for matrix groups."""
    gens = table.generators
    if isinstance(gens[0], GF2Matrix):
        return matrix_action(list(gens), max_set_size)
    return GroupAction(set_size=len(gens[0]), generator_perms=tuple(gens))


def regular_action(table: FiniteGroupTable) -> GroupAction:
    """The table acting on itself by left translation."""
    return GroupAction(set_size=table.order, generator_perms=table.generator_perms)


def _components(size: int, sources: np.ndarray, targets: np.ndarray) -> int:
    graph = scipy.sparse.coo_matrix(
        (np.ones(len(sources), dtype=np.int8), (sources, targets)), shape=(size, size)
    ).tocsr()
    count, _ = connected_components(graph, directed=True, connection="weak")
    return int(count)


def orbit_count(action: GroupAction) -> int:
    """Number of orbits on X; 1 means transitive."""
    size = action.set_size
    points = np.arange(size)
    if not action.generator_perms:
        return size
    sources = np.concatenate([points] * action.num_generators)
    targets = np.concatenate([np.asarray(p) for p in action.generator_perms])
    return _components(size, sources, targets)


def orbit_count_on_pairs(action: GroupAction, max_set_size: Optional[int] = None) -> int:
    """
    Number of orbits on ordered pairs X x X.

    Pair (x, y) has index x * |X| + y and is joined to (g x, g y).

    Raises:
        SetSizeExceededError: |X| is above the pair-orbit cap
    """
    size = action.set_size
    cap = _cap(max_set_size)
    if size > cap:
        raise SetSizeExceededError(
            f"pair orbits need |X| <= {cap}, got {size}", set_size=size, max_set_size=cap
        )
    total = size * size
    if not action.generator_perms:
        return total
    pairs = np.arange(total)
    xs, ys = np.divmod(pairs, size)
    sources: List[np.ndarray] = []
    targets: List[np.ndarray] = []
    for p in action.generator_perms:
        p = np.asarray(p)
        sources.append(pairs)
        targets.append(p[xs] * size + p[ys])
    count = _components(total, np.concatenate(sources), np.concatenate(targets))
    logger.debug(f"PAIR_ORBITS: set_size={size} orbits={count}")
    return count


def double_transitivity(action: GroupAction, max_set_size: Optional[int] = None) -> bool:
    """True iff X x X splits into exactly the diagonal and the off-diagonal."""
    if action.set_size < 2:
        return False
    return orbit_count_on_pairs(action, max_set_size) == 2
