"""Finite group enumeration by breadth-first closure under a generating set.

Elements are either permutations (tuples of images of 0..m-1, composed as
(a*b)(x) = a[b[x]]) or GF2Matrix instances (composed by matrix product).
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple, Union

from config.settings import get_settings
from spectral.exceptions import (
    InvalidInputError,
    NonInvertibleGeneratorError,
    OrderExceededError,
)
from .gf2 import GF2Matrix

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]
Element = Union[Perm, GF2Matrix]


# =============================================================================
# Element algebra
# =============================================================================


def check_perm(p: Sequence[int]) -> Perm:
    """Validate a permutation of 0..m-1.

    Raises:
        NonInvertibleGeneratorError: p is not a bijection
    """
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise NonInvertibleGeneratorError(f"not a permutation of 0..{len(p) - 1}: {p}")
    return p


def compose(a: Element, b: Element) -> Element:
    if isinstance(a, GF2Matrix):
        return a @ b
    return tuple(a[x] for x in b)


def invert(a: Element) -> Element:
    if isinstance(a, GF2Matrix):
        return a.inverse()
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


def identity_like(a: Element) -> Element:
    if isinstance(a, GF2Matrix):
        return GF2Matrix.identity(a.k)
    return tuple(range(len(a)))


def _normalize(g: Any) -> Element:
    if isinstance(g, GF2Matrix):
        g.inverse()
        return g
    return check_perm(g)


def symmetric_closure(generators: Sequence[Any]) -> List[Element]:
    """Deduplicate generators and append any missing inverses, in order."""
    gens: List[Element] = []
    for g in generators:
        g = _normalize(g)
        if g not in gens:
            gens.append(g)
    for g in list(gens):
        inv = invert(g)
        if inv not in gens:
            gens.append(inv)
    return gens


# =============================================================================
# Group table
# =============================================================================


@dataclass(eq=False)
class FiniteGroupTable:
    """An enumerated finite group with a distinguished generating set S.

    ``generator_perms[s][i]`` is the index of S[s] * elements[i], i.e. the
    left-regular action of each generator as an index shuffle.
    """

    elements: List[Element]
    index: Dict[Hashable, int]
    generators: Tuple[Element, ...]
    generator_perms: Tuple[Tuple[int, ...], ...]
    symmetric: bool
    identity_index: int = 0
    table_max_order: int = field(default=10_000, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generator_indices(self) -> List[int]:
        return [self.index[g] for g in self.generators]

    @cached_property
    def mult_table(self) -> Optional[List[List[int]]]:
        """Full multiplication table, materialised only for small orders."""
        if self.order > self.table_max_order:
            return None
        return [
            [self.index[compose(a, b)] for b in self.elements] for a in self.elements
        ]

    def multiply(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j]."""
        table = self.mult_table
        if table is not None:
            return table[i][j]
        return self.index[compose(self.elements[i], self.elements[j])]

    def element_set(self) -> frozenset:
        return frozenset(self.index)


def enumerate_group(
    generators: Sequence[Any],
    max_order: Optional[int] = None,
    symmetric: bool = True,
) -> FiniteGroupTable:
    """
    Enumerate the subgroup generated by ``generators``.

    Args:
        generators: permutations or GF2Matrix instances of one kind and size
        max_order: cap on the order (defaults to settings.max_group_order)
        symmetric: close the generating set under inverses first

    Raises:
        NonInvertibleGeneratorError: a generator is singular / not a bijection
        OrderExceededError: the group has more than max_order elements
    """
    settings = get_settings()
    max_order = settings.max_group_order if max_order is None else max_order
    if not generators:
        raise InvalidInputError("enumerate_group needs at least one generator")

    if symmetric:
        gens = symmetric_closure(generators)
    else:
        gens = []
        for g in generators:
            g = _normalize(g)
            if g not in gens:
                gens.append(g)

    identity = identity_like(gens[0])
    elements: List[Element] = [identity]
    index: Dict[Hashable, int] = {identity: 0}
    perms: List[List[int]] = [[] for _ in gens]

    queue = deque([0])
    while queue:
        i = queue.popleft()
        g = elements[i]
        for s_idx, s in enumerate(gens):
            h = compose(s, g)
            j = index.get(h)
            if j is None:
                if len(elements) >= max_order:
                    raise OrderExceededError(
                        f"group order exceeds max_order={max_order}", max_order=max_order
                    )
                j = len(elements)
                elements.append(h)
                index[h] = j
                queue.append(j)
            perms[s_idx].append(j)

    logger.info(
        f"ENUMERATE_GROUP: order={len(elements)} generators={len(gens)} symmetric={symmetric}"
    )
    return FiniteGroupTable(
        elements=elements,
        index=index,
        generators=tuple(gens),
        generator_perms=tuple(tuple(p) for p in perms),
        symmetric=symmetric,
        table_max_order=settings.mult_table_max_order,
    )
