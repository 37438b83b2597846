"""Subrings of M_k(F_2) generated by a set of matrices."""

import logging
from typing import List, Optional, Sequence

from config.settings import get_settings
from spectral.exceptions import InvalidInputError, RingRangeError
from .gf2 import GF2Matrix, GF2Span

logger = logging.getLogger(__name__)


def ring_generators(k: int) -> List[GF2Matrix]:
    """{e_12, shift}, which generate all of M_k(F_2)."""
    if k == 1:
        return [GF2Matrix.identity(1)]
    return [GF2Matrix.unit(k, 0, 1), GF2Matrix.shift(k)]


def ring_closure(k: int, gens: Sequence[GF2Matrix], max_k: Optional[int] = None) -> int:
    """
    Size of the (not necessarily unital) subring generated by ``gens``.

    The subring is the F_2-span of all nonempty words in the generators. It
    is grown as a linear span: every new basis vector w contributes the
    products w * g, until no product enlarges the span. The size is 2^rank.

    Raises:
        RingRangeError: k outside [1, max_k]
    """
    max_k = get_settings().max_ring_k if max_k is None else max_k
    if not 1 <= k <= max_k:
        raise RingRangeError(f"ring closure supports 1 <= k <= {max_k}, got {k}", k=k, max_k=max_k)
    if not gens:
        raise InvalidInputError("ring_closure needs at least one generator")
    for g in gens:
        if g.k != k:
            raise InvalidInputError(f"generator of size {g.k} in M_{k}(F_2)")

    span = GF2Span()
    frontier = [g for g in gens if span.add(g.to_int())]
    while frontier:
        word = frontier.pop()
        for g in gens:
            product = word @ g
            if span.add(product.to_int()):
                frontier.append(product)

    logger.info(f"RING_CLOSURE: k={k} generators={len(gens)} rank={len(span)} size={span.size}")
    return span.size
