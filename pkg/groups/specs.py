"""Named group specifications and their generating sets."""

import logging
from typing import List, Literal, Optional

from pydantic import BaseModel, model_validator

from config.settings import get_settings
from spectral.exceptions import InvalidInputError, OrderExceededError
from .enumeration import FiniteGroupTable, Perm, enumerate_group
from .gf2 import sl_f2_order, standard_sl_generators

logger = logging.getLogger(__name__)


def cyclic_generators(m: int) -> List[Perm]:
    """Translation by +1 on Z_m."""
    if m < 2:
        raise InvalidInputError(f"cyclic group needs m >= 2, got {m}")
    return [tuple((x + 1) % m for x in range(m))]


def symmetric_group_generators(m: int) -> List[Perm]:
    """The transposition (0 1) and the m-cycle x -> x + 1."""
    if m < 2:
        raise InvalidInputError(f"symmetric group needs m >= 2, got {m}")
    transposition = (1, 0) + tuple(range(2, m))
    cycle = tuple((x + 1) % m for x in range(m))
    return [transposition] if cycle == transposition else [transposition, cycle]


class GroupSpec(BaseModel):
    """Wire form: {"kind": ..., "k": int?, "m": int?, "generators": [...]?}."""

    kind: Literal["sl3k_f2", "cyclic", "symmetric_group", "custom_perm"]
    k: Optional[int] = None
    m: Optional[int] = None
    generators: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def check_parameters(self) -> "GroupSpec":
        if self.kind == "sl3k_f2" and (self.k is None or self.k < 1):
            raise ValueError("k: sl3k_f2 needs k >= 1")
        if self.kind in ("cyclic", "symmetric_group") and (self.m is None or self.m < 2):
            raise ValueError(f"m: {self.kind} needs m >= 2")
        if self.kind == "custom_perm" and not self.generators:
            raise ValueError("generators: custom_perm needs at least one permutation")
        return self

    def generator_list(self) -> list:
        if self.kind == "sl3k_f2":
            return standard_sl_generators(3 * self.k)
        if self.kind == "cyclic":
            return cyclic_generators(self.m)
        if self.kind == "symmetric_group":
            return symmetric_group_generators(self.m)
        return [tuple(p) for p in self.generators]


def build_group(
    spec: GroupSpec, max_order: Optional[int] = None, symmetric: bool = True
) -> FiniteGroupTable:
    """
    Enumerate the group a spec names.

    SL_{3k}(F_2) is refused up front when its known order is above the cap.
    """
    max_order = get_settings().max_group_order if max_order is None else max_order
    if spec.kind == "sl3k_f2":
        order = sl_f2_order(3 * spec.k)
        if order > max_order:
            raise OrderExceededError(
                f"|SL_{3 * spec.k}(F_2)| = {order} exceeds max_order={max_order}",
                max_order=max_order,
            )
    logger.debug(f"BUILD_GROUP: {spec.model_dump(exclude_none=True)}")
    return enumerate_group(spec.generator_list(), max_order=max_order, symmetric=symmetric)
