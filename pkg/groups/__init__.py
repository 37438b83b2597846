"""Finite groups - enumeration, actions, representations, Cayley gaps and rings."""

from .gf2 import GF2Matrix, GF2Span, sl_f2_order, standard_sl_generators
from .enumeration import FiniteGroupTable, enumerate_group
from .actions import (
    GroupAction,
    double_transitivity,
    natural_action,
    orbit_count,
    orbit_count_on_pairs,
    projective_space_action,
    regular_action,
)
from .representations import (
    direct_sum_rep,
    koopman_rep,
    perm_rep_commutant_dim,
    permutation_matrices,
    product_lift,
    regular_representation,
    rep_to_tuple,
    sign_twist,
)
from .cayley import cayley_gap
from .rings import ring_closure, ring_generators
from .specs import GroupSpec, build_group, cyclic_generators, symmetric_group_generators

__all__ = [
    "GF2Matrix",
    "GF2Span",
    "sl_f2_order",
    "standard_sl_generators",
    "FiniteGroupTable",
    "enumerate_group",
    "GroupAction",
    "double_transitivity",
    "natural_action",
    "orbit_count",
    "orbit_count_on_pairs",
    "projective_space_action",
    "regular_action",
    "direct_sum_rep",
    "koopman_rep",
    "perm_rep_commutant_dim",
    "permutation_matrices",
    "product_lift",
    "regular_representation",
    "rep_to_tuple",
    "sign_twist",
    "cayley_gap",
    "ring_closure",
    "ring_generators",
    "GroupSpec",
    "build_group",
    "cyclic_generators",
    "symmetric_group_generators",
]
