"""Subcommand handlers.

Each handler takes a validated CommandConfig and returns the JSON-ready
payload to print. Files are written here; stdout belongs to main.
"""

import json
import logging
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from config.settings import get_settings
from groups import (
    GroupSpec,
    build_group,
    cayley_gap,
    double_transitivity,
    koopman_rep,
    orbit_count,
    orbit_count_on_pairs,
    perm_rep_commutant_dim,
    projective_space_action,
    rep_to_tuple,
    ring_closure,
    ring_generators,
    sl_f2_order,
)
from packing import (
    PackingResult,
    admission_sweep,
    assemble_direct_sum,
    certify_family,
    greedy_pack,
    random_tuple,
    reconstruct_kept,
)
from spectral import (
    InvalidInputError,
    UnitaryTuple,
    commutant_dim,
    intertwiner_dim,
    lambda_gap,
    packing_bound_log,
    pair_norm,
    rep_gap,
    tensor_gap,
)
from spectral.codec import load_tuple, save_tuple, tuple_to_dict
from .models import CommandConfig
from .output import write_json_file

logger = logging.getLogger(__name__)


# =============================================================================
# Built-in fixtures and loaders
# =============================================================================


def pauli_tuple() -> UnitaryTuple:
    """{I, X, Y, Z}: a 1-expander on C^2."""
    return UnitaryTuple.from_matrices(
        [
            np.eye(2),
            np.array([[0, 1], [1, 0]]),
            np.array([[0, -1j], [1j, 0]]),
            np.array([[1, 0], [0, -1]]),
        ]
    )


def identity_tuple(n: int, dim: int) -> UnitaryTuple:
    return UnitaryTuple.from_matrices([np.eye(dim) for _ in range(n)])


def _read_json(path: str, what: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise InvalidInputError(f"cannot read {what} file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{what} file {path} is not valid JSON: {e}") from e


def load_packing(path: str) -> PackingResult:
    data = _read_json(path, "packing")
    try:
        return PackingResult.from_dict(data)
    except KeyError as e:
        raise InvalidInputError(f"packing file {path} is missing field {e}") from e
    except (TypeError, ValueError, AttributeError) as e:
        raise InvalidInputError(f"packing file {path} is malformed: {e}") from e


def load_group_spec(config: CommandConfig) -> GroupSpec:
    if config.spec_path:
        data = _read_json(config.spec_path, "group spec")
    else:
        data = {"kind": config.group, "k": config.k, "m": config.m}
        if config.generators:
            data["generators"] = _read_json(config.generators, "generators")
    try:
        return GroupSpec.model_validate(data)
    except ValueError as e:
        raise InvalidInputError(f"invalid group spec: {e}") from e


# =============================================================================
# Handlers
# =============================================================================


def cmd_gap(config: CommandConfig) -> Dict[str, Any]:
    opts = config.solver_options()
    if config.pauli2:
        u = pauli_tuple()
    elif config.identity:
        u = identity_tuple(config.n, config.dim)
    elif config.random:
        n, dim, seed = config.random
        u = random_tuple(n, dim, seed)
    else:
        u = load_tuple(config.tuple_path, tol=opts.unitarity_tol)

    compute = {"tuple": lambda_gap, "rep": rep_gap, "tensor": tensor_gap}[config.mode]
    report = compute(u, opts)
    payload = report.to_dict()
    payload.update({"mode": config.mode, "n": u.n, "dim": u.dim})
    payload["options"] = opts.model_dump(mode="json")
    return payload


def _load_pair(config: CommandConfig):
    opts = config.solver_options()
    return (
        load_tuple(config.a, tol=opts.unitarity_tol),
        load_tuple(config.b, tol=opts.unitarity_tol),
        opts,
    )


def builtin_pair() -> Tuple[UnitaryTuple, UnitaryTuple]:
    """Pauli tuple against four identities; the pair norm is ||I+X+Y+Z|| = 1 + sqrt(3)."""
    return pauli_tuple(), identity_tuple(4, 2)


def cmd_pair_norm(config: CommandConfig) -> Dict[str, Any]:
    if config.builtin:
        u, v = builtin_pair()
        opts = config.solver_options()
    else:
        u, v, opts = _load_pair(config)
    value = pair_norm(u, v, opts)
    return {
        "pair_norm": value,
        "n": u.n,
        "separated_at": 1.0 - value / u.n,
        "options": opts.model_dump(mode="json"),
    }


def cmd_intertwiner(config: CommandConfig) -> Dict[str, Any]:
    u, v, opts = _load_pair(config)
    return {
        "intertwiner_dim": intertwiner_dim(u, v, opts.fixed_tol),
        "n": u.n,
        "dim_a": u.dim,
        "dim_b": v.dim,
        "options": opts.model_dump(mode="json"),
    }


def cmd_cayley(config: CommandConfig) -> Dict[str, Any]:
    opts = config.solver_options()
    spec = load_group_spec(config)
    table = build_group(spec)
    payload = cayley_gap(table, opts).to_dict()
    payload.update(
        {
            "group": spec.kind,
            "order": table.order,
            "n": len(table.generators),
            "generator_indices": table.generator_indices,
        }
    )
    payload["options"] = opts.model_dump(mode="json")
    return payload


def cmd_koopman(config: CommandConfig) -> Dict[str, Any]:
    settings = get_settings()
    opts = config.solver_options()
    k = config.k
    action = projective_space_action(k)
    rep = koopman_rep(action)
    u = rep_to_tuple(rep, tol=opts.unitarity_tol)

    cap = settings.max_commutant_unknowns
    perm_commutant: Optional[int] = None
    koopman_commutant: Optional[int] = None
    if action.set_size ** 2 <= cap:
        perm_commutant = perm_rep_commutant_dim(action, opts.fixed_tol)
    if u.dim ** 2 <= cap:
        koopman_commutant = commutant_dim(u, opts.fixed_tol)

    cayley = None
    if sl_f2_order(3 * k) <= settings.max_group_order:
        table = build_group(GroupSpec(kind="sl3k_f2", k=k))
        cayley = cayley_gap(table, opts).to_dict()
    payload = {
        "k": k,
        "set_size": action.set_size,
        "dim": u.dim,
        "n": u.n,
        "orbits": orbit_count(action),
        "pair_orbits": orbit_count_on_pairs(action),
        "doubly_transitive": double_transitivity(action),
        "perm_commutant_dim": perm_commutant,
        "koopman_commutant_dim": koopman_commutant,
        "koopman_gap": lambda_gap(u, opts).to_dict(),
        "cayley_gap": cayley,
        "output": config.output,
        "options": opts.model_dump(mode="json"),
    }
    if config.output:
        save_tuple(config.output, u)
    return payload


def cmd_pack(config: CommandConfig) -> Dict[str, Any]:
    opts = config.solver_options()
    result = greedy_pack(
        config.n,
        config.dim,
        config.eps,
        config.candidates,
        config.seed,
        opts,
        symmetric=config.symmetric,
        threads=config.threads,
    )
    payload = result.to_dict(include_tuples=config.save_tuples)
    if config.output:
        write_json_file(config.output, payload)
    return payload


def cmd_assemble(config: CommandConfig) -> Dict[str, Any]:
    family = reconstruct_kept(load_packing(config.packing))
    if not family:
        raise InvalidInputError("packing kept no tuples; nothing to assemble")
    assembled = assemble_direct_sum(family)
    if config.output:
        save_tuple(config.output, assembled)
        return {
            "members": len(family),
            "n": assembled.n,
            "dim": assembled.dim,
            "output": config.output,
        }
    return tuple_to_dict(assembled)


def cmd_certify(config: CommandConfig) -> Dict[str, Any]:
    opts = config.solver_options()
    result = load_packing(config.packing)
    family = reconstruct_kept(result)
    if not family:
        raise InvalidInputError("packing kept no tuples; nothing to certify")
    eps = config.eps if config.eps is not None else result.eps
    return certify_family(family, eps, opts).to_dict()


def cmd_bound(config: CommandConfig) -> Dict[str, Any]:
    return {
        "n": config.n,
        "dim": config.dim,
        "eps": config.eps,
        "log_bound": packing_bound_log(config.n, config.dim, config.eps),
    }


def cmd_ring(config: CommandConfig) -> Dict[str, Any]:
    k = config.k
    size = ring_closure(k, ring_generators(k))
    return {"k": k, "size": size, "full_ring": size == 2 ** (k * k)}


def cmd_sweep(config: CommandConfig) -> Dict[str, Any]:
    opts = config.solver_options()
    rows = admission_sweep(
        config.ns,
        config.dims,
        config.epss,
        config.candidates,
        config.seed,
        opts,
        symmetric=config.symmetric,
        threads=config.threads,
    )
    return {"rows": rows, "options": opts.model_dump(mode="json")}


COMMANDS: Dict[str, Callable[[CommandConfig], Dict[str, Any]]] = {
    "gap": cmd_gap,
    "pair-norm": cmd_pair_norm,
    "intertwiner": cmd_intertwiner,
    "cayley": cmd_cayley,
    "koopman": cmd_koopman,
    "pack": cmd_pack,
    "assemble": cmd_assemble,
    "certify": cmd_certify,
    "bound": cmd_bound,
    "ring": cmd_ring,
    "sweep": cmd_sweep,
}
