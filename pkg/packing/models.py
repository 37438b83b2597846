"""Result records for packing and family certification.

Contains ViolationKind, Violation, Marginal, CertificationReport and
PackingResult, each with JSON-ready to_dict/from_dict.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from spectral.codec import tuple_from_dict, tuple_to_dict
from spectral.models import UnitaryTuple

logger = logging.getLogger(__name__)


class ViolationKind(Enum):
    """Which family property a violation breaks."""

    GAP = "gap"  # epsilon(u) below eps
    IRREDUCIBILITY = "irreducibility"  # commutant larger than the scalars
    SEPARATION = "separation"  # pair_norm above n(1 - eps)
    EQUIVALENCE = "equivalence"  # nonzero intertwiner between members


@dataclass
class Violation:
    """One failed check; ``members`` holds one index or a pair."""

    kind: ViolationKind
    members: Tuple[int, ...]
    value: float
    threshold: float

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "members": list(self.members),
            "value": self.value,
            "threshold": self.threshold,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Violation":
        return cls(
            kind=ViolationKind(data["kind"]),
            members=tuple(data["members"]),
            value=data["value"],
            threshold=data["threshold"],
        )


@dataclass
class Marginal:
    """A certificate within convergence_tol of its threshold."""

    kind: ViolationKind
    members: Tuple[int, ...]
    value: float
    threshold: float
    admitted: bool = True

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "members": list(self.members),
            "value": self.value,
            "threshold": self.threshold,
            "admitted": self.admitted,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Marginal":
        return cls(
            kind=ViolationKind(data["kind"]),
            members=tuple(data["members"]),
            value=data["value"],
            threshold=data["threshold"],
            admitted=data.get("admitted", True),
        )


@dataclass
class CertificationReport:
    """Per-member and per-pair certificates of a family of tuples."""

    n: int
    dim: int
    eps: float
    count: int
    commutant_dims: List[int]
    gap_certificates: List[Optional[float]]
    pair_certificates: List[List[Optional[float]]]
    intertwiner_dims: List[List[Optional[int]]]
    violations: List[Violation] = field(default_factory=list)
    marginal: List[Marginal] = field(default_factory=list)
    options: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violations_of(self, kind: ViolationKind) -> List[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "eps": self.eps,
            "count": self.count,
            "ok": self.ok,
            "commutant_dims": self.commutant_dims,
            "gap_certificates": self.gap_certificates,
            "pair_certificates": self.pair_certificates,
            "intertwiner_dims": self.intertwiner_dims,
            "violations": [v.to_dict() for v in self.violations],
            "marginal": [m.to_dict() for m in self.marginal],
            "options": self.options,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CertificationReport":
        return cls(
            n=data["n"],
            dim=data["dim"],
            eps=data["eps"],
            count=data["count"],
            commutant_dims=data["commutant_dims"],
            gap_certificates=data["gap_certificates"],
            pair_certificates=data["pair_certificates"],
            intertwiner_dims=data["intertwiner_dims"],
            violations=[Violation.from_dict(v) for v in data.get("violations", [])],
            marginal=[Marginal.from_dict(m) for m in data.get("marginal", [])],
            options=data.get("options", {}),
        )


@dataclass
class PackingResult:
    """
    A greedy eps-separated family of eps-gapped tuples.

    Kept tuples are identified by candidate index and seed; ``tuples`` holds
    the matrices themselves when they were kept in memory or saved.
    ``pair_certificates`` has None on the diagonal.
    """

    n: int
    dim: int
    eps: float
    seed: Optional[int]
    symmetric: bool
    candidates_examined: int
    kept_indices: List[int]
    kept_seeds: List[Optional[int]]
    gap_certificates: List[float]
    pair_certificates: List[List[Optional[float]]]
    marginal: List[Marginal] = field(default_factory=list)
    log_count: Optional[float] = None
    log_volume_bound: float = 0.0
    options: Dict[str, Any] = field(default_factory=dict)
    tuples: Optional[List[UnitaryTuple]] = None

    @property
    def count(self) -> int:
        return len(self.kept_indices)

    @property
    def within_bound(self) -> bool:
        return self.log_count is None or self.log_count <= self.log_volume_bound

    def to_dict(self, include_tuples: bool = False) -> dict:
        data = {
            "n": self.n,
            "dim": self.dim,
            "eps": self.eps,
            "seed": self.seed,
            "symmetric": self.symmetric,
            "candidates_examined": self.candidates_examined,
            "kept_indices": self.kept_indices,
            "kept_seeds": self.kept_seeds,
            "gap_certificates": self.gap_certificates,
            "pair_certificates": self.pair_certificates,
            "marginal": [m.to_dict() for m in self.marginal],
            "log_count": self.log_count,
            "log_volume_bound": self.log_volume_bound,
            "options": self.options,
        }
        if include_tuples and self.tuples is not None:
            data["tuples"] = [tuple_to_dict(u) for u in self.tuples]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "PackingResult":
        tuples = data.get("tuples")
        return cls(
            n=data["n"],
            dim=data["dim"],
            eps=data["eps"],
            seed=data.get("seed"),
            symmetric=data.get("symmetric", False),
            candidates_examined=data["candidates_examined"],
            kept_indices=list(data["kept_indices"]),
            kept_seeds=list(data["kept_seeds"]),
            gap_certificates=list(data["gap_certificates"]),
            pair_certificates=[list(row) for row in data["pair_certificates"]],
            marginal=[Marginal.from_dict(m) for m in data.get("marginal", [])],
            log_count=data.get("log_count"),
            log_volume_bound=data["log_volume_bound"],
            options=data.get("options", {}),
            tuples=[tuple_from_dict(t) for t in tuples] if tuples is not None else None,
        )
