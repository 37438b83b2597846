"""Hilbert-space geometry of tuples and the volume packing bound.

A tuple x = (x_1, ..., x_n) of N x N matrices lives in the space with
||x||^2 = (nN)^-1 sum_j tr(x_j* x_j); unitary tuples are unit vectors.
Tuples whose associated representations are eps-apart are sqrt(2 eps)
separated there, and a volume argument caps how many such points exist.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from .exceptions import InvalidInputError, ShapeMismatchError
from .linalg import as_stack

logger = logging.getLogger(__name__)

# Slack on the sqrt(2 eps) separation test
SEPARATION_SLACK = 1e-8


@dataclass(frozen=True, eq=False)
class TuplePoint:
    """A unit vector of the weighted tuple space."""

    components: np.ndarray  # (n, N, N)

    @property
    def n(self) -> int:
        return self.components.shape[0]

    @property
    def dim(self) -> int:
        return self.components.shape[1]

    def inner(self, other: "TuplePoint") -> complex:
        """<self, other> = (nN)^-1 sum_j tr(other_j* self_j)."""
        _check_same(self, other)
        return complex(np.vdot(other.components, self.components)) / (self.n * self.dim)

    def norm(self) -> float:
        return math.sqrt(max(self.inner(self).real, 0.0))


def _check_same(p: TuplePoint, q: TuplePoint) -> None:
    if p.components.shape != q.components.shape:
        raise ShapeMismatchError(
            f"points live in different spaces: {p.components.shape} vs {q.components.shape}"
        )


def tuple_point(matrices: Any) -> TuplePoint:
    """Embed a tuple as a normalized point (a no-op scaling for unitary inputs)."""
    stack = as_stack(matrices)
    n, dim = stack.shape[0], stack.shape[1]
    norm = math.sqrt(float(np.vdot(stack, stack).real) / (n * dim))
    if norm == 0.0:
        raise InvalidInputError("cannot normalize the zero tuple")
    return TuplePoint(components=stack / norm)


def separation_distance(p: TuplePoint, q: TuplePoint) -> float:
    """||p - q|| in the weighted tuple space."""
    _check_same(p, q)
    diff = TuplePoint(components=p.components - q.components)
    return diff.norm()


def packing_bound_log(n: int, dim: int, eps: float) -> float:
    """
    Natural log of the volume bound on a sqrt(2 eps)-separated set.

    A delta-separated set on the unit sphere of real dimension D has at most
    (1 + 2/delta)^D points; here delta = sqrt(2 eps) and D = 2 n dim^2.
    """
    if n < 1 or dim < 1:
        raise InvalidInputError(f"n and dim must be positive, got n={n}, dim={dim}")
    if not 0.0 < eps < 1.0:
        raise InvalidInputError(f"eps must lie in (0, 1), got {eps}")
    delta = math.sqrt(2.0 * eps)
    return 2.0 * n * dim * dim * math.log1p(2.0 / delta)


@dataclass
class GeometryReport:
    """Pairwise geometry of a family of tuple points against a gap eps_star."""

    eps_star: float
    inner_products: List[List[float]]
    distances: List[List[float]]
    min_distance: float
    required_distance: float
    violations: List[Tuple[int, int]] = field(default_factory=list)
    log_count: float = 0.0
    log_volume_bound: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and self.log_count <= self.log_volume_bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eps_star": self.eps_star,
            "inner_products": self.inner_products,
            "distances": self.distances,
            "min_distance": self.min_distance,
            "required_distance": self.required_distance,
            "violations": [list(pair) for pair in self.violations],
            "log_count": self.log_count,
            "log_volume_bound": self.log_volume_bound,
            "ok": self.ok,
        }


def family_geometry(family: Sequence[Any], eps_star: float) -> GeometryReport:
    """
    Check Re<x(t), x(r)> <= 1 - eps_star and ||x(t) - x(r)|| >= sqrt(2 eps_star).

    ``family`` holds tuples (or points) of a common (n, N); at least two.
    """
    if len(family) < 2:
        raise InvalidInputError("family_geometry needs at least two members")
    points = [p if isinstance(p, TuplePoint) else tuple_point(p) for p in family]
    count = len(points)
    inner = np.eye(count)
    dist = np.zeros((count, count))
    for t in range(count):
        for r in range(t + 1, count):
            inner[t, r] = inner[r, t] = points[t].inner(points[r]).real
            dist[t, r] = dist[r, t] = separation_distance(points[t], points[r])

    required = math.sqrt(2.0 * max(eps_star, 0.0))
    violations = [
        (t, r)
        for t in range(count)
        for r in range(t + 1, count)
        if inner[t, r] > 1.0 - eps_star + SEPARATION_SLACK
        or dist[t, r] < required - SEPARATION_SLACK
    ]
    off_diagonal = dist[~np.eye(count, dtype=bool)]
    bound = (
        packing_bound_log(points[0].n, points[0].dim, eps_star)
        if 0.0 < eps_star < 1.0
        else math.inf
    )
    report = GeometryReport(
        eps_star=eps_star,
        inner_products=inner.tolist(),
        distances=dist.tolist(),
        min_distance=float(off_diagonal.min()),
        required_distance=required,
        violations=violations,
        log_count=math.log(count),
        log_volume_bound=bound,
    )
    logger.info(
        f"FAMILY_GEOMETRY: count={count} eps_star={eps_star:.6g} "
        f"min_distance={report.min_distance:.6g} violations={len(violations)}"
    )
    return report
