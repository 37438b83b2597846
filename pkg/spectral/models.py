"""Models for solver configuration, spectral reports and unitary tuples."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import Settings, get_settings
from .exceptions import NonUnitaryError, ShapeMismatchError
from .linalg import adjoint_closed, as_stack, unitarity_residual

logger = logging.getLogger(__name__)

_SEED_LIMIT = 2**64


# =============================================================================
# Solver configuration
# =============================================================================


class SolveMethod(str, Enum):
    auto = "auto"
    dense = "dense"
    iterative = "iterative"


class SolverOptions(BaseModel):
    """Numerical options shared by every gap, norm and nullspace computation."""

    model_config = ConfigDict(frozen=True)

    convergence_tol: float = 1e-9
    max_iterations: int = 100_000
    dense_threshold: int = 256
    seed: int = 0
    fixed_tol: float = 1e-8
    unitarity_tol: float = 1e-10
    method: SolveMethod = SolveMethod.auto

    @field_validator("convergence_tol", "fixed_tol", "unitarity_tol")
    @classmethod
    def validate_positive(cls, v, info):
        if not v > 0:
            raise ValueError(f"{info.field_name} must be positive")
        return v

    @field_validator("max_iterations")
    @classmethod
    def validate_iterations(cls, v):
        if v < 1:
            raise ValueError("max_iterations must be >= 1")
        return v

    @field_validator("dense_threshold")
    @classmethod
    def validate_threshold(cls, v):
        if v < 0:
            raise ValueError("dense_threshold must be >= 0")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v):
        if not 0 <= v < _SEED_LIMIT:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @classmethod
    def from_settings(
        cls, settings: Optional[Settings] = None, **overrides: Any
    ) -> "SolverOptions":
        """Build options from settings; non-None overrides win."""
        settings = settings or get_settings()
        values = {
            "convergence_tol": settings.convergence_tol,
            "max_iterations": settings.max_iterations,
            "dense_threshold": settings.dense_threshold,
            "seed": settings.seed,
            "fixed_tol": settings.fixed_tol,
            "unitarity_tol": settings.unitarity_tol,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_seed(self, seed: int) -> "SolverOptions":
        return self.model_copy(update={"seed": seed % _SEED_LIMIT})

    def use_dense(self, operator_size: int) -> bool:
        """Whether an operator of this ambient dimension goes down the dense path."""
        if self.method == SolveMethod.dense:
            return True
        if self.method == SolveMethod.iterative:
            return False
        return operator_size <= self.dense_threshold


# =============================================================================
# Spectral report
# =============================================================================


class SpectralReport(BaseModel):
    """Normalized top value lambda, epsilon = 1 - lambda, and solver diagnostics."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(alias="lambda")
    epsilon: float = 0.0
    method: SolveMethod
    iterations: int = Field(default=0, ge=0)
    residual: float = Field(default=0.0, ge=0.0)
    # Set when the deflated subspace was {0} and lambda was clamped to -1
    clamped: bool = False

    @model_validator(mode="before")
    @classmethod
    def derive_epsilon(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            lam = data.get("lambda", data.get("lambda_"))
            if lam is not None:
                data["epsilon"] = 1.0 - float(lam)
        return data

    @field_validator("method")
    @classmethod
    def validate_method(cls, v):
        if v == SolveMethod.auto:
            raise ValueError("a report records the method actually used")
        return v

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "lambda": self.lambda_,
            "epsilon": self.epsilon,
            "method": self.method.value,
            "iterations": self.iterations,
            "residual": self.residual,
        }
        if self.clamped:
            data["clamped"] = True
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpectralReport":
        return cls.model_validate(data)


# =============================================================================
# Unitary tuples
# =============================================================================


@dataclass(frozen=True, eq=False)
class UnitaryTuple:
    """An n-tuple u = (u_1, ..., u_n) of N x N unitaries.

    Arrays are stored read-only so a tuple can be shared across threads.
    Build through ``from_matrices`` to get validation.
    """

    matrices: Tuple[np.ndarray, ...]
    symmetric: bool = False
    max_residual: float = field(default=0.0, compare=False)

    @property
    def n(self) -> int:
        return len(self.matrices)

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    @classmethod
    def from_matrices(
        cls,
        matrices: Sequence[Any],
        symmetric: Optional[bool] = None,
        tol: Optional[float] = None,
    ) -> "UnitaryTuple":
        """
        Validate and package unitaries.

        Args:
            matrices: square complex matrices of a common size
            symmetric: expected adjoint closure; None detects it
            tol: unitarity tolerance (defaults to settings.unitarity_tol)

        Raises:
            NonUnitaryError: a member fails ||u*u - I||_F <= tol
            ShapeMismatchError: mixed or non-square shapes, or a claimed
                symmetric flag that does not hold
        """
        tol = get_settings().unitarity_tol if tol is None else tol
        stack = as_stack(matrices)
        residuals = [unitarity_residual(m) for m in stack]
        worst = max(residuals)
        if worst > tol:
            index = int(np.argmax(residuals))
            raise NonUnitaryError(
                f"matrix {index} is not unitary (residual {worst:.3e} > {tol:.1e})",
                residual=worst,
            )

        closed = adjoint_closed(stack, tol)
        if symmetric is None:
            symmetric = closed
        elif symmetric and not closed:
            raise ShapeMismatchError(
                "tuple flagged symmetric but is not closed under adjoint"
            )

        frozen = []
        for m in stack:
            m = np.array(m, dtype=np.complex128)
            m.setflags(write=False)
            frozen.append(m)
        return cls(matrices=tuple(frozen), symmetric=bool(symmetric), max_residual=worst)

    def stacked(self) -> np.ndarray:
        """Return an (n, N, N) array of the members."""
        return np.stack(self.matrices)

    def adjoint(self) -> "UnitaryTuple":
        return UnitaryTuple.from_matrices([m.conj().T for m in self.matrices])

    def conjugated_by(self, w: np.ndarray) -> "UnitaryTuple":
        """Return (w u_j w*)_j."""
        w = np.asarray(w, dtype=np.complex128)
        return UnitaryTuple.from_matrices(
            [w @ m @ w.conj().T for m in self.matrices],
            symmetric=self.symmetric
        )

    def with_phases(self, phases: Sequence[complex]) -> "UnitaryTuple":
        """Return (theta_j u_j)_j for unit-modulus theta_j."""
        if len(phases) != self.n:
            raise ShapeMismatchError(f"expected {self.n} phases, got {len(phases)}")
        return UnitaryTuple.from_matrices(
            [complex(t) * m for t, m in zip(phases, self.matrices)]
        )

    def block(self, start: int, size: int) -> "UnitaryTuple":
        """Return the diagonal block [start:start+size] of every member."""
        return UnitaryTuple.from_matrices(
            [m[start : start + size, start : start + size] for m in self.matrices]
        )
