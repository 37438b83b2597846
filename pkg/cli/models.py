"""Validated command configuration."""

import argparse
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from spectral.exceptions import InvalidInputError
from spectral.models import SolveMethod, SolverOptions


class CommandConfig(BaseModel):
    """Every parameter of one invocation, checked before any computation."""

    model_config = ConfigDict(extra="ignore")

    command: str
    format: Literal["json", "csv"] = "json"

    # inputs
    tuple_path: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    packing: Optional[str] = None
    spec_path: Optional[str] = None
    generators: Optional[str] = None
    output: Optional[str] = None

    # gap sources
    pauli2: bool = False
    identity: bool = False
    builtin: bool = False
    random: Optional[List[int]] = None
    mode: Literal["tuple", "rep", "tensor"] = "tuple"

    # numeric parameters
    n: Optional[int] = None
    dim: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    eps: Optional[float] = None
    seed: int = 0
    candidates: Optional[int] = None
    symmetric: bool = False
    save_tuples: bool = False
    threads: Optional[int] = None
    group: Optional[str] = None
    ns: Optional[List[int]] = None
    dims: Optional[List[int]] = None
    epss: Optional[List[float]] = None

    # solver overrides
    tol: Optional[float] = None
    max_iter: Optional[int] = None
    dense_threshold: Optional[int] = None
    method: SolveMethod = SolveMethod.auto
    solver_seed: Optional[int] = None

    @model_validator(mode="after")
    def check_ranges(self) -> "CommandConfig":
        for name in ("n", "dim"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")
        if self.k is not None and self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.m is not None and self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if self.eps is not None and not 0.0 < self.eps < 1.0:
            raise ValueError(f"eps must lie in (0, 1), got {self.eps}")
        if self.candidates is not None and self.candidates < 0:
            raise ValueError(f"candidates must be >= 0, got {self.candidates}")
        if self.threads is not None and self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.random is not None:
            n, dim, seed = self.random
            if n < 1 or dim < 1 or seed < 0:
                raise ValueError(f"random needs N >= 1, DIM >= 1, SEED >= 0, got {self.random}")
        for name in ("ns", "dims"):
            values = getattr(self, name)
            if values is not None and any(v < 1 for v in values):
                raise ValueError(f"{name} entries must be >= 1")
        if self.epss is not None and any(not 0.0 < e < 1.0 for e in self.epss):
            raise ValueError("eps entries must lie in (0, 1)")
        if self.command == "cayley" and not (self.group or self.spec_path):
            raise ValueError("cayley needs --group or --spec")
        if self.command == "pair-norm" and self.builtin == bool(self.a and self.b):
            raise ValueError("pair-norm needs two tuple files A B or --builtin")
        return self

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandConfig":
        """
        Validate parsed arguments.

        Raises:
            InvalidInputError: a parameter is out of range, naming it
        """
        try:
            return cls.model_validate(vars(args))
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(p) for p in first.get("loc", ())) or "arguments"
            raise InvalidInputError(f"{where}: {first.get('msg', 'invalid value')}") from e

    def solver_options(self) -> SolverOptions:
        """Settings-derived SolverOptions with this invocation's overrides."""
        try:
            return SolverOptions.from_settings(
                convergence_tol=self.tol,
                max_iterations=self.max_iter,
                dense_threshold=self.dense_threshold,
                seed=self.solver_seed,
                method=self.method,
            )
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(p) for p in first.get("loc", ())) or "solver"
            raise InvalidInputError(f"{where}: {first.get('msg', 'invalid value')}") from e
