"""JSON codec for unitary tuples.

Format: {"n": int, "dim": int, "symmetric": bool,
         "matrices": [ matrix, ... ]} with each matrix a list of rows and each
entry an [re, im] pair.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ValidationError, model_validator

from .exceptions import InvalidInputError
from .models import UnitaryTuple

logger = logging.getLogger(__name__)

Entry = Tuple[float, float]


class UnitaryTupleModel(BaseModel):
    """Wire model of a unitary tuple file."""

    n: int
    dim: int
    symmetric: bool = False
    matrices: List[List[List[Entry]]]

    @model_validator(mode="after")
    def check_shape(self) -> "UnitaryTupleModel":
        if self.n < 1 or self.dim < 1:
            raise ValueError("n and dim must be positive")
        if len(self.matrices) != self.n:
            raise ValueError(f"matrices: expected {self.n} matrices, got {len(self.matrices)}")
        for j, rows in enumerate(self.matrices):
            if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
                raise ValueError(f"matrices[{j}]: expected {self.dim}x{self.dim} entries")
        return self


def _describe(err: ValidationError) -> str:
    first = err.errors()[0]
    where = ".".join(str(p) for p in first.get("loc", ())) or "tuple"
    return f"{where}: {first.get('msg', 'invalid value')}"


def tuple_to_dict(u: UnitaryTuple) -> Dict[str, Any]:
    return {
        "n": u.n,
        "dim": u.dim,
        "symmetric": u.symmetric,
        "matrices": [
            [[[float(z.real), float(z.imag)] for z in row] for row in m]
            for m in u.matrices
        ],
    }


def tuple_from_dict(data: Any, tol: Optional[float] = None) -> UnitaryTuple:
    """Parse and validate a tuple payload.

    Raises:
        InvalidInputError: structural problems, naming the offending field
        NonUnitaryError: entries do not form unitaries within tol
    """
    try:
        model = UnitaryTupleModel.model_validate(data)
    except ValidationError as e:
        raise InvalidInputError(f"malformed tuple: {_describe(e)}") from e
    mats = [
        np.array([[complex(re, im) for re, im in row] for row in m], dtype=np.complex128)
        for m in model.matrices
    ]
    return UnitaryTuple.from_matrices(
        mats, symmetric=True if model.symmetric else None, tol=tol
    )


def load_tuple(path: Union[str, Path], tol: Optional[float] = None) -> UnitaryTuple:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise InvalidInputError(f"cannot read tuple file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"tuple file {path} is not valid JSON: {e}") from e
    logger.debug(f"TUPLE_CODEC: loaded {path}")
    return tuple_from_dict(data, tol)


def save_tuple(path: Union[str, Path], u: UnitaryTuple) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(tuple_to_dict(u), f)
    logger.debug(f"TUPLE_CODEC: saved n={u.n} dim={u.dim} to {path}")
