"""Base operator interface - extend this to plug a new operator into the solvers."""

from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np


class BaseOperator(ABC):
    """
    A Hermitian operator on a deflated subspace, solvable dense or matrix-free.

    The solvers iterate on ``apply(x) / scale + shift * x``, which must have
    spectrum in [0, 2]; the top eigenvalue of the operator itself is recovered
    as ``scale * (theta - shift)``.
    """

    #: Normalizer bringing the spectrum into [-1, 1] (Hermitian parts) or [0, 1]
    scale: float = 1.0
    shift: float = 1.0

    @property
    @abstractmethod
    def shape(self) -> Tuple[int, ...]:
        """Shape of a vector the operator acts on."""

    @property
    def size(self) -> int:
        """Ambient dimension, compared against the dense threshold."""
        return int(np.prod(self.shape))

    @property
    @abstractmethod
    def restricted_dim(self) -> int:
        """Dimension of the subspace the operator is restricted to."""

    @abstractmethod
    def apply(self, x: np.ndarray) -> np.ndarray:
        """Apply the operator to a vector of ``shape``."""

    @abstractmethod
    def project(self, x: np.ndarray) -> np.ndarray:
        """Orthogonal projection onto the restriction subspace."""

    @abstractmethod
    def dense_restricted(self) -> np.ndarray:
        """Hermitian matrix of the operator in an orthonormal basis of the subspace."""
