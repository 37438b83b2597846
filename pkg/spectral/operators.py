"""Concrete operators for the gap and norm computations."""

import logging
from typing import Tuple

import numpy as np

from .base import BaseOperator
from .linalg import (
    apply_superop_adjoint,
    dense_superoperator,
    split_by_singular_values,
    superop_image,
    traceless_basis,
)

logger = logging.getLogger(__name__)


def _hermitian(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


class TracelessHermitianPart(BaseOperator):
    """Re-part of x -> sum_j u_j x u_j* on trace-zero matrices."""

    shift = 1.0

    def __init__(self, stack: np.ndarray):
        self.stack = stack
        self.scale = float(stack.shape[0])
        self._dim = stack.shape[1]

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self._dim, self._dim)

    @property
    def restricted_dim(self) -> int:
        return self._dim * self._dim - 1

    def apply(self, x: np.ndarray) -> np.ndarray:
        forward = superop_image(self.stack, self.stack, x)
        backward = apply_superop_adjoint(self.stack, self.stack, x)
        return 0.5 * (forward + backward)

    def project(self, x: np.ndarray) -> np.ndarray:
        return x - (np.trace(x) / self._dim) * np.eye(self._dim)

    def dense_restricted(self) -> np.ndarray:
        basis = traceless_basis(self._dim)
        full = _hermitian(dense_superoperator(self.stack, self.stack))
        return basis.conj().T @ full @ basis


class RepresentationHermitianPart(BaseOperator):
    """Re-part of sum_s pi(s) on the orthogonal complement of the joint fixed space."""

    shift = 1.0

    def __init__(self, stack: np.ndarray, fixed_tol: float):
        self.stack = stack
        self.scale = float(stack.shape[0])
        self._dim = stack.shape[1]
        identity = np.eye(self._dim)
        system = np.vstack([m - identity for m in stack])
        self.fixed_basis, self.moving_basis = split_by_singular_values(system, fixed_tol)
        logger.debug(
            f"REP_OPERATOR: dim={self._dim} fixed={self.fixed_basis.shape[1]}"
        )

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self._dim,)

    @property
    def restricted_dim(self) -> int:
        return self.moving_basis.shape[1]

    def apply(self, x: np.ndarray) -> np.ndarray:
        forward = np.einsum("jab,b->a", self.stack, x)
        backward = np.einsum("jba,b->a", self.stack.conj(), x)
        return 0.5 * (forward + backward)

    def project(self, x: np.ndarray) -> np.ndarray:
        q = self.fixed_basis
        return x - q @ (q.conj().T @ x)

    def dense_restricted(self) -> np.ndarray:
        w = self.moving_basis
        return w.conj().T @ _hermitian(self.stack.sum(axis=0)) @ w


class SuperoperatorGram(BaseOperator):
    """Phi* Phi for Phi(x) = sum_j u_j x v_j*, optionally on trace-zero matrices.

    The top eigenvalue is ||Phi||^2 (restricted when ``traceless``).
    """

    shift = 0.0

    def __init__(self, us: np.ndarray, vs: np.ndarray, traceless: bool = False):
        self.us = us
        self.vs = vs
        self.traceless = traceless
        n = us.shape[0]
        self.scale = float(n * n)
        self._dim = us.shape[1]

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self._dim, self._dim)

    @property
    def restricted_dim(self) -> int:
        full = self._dim * self._dim
        return full - 1 if self.traceless else full

    def apply(self, x: np.ndarray) -> np.ndarray:
        image = superop_image(self.us, self.vs, x)
        return apply_superop_adjoint(self.us, self.vs, image)

    def project(self, x: np.ndarray) -> np.ndarray:
        if not self.traceless:
            return x
        return x - (np.trace(x) / self._dim) * np.eye(self._dim)

    def dense_matrix(self) -> np.ndarray:
        """The superoperator itself on the subspace (not its Gram matrix)."""
        full = dense_superoperator(self.us, self.vs)
        if not self.traceless:
            return full
        basis = traceless_basis(self._dim)
        return basis.conj().T @ full @ basis

    def dense_restricted(self) -> np.ndarray:
        m = self.dense_matrix()
        return m.conj().T @ m
