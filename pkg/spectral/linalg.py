"""Dense complex linear algebra shared by the gap, norm and intertwiner computations.

Matrices are complex128 numpy arrays. The Hilbert-Schmidt space of N x N
matrices is identified with C^{N^2} through row-major vectorisation, under
which x -> u x v* is the matrix kron(u, conj(v)).
"""

from typing import Any, List, Sequence, Tuple

import numpy as np
import scipy.linalg

from .exceptions import InvalidInputError, ShapeMismatchError


def as_matrix(x: Any) -> np.ndarray:
    """Coerce to a finite 2-d complex128 array."""
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 2 or arr.size == 0:
        raise ShapeMismatchError(f"expected a non-empty matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("matrix has non-finite entries")
    return arr


def as_stack(matrices: Any) -> np.ndarray:
    """Coerce a tuple (or anything with ``.matrices``) to an (n, N, N) array."""
    matrices = getattr(matrices, "matrices", matrices)
    mats = [as_matrix(m) for m in matrices]
    if not mats:
        raise ShapeMismatchError("expected at least one matrix")
    shape = mats[0].shape
    if shape[0] != shape[1]:
        raise ShapeMismatchError(f"matrix 0 is not square: {shape}")
    for j, m in enumerate(mats):
        if m.shape != shape:
            raise ShapeMismatchError(
                f"matrix {j} has shape {m.shape}, expected {shape}"
            )
    return np.stack(mats)


def unitarity_residual(m: np.ndarray) -> float:
    """Frobenius norm of m*m - I."""
    return float(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0])))


def adjoint_closed(stack: np.ndarray, tol: float) -> bool:
    """True if every u_j* equals some u_j' within tol."""
    for m in stack:
        adj = m.conj().T
        if not any(np.linalg.norm(adj - other) <= tol for other in stack):
            return False
    return True


def hs_inner(x: Any, y: Any) -> complex:
    """Hilbert-Schmidt inner product tr(y* x)."""
    x, y = as_matrix(x), as_matrix(y)
    if x.shape != y.shape or x.shape[0] != x.shape[1]:
        raise ShapeMismatchError(
            f"hs_inner needs equal square shapes, got {x.shape} and {y.shape}"
        )
    return complex(np.vdot(y, x))


def _pair_stacks(u: Any, v: Any) -> Tuple[np.ndarray, np.ndarray]:
    us, vs = as_stack(u), as_stack(v)
    if us.shape[0] != vs.shape[0]:
        raise ShapeMismatchError(
            f"tuple lengths differ: {us.shape[0]} vs {vs.shape[0]}"
        )
    if us.shape[1:] != vs.shape[1:]:
        raise ShapeMismatchError(
            f"tuple dimensions differ: {us.shape[1]} vs {vs.shape[1]}"
        )
    return us, vs


def apply_superop(u: Any, v: Any, x: Any) -> np.ndarray:
    """Return sum_j u_j x v_j* without forming the N^2 x N^2 matrix."""
    us, vs = _pair_stacks(u, v)
    x = as_matrix(x)
    if x.shape != us.shape[1:]:
        raise ShapeMismatchError(
            f"x has shape {x.shape}, tuples act on {us.shape[1:]}"
        )
    return superop_image(us, vs, x)


def superop_image(us: np.ndarray, vs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Unchecked sum_j u_j x v_j* as one batched matmul, O(nN^3)."""
    return (us @ x @ vs.conj().swapaxes(1, 2)).sum(axis=0)


def apply_superop_adjoint(us: np.ndarray, vs: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Return sum_j u_j* y v_j, the Hilbert-Schmidt adjoint of apply_superop."""
    return (us.conj().swapaxes(1, 2) @ y @ vs).sum(axis=0)


def dense_superoperator(u: Any, v: Any) -> np.ndarray:
    """Return sum_j kron(u_j, conj(v_j)), the matrix of x -> sum u_j x v_j*."""
    us, vs = _pair_stacks(u, v)
    return sum(np.kron(a, b.conj()) for a, b in zip(us, vs))


def traceless_basis(dim: int) -> np.ndarray:
    """Orthonormal basis (columns) of the trace-zero subspace of C^{dim^2}."""
    identity = np.eye(dim, dtype=np.complex128).reshape(1, dim * dim)
    return scipy.linalg.null_space(identity)


def split_by_singular_values(
    system: np.ndarray, tol: float
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Split the domain of a linear system into its nullspace and complement.

    Singular values at or below ``tol`` (absolute) count as zero.

    Returns:
        (null_basis, range_basis): orthonormal columns spanning ker(system)
        and its orthogonal complement
    """
    cols = system.shape[1]
    if system.shape[0] == 0:
        return np.eye(cols, dtype=system.dtype), np.zeros((cols, 0), dtype=system.dtype)
    _, s, vh = scipy.linalg.svd(system, full_matrices=True)
    rank = int(np.count_nonzero(s > tol))
    basis = vh.conj().T
    return basis[:, rank:], basis[:, :rank]


def nullity(system: np.ndarray, tol: float) -> int:
    """Dimension of ker(system), singular values <= tol counted as zero."""
    cols = system.shape[1]
    if system.shape[0] == 0:
        return cols
    s = scipy.linalg.svdvals(system)
    return cols - int(np.count_nonzero(s > tol))


def intertwiner_system(us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    """Stacked system for u_j x = x v_j with x of shape (dim_u, dim_v)."""
    a, b = us.shape[1], vs.shape[1]
    blocks: List[np.ndarray] = [
        np.kron(uj, np.eye(b)) - np.kron(np.eye(a), vj.T) for uj, vj in zip(us, vs)
    ]
    return np.vstack(blocks)


def block_diagonal(stacks: Sequence[np.ndarray]) -> np.ndarray:
    """Block-diagonal stack: member j is diag(stacks[0][j], stacks[1][j], ...)."""
    n = stacks[0].shape[0]
    return np.stack(
        [scipy.linalg.block_diag(*[s[j] for s in stacks]) for j in range(n)]
    )


def random_start(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    """Complex Gaussian start vector for iterative solvers."""
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
