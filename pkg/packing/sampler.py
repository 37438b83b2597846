"""Seeded Haar-random unitaries and tuples.

All randomness comes from numpy Generators seeded explicitly; per-index
seeds are derived with splitmix64 so members can be drawn independently
and in any order.
"""

import logging

import numpy as np
import scipy.linalg

from spectral.exceptions import InvalidInputError
from spectral.models import UnitaryTuple

logger = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One output of the splitmix64 generator started at state x."""
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """seed XOR splitmix64(index), as a 64-bit unsigned integer."""
    return (int(seed) ^ splitmix64(int(index))) & _MASK64


def haar_unitary(dim: int, seed: int) -> np.ndarray:
    """
    Haar-distributed element of U(dim).

    QR of a complex Ginibre matrix, with the columns of Q rescaled by the
    phases of diag(R) so the law does not depend on the QR convention.
    """
    if dim < 1:
        raise InvalidInputError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(int(seed) & _MASK64)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = scipy.linalg.qr(z)
    d = np.diagonal(r)
    phases = d / np.abs(d)
    return q * phases


def random_tuple(n: int, dim: int, seed: int, symmetric: bool = False) -> UnitaryTuple:
    """
    n independent Haar unitaries, member j drawn from derive_seed(seed, j).

    With ``symmetric`` the tuple is (v_1, ..., v_{n/2}, v_1*, ..., v_{n/2}*).

    Raises:
        InvalidInputError: n or dim < 1, or odd n with symmetric
    """
    if n < 1 or dim < 1:
        raise InvalidInputError(f"n and dim must be >= 1, got n={n}, dim={dim}")
    if symmetric and n % 2:
        raise InvalidInputError(f"a symmetric tuple needs even n, got {n}")
    count = n // 2 if symmetric else n
    mats = [haar_unitary(dim, derive_seed(seed, j)) for j in range(count)]
    if symmetric:
        mats = mats + [m.conj().T for m in mats]
    return UnitaryTuple.from_matrices(mats, symmetric=True if symmetric else None)
