"""Exact k x k matrices over the field with two elements.

Row i is stored as an int bitmask with bit j holding entry (i, j); vectors
of F_2^k are bitmasks the same way. All arithmetic is integer XOR/AND.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from spectral.exceptions import InvalidInputError, NonInvertibleGeneratorError


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


@dataclass(frozen=True)
class GF2Matrix:
    """Immutable, hashable k x k matrix over F_2."""

    k: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or len(self.rows) != self.k:
            raise InvalidInputError(f"GF2Matrix needs k >= 1 and k rows, got k={self.k}")
        limit = 1 << self.k
        if any(not 0 <= r < limit for r in self.rows):
            raise InvalidInputError("GF2Matrix row has bits beyond column k")

    # -------------------------------------------------------------- builders

    @classmethod
    def zero(cls, k: int) -> "GF2Matrix":
        return cls(k, (0,) * k)

    @classmethod
    def identity(cls, k: int) -> "GF2Matrix":
        return cls(k, tuple(1 << i for i in range(k)))

    @classmethod
    def unit(cls, k: int, i: int, j: int) -> "GF2Matrix":
        """Matrix unit e_ij (0-based)."""
        rows = [0] * k
        rows[i] = 1 << j
        return cls(k, tuple(rows))

    @classmethod
    def shift(cls, k: int) -> "GF2Matrix":
        """e_12 + e_23 + ... + e_{k-1,k} + e_{k,1}: the cyclic permutation matrix."""
        return cls(k, tuple(1 << ((i + 1) % k) for i in range(k)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        k = len(entries)
        rows = []
        for i, row in enumerate(entries):
            if len(row) != k or any(b not in (0, 1) for b in row):
                raise InvalidInputError(f"row {i} must be {k} entries of 0/1")
            rows.append(sum(1 << j for j, b in enumerate(row) if b))
        return cls(k, tuple(rows))

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.k)] for r in self.rows]

    def to_int(self) -> int:
        """Pack all k^2 bits into one int (row i occupies bits [ik, ik + k))."""
        return sum(r << (i * self.k) for i, r in enumerate(self.rows))

    @classmethod
    def from_int(cls, k: int, value: int) -> "GF2Matrix":
        mask = (1 << k) - 1
        return cls(k, tuple((value >> (i * k)) & mask for i in range(k)))

    # ------------------------------------------------------------ arithmetic

    def _check(self, other: "GF2Matrix") -> None:
        if other.k != self.k:
            raise InvalidInputError(f"size mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        self._check(other)
        return GF2Matrix(self.k, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        self._check(other)
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.rows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return GF2Matrix(self.k, tuple(out))

    def apply(self, vector: int) -> int:
        """Matrix-vector product for a bitmask vector."""
        return sum(_parity(r & vector) << i for i, r in enumerate(self.rows))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return len(_echelon(self.rows))

    def inverse(self) -> "GF2Matrix":
        """Gauss-Jordan inverse.

        Raises:
            NonInvertibleGeneratorError: the matrix is singular
        """
        k = self.k
        left = list(self.rows)
        right = [1 << i for i in range(k)]
        for col in range(k):
            pivot = next((i for i in range(col, k) if (left[i] >> col) & 1), None)
            if pivot is None:
                raise NonInvertibleGeneratorError("GF(2) matrix is singular")
            left[col], left[pivot] = left[pivot], left[col]
            right[col], right[pivot] = right[pivot], right[col]
            for i in range(k):
                if i != col and (left[i] >> col) & 1:
                    left[i] ^= left[col]
                    right[i] ^= right[col]
        return GF2Matrix(k, tuple(right))


def _echelon(rows: Iterable[int]) -> Dict[int, int]:
    """Reduce bitmask rows to a pivot -> row map (pivot = highest set bit)."""
    basis: Dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return basis


class GF2Span:
    """Incrementally grown F_2-linear span of bitmask vectors."""

    def __init__(self):
        self._basis: Dict[int, int] = {}

    def reduce(self, vector: int) -> int:
        while vector:
            top = vector.bit_length() - 1
            if top not in self._basis:
                return vector
            vector ^= self._basis[top]
        return 0

    def add(self, vector: int) -> bool:
        """Add a vector; True if it enlarged the span."""
        residue = self.reduce(vector)
        if residue == 0:
            return False
        self._basis[residue.bit_length() - 1] = residue
        return True

    def __len__(self) -> int:
        return len(self._basis)

    @property
    def size(self) -> int:
        """Number of vectors in the span, 2^dim."""
        return 1 << len(self._basis)


def sl_f2_order(d: int) -> int:
    """|SL_d(F_2)| = 2^{d(d-1)/2} * prod_{i=2..d} (2^i - 1)."""
    if d < 1:
        raise InvalidInputError(f"d must be positive, got {d}")
    order = 1 << (d * (d - 1) // 2)
    for i in range(2, d + 1):
        order *= (1 << i) - 1
    return order


def standard_sl_generators(d: int) -> List[GF2Matrix]:
    """{I + E_12, cyclic shift} and their inverses, generating SL_d(F_2).

    Conjugating I + E_12 by powers of the shift gives the cyclic chain of
    transvections, whose commutators produce every elementary matrix.
    """
    if d < 2:
        raise InvalidInputError(f"SL_d(F_2) generators need d >= 2, got {d}")
    transvection = GF2Matrix.identity(d) + GF2Matrix.unit(d, 0, 1)
    shift = GF2Matrix.shift(d)
    gens: List[GF2Matrix] = []
    for g in (transvection, shift, transvection.inverse(), shift.inverse()):
        if g not in gens:
            gens.append(g)
    return gens
