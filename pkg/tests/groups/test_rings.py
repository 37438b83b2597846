"""Tests for groups/rings.py"""

import itertools

import pytest

from groups.gf2 import GF2Matrix
from groups.rings import ring_closure, ring_generators
from spectral.exceptions import InvalidInputError, RingRangeError


def _brute_force_subring(gens):
    """Close a set under + and * until nothing new appears."""
    elements = set(gens)
    while True:
        current = list(elements)
        new = {a + b for a, b in itertools.product(current, repeat=2)}
        new |= {a @ b for a, b in itertools.product(current, repeat=2)}
        if new <= elements:
            return len(elements | {GF2Matrix.zero(gens[0].k)})
        elements |= new


class TestRingClosure:
    @pytest.mark.parametrize("k,size", [(1, 2), (2, 16), (3, 512)])
    def test_generators_give_full_ring(self, k, size):
        assert ring_closure(k, ring_generators(k)) == size

    def test_zero_subring(self):
        assert ring_closure(2, [GF2Matrix.zero(2)]) == 1

    def test_identity_alone(self):
        assert ring_closure(3, [GF2Matrix.identity(3)]) == 2

    def test_nilpotent_generator(self):
        # e_12 squares to zero
        assert ring_closure(2, [GF2Matrix.unit(2, 0, 1)]) == 2

    def test_matches_brute_force(self):
        matrices = [GF2Matrix.from_int(2, v) for v in range(16)]
        for a, b in itertools.combinations(matrices, 2):
            assert ring_closure(2, [a, b]) == _brute_force_subring([a, b])

    @pytest.mark.parametrize("k", [0, 4])
    def test_range(self, k):
        with pytest.raises(RingRangeError) as exc:
            ring_closure(k, [GF2Matrix.identity(1)])
        assert exc.value.exit_code == 2

    def test_size_mismatch(self):
        with pytest.raises(InvalidInputError):
            ring_closure(2, [GF2Matrix.identity(3)])

    def test_empty(self):
        with pytest.raises(InvalidInputError):
            ring_closure(2, [])
