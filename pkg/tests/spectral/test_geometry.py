"""Tests for spectral/geometry.py"""

import math

import numpy as np
import pytest

from packing.sampler import random_tuple
from spectral.exceptions import InvalidInputError, ShapeMismatchError
from spectral.geometry import (
    family_geometry,
    packing_bound_log,
    separation_distance,
    tuple_point,
)


class TestTuplePoint:
    def test_unitary_tuple_is_unit_vector(self, pauli):
        assert tuple_point(pauli).norm() == pytest.approx(1.0)

    def test_scaled_tuple_is_normalized(self):
        p = tuple_point([3 * np.eye(2), 3 * np.eye(2)])
        assert p.norm() == pytest.approx(1.0)
        assert np.allclose(p.components[0], np.eye(2))

    def test_zero_tuple_rejected(self):
        with pytest.raises(InvalidInputError):
            tuple_point([np.zeros((2, 2))])

    def test_inner_product_is_weighted_trace(self):
        u = random_tuple(3, 2, 1)
        v = random_tuple(3, 2, 2)
        expected = sum(np.trace(b.conj().T @ a) for a, b in zip(u.matrices, v.matrices)) / 6
        assert tuple_point(u).inner(tuple_point(v)) == pytest.approx(expected)

    def test_distance_to_self(self, pauli):
        p = tuple_point(pauli)
        assert separation_distance(p, p) == pytest.approx(0.0)

    def test_different_spaces(self):
        with pytest.raises(ShapeMismatchError):
            separation_distance(tuple_point([np.eye(2)]), tuple_point([np.eye(3)]))


class TestPackingBound:
    def test_formula(self):
        expected = 2 * 3 * 4 * math.log(1 + 2 / math.sqrt(0.2))
        assert packing_bound_log(3, 2, 0.1) == pytest.approx(expected)

    def test_decreasing_in_eps(self):
        assert packing_bound_log(2, 2, 0.05) > packing_bound_log(2, 2, 0.5)

    @pytest.mark.parametrize("eps", [0.0, 1.0, -0.1])
    def test_eps_range(self, eps):
        with pytest.raises(InvalidInputError):
            packing_bound_log(2, 2, eps)

    def test_positive_sizes(self):
        with pytest.raises(InvalidInputError):
            packing_bound_log(0, 2, 0.1)


class TestFamilyGeometry:
    def test_antipodal_pair_is_separated(self, pauli):
        negated = [-m for m in pauli.matrices]
        report = family_geometry([pauli, negated], 0.5)
        assert report.inner_products[0][1] == pytest.approx(-1.0)
        assert report.min_distance == pytest.approx(2.0)
        assert report.ok
        assert report.log_count == pytest.approx(math.log(2))

    def test_duplicate_is_violation(self, pauli):
        report = family_geometry([pauli, pauli], 0.5)
        assert report.violations == [(0, 1)]
        assert not report.ok

    def test_needs_two_members(self, pauli):
        with pytest.raises(InvalidInputError):
            family_geometry([pauli], 0.5)

    def test_to_dict(self, pauli):
        data = family_geometry([pauli, [-m for m in pauli.matrices]], 0.25).to_dict()
        assert data["ok"] is True
        assert data["violations"] == []
        assert data["required_distance"] == pytest.approx(math.sqrt(0.5))
