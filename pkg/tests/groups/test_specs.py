"""Tests for groups/specs.py"""

import pytest
from pydantic import ValidationError

from groups.specs import (
    GroupSpec,
    build_group,
    cyclic_generators,
    symmetric_group_generators,
)
from spectral.exceptions import InvalidInputError, OrderExceededError


class TestGenerators:
    def test_cyclic(self):
        assert cyclic_generators(3) == [(1, 2, 0)]

    def test_cyclic_needs_two(self):
        with pytest.raises(InvalidInputError):
            cyclic_generators(1)

    def test_symmetric_group(self):
        assert symmetric_group_generators(3) == [(1, 0, 2), (1, 2, 0)]

    def test_symmetric_group_of_two_points(self):
        assert symmetric_group_generators(2) == [(1, 0)]


class TestGroupSpec:
    def test_missing_k(self):
        with pytest.raises(ValidationError) as exc:
            GroupSpec(kind="sl3k_f2")
        assert "k:" in str(exc.value)

    def test_small_m(self):
        with pytest.raises(ValidationError):
            GroupSpec(kind="cyclic", m=1)

    def test_custom_needs_generators(self):
        with pytest.raises(ValidationError):
            GroupSpec(kind="custom_perm")

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            GroupSpec(kind="dihedral", m=4)


class TestBuildGroup:
    @pytest.mark.parametrize(
        "spec,order",
        [
            ({"kind": "cyclic", "m": 7}, 7),
            ({"kind": "symmetric_group", "m": 4}, 24),
            ({"kind": "sl3k_f2", "k": 1}, 168),
            ({"kind": "custom_perm", "generators": [[1, 0, 2, 3], [0, 1, 3, 2]]}, 4),
        ],
    )
    def test_orders(self, spec, order):
        assert build_group(GroupSpec.model_validate(spec)).order == order

    def test_sl_refused_before_enumeration(self):
        with pytest.raises(OrderExceededError):
            build_group(GroupSpec(kind="sl3k_f2", k=2))
