"""Tests for groups/representations.py"""

import numpy as np
import pytest

from groups.actions import GroupAction, natural_action, orbit_count_on_pairs, projective_space_action
from groups.cayley import cayley_gap
from groups.enumeration import compose, enumerate_group
from groups.gf2 import standard_sl_generators
from groups.representations import (
    direct_sum_rep,
    koopman_rep,
    mean_zero_basis,
    perm_rep_commutant_dim,
    permutation_matrices,
    permutation_sign,
    product_lift,
    regular_representation,
    rep_to_tuple,
    sign_twist,
)
from groups.specs import symmetric_group_generators
from spectral.exceptions import InvalidInputError, NotTransitiveError, ShapeMismatchError
from spectral.gap import (
    commutant_dim,
    conjugate_tensor,
    intertwiner_dim,
    lambda_gap,
    rep_gap,
    tensor_gap,
)
from spectral.geometry import family_geometry


@pytest.fixture(scope="module")
def s5():
    return enumerate_group(symmetric_group_generators(5))


@pytest.fixture(scope="module")
def standard_rep(s5):
    return koopman_rep(natural_action(s5))


class TestPermutationMatrices:
    def test_maps_basis_vectors(self):
        action = GroupAction(set_size=3, generator_perms=((1, 2, 0),))
        p = permutation_matrices(action)[0]
        assert np.array_equal(p @ np.eye(3)[0], np.eye(3)[1])

    def test_regular_representation_size(self, s5):
        rep = regular_representation(s5)
        assert len(rep) == len(s5.generators)
        assert rep[0].shape == (120, 120)

    def test_mean_zero_basis(self):
        basis = mean_zero_basis(5)
        assert basis.shape == (5, 4)
        assert np.allclose(basis.T @ basis, np.eye(4))
        assert np.allclose(basis.sum(axis=0), 0.0)

    def test_mean_zero_basis_needs_two_points(self):
        with pytest.raises(InvalidInputError):
            mean_zero_basis(1)


class TestKoopman:
    """Koopman representation of transitive actions."""

    def test_projective_k1(self):
        rep = koopman_rep(projective_space_action(1))
        assert len(rep) == 3
        for m in rep:
            assert m.shape == (6, 6)
            assert np.allclose(m.T @ m, np.eye(6))

    def test_homomorphism(self):
        p, q = (1, 0, 2, 3), (1, 2, 3, 0)
        action = GroupAction(set_size=4, generator_perms=(p, q, compose(p, q)))
        a, b, ab = koopman_rep(action)
        assert np.allclose(a @ b, ab)

    def test_not_transitive(self):
        action = GroupAction(set_size=4, generator_perms=((1, 0, 3, 2),))
        with pytest.raises(NotTransitiveError) as exc:
            koopman_rep(action)
        assert exc.value.details["orbits"] == 2

    def test_single_point(self):
        with pytest.raises(NotTransitiveError):
            koopman_rep(GroupAction(set_size=1, generator_perms=((0,),)))

    def test_irreducible_for_doubly_transitive(self):
        rep = koopman_rep(projective_space_action(1))
        assert commutant_dim(rep) == 1

    def test_gap_dominates_cayley_gap(self, solver_options):
        table = enumerate_group(standard_sl_generators(3))
        cayley = cayley_gap(table, solver_options).epsilon
        rep = koopman_rep(projective_space_action(1))
        assert rep_gap(rep, solver_options).epsilon >= cayley - 1e-8
        assert lambda_gap(rep_to_tuple(rep), solver_options).epsilon >= cayley - 1e-8

    @pytest.mark.slow
    def test_projective_k2(self, solver_options):
        action = projective_space_action(2)
        rep = koopman_rep(action)
        assert rep[0].shape == (62, 62)
        assert rep_gap(rep, solver_options).epsilon > 0.0


class TestCommutants:
    """Numeric commutant dimension against pair-orbit counts."""

    def test_doubly_transitive(self):
        action = projective_space_action(1)
        assert perm_rep_commutant_dim(action) == orbit_count_on_pairs(action) == 2

    def test_trivial_action(self):
        action = GroupAction(set_size=3, generator_perms=((0, 1, 2),))
        assert perm_rep_commutant_dim(action) == orbit_count_on_pairs(action) == 9

    def test_intransitive_action(self):
        action = natural_action(enumerate_group([(1, 2, 0, 4, 3)]))
        assert perm_rep_commutant_dim(action) == orbit_count_on_pairs(action)


class TestSymmetricGroupFamily:
    """Standard representation of S_5 and its sign twist."""

    def test_permutation_sign(self):
        assert permutation_sign((1, 0, 2)) == -1
        assert permutation_sign((1, 2, 0)) == 1
        assert permutation_sign((0, 1, 2)) == 1

    def test_twist_is_inequivalent(self, s5, standard_rep):
        twisted = sign_twist(standard_rep, s5.generators)
        assert commutant_dim(twisted) == 1
        assert intertwiner_dim(standard_rep, twisted) == 0

    def test_direct_sum_gap_is_minimum(self, s5, standard_rep, solver_options):
        twisted = sign_twist(standard_rep, s5.generators)
        total = rep_gap(direct_sum_rep(standard_rep, twisted), solver_options).epsilon
        parts = [rep_gap(r, solver_options).epsilon for r in (standard_rep, twisted)]
        assert total == pytest.approx(min(parts), abs=1e-9)

    def test_gaps_dominate_cayley(self, s5, standard_rep, solver_options):
        cayley = cayley_gap(s5, solver_options).epsilon
        twisted = sign_twist(standard_rep, s5.generators)
        for rep in (standard_rep, twisted):
            assert rep_gap(rep, solver_options).epsilon >= cayley - 1e-8

    def test_pair_gap_controls_geometry(self, s5, standard_rep, solver_options):
        twisted = sign_twist(standard_rep, s5.generators)
        pair = [np.kron(a, b.conj()) for a, b in zip(standard_rep, twisted)]
        eps_star = rep_gap(pair, solver_options).epsilon
        report = family_geometry([standard_rep, twisted], eps_star)
        assert report.violations == []
        assert report.inner_products[0][1] <= 1.0 - eps_star + 1e-8

    def test_sum_tensor_gap_controls_geometry(self, s5, standard_rep, solver_options):
        twisted = sign_twist(standard_rep, s5.generators)
        total = direct_sum_rep(standard_rep, twisted)
        assert conjugate_tensor(total)[0].shape == (64, 64)
        eps_star = tensor_gap(total, solver_options).epsilon
        assert eps_star > 1e-3

        report = family_geometry([standard_rep, twisted], eps_star)
        assert report.violations == []
        assert report.inner_products[0][1] <= 1.0 - eps_star + 1e-8
        assert report.distances[0][1] >= np.sqrt(2 * eps_star) - 1e-8
        assert intertwiner_dim(standard_rep, twisted) == 0

    def test_product_lifts_are_inequivalent(self, standard_rep, solver_options):
        first = product_lift(standard_rep, 0, 2)
        second = product_lift(standard_rep, 1, 2)
        assert len(first) == 2 * len(standard_rep)
        assert intertwiner_dim(first, second) == 0
        assert rep_gap(first, solver_options).epsilon == pytest.approx(
            rep_gap(standard_rep, solver_options).epsilon / 2, abs=1e-9
        )

    def test_product_lift_factor_range(self, standard_rep):
        with pytest.raises(InvalidInputError):
            product_lift(standard_rep, 2, 2)

    def test_sign_twist_length_checked(self, standard_rep):
        with pytest.raises(ShapeMismatchError):
            sign_twist(standard_rep, [(1, 0)])

    def test_direct_sum_length_checked(self, standard_rep):
        with pytest.raises(ShapeMismatchError):
            direct_sum_rep(standard_rep, standard_rep[:1])
