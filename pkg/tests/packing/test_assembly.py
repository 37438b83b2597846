"""Tests for packing/assembly.py"""

import numpy as np
import pytest

from packing.assembly import assemble_direct_sum, certify_family
from packing.greedy import greedy_pack, reconstruct_kept
from packing.models import ViolationKind
from spectral.exceptions import HeterogeneousFamilyError
from spectral.gap import commutant_dim, intertwiner_dim, lambda_gap
from spectral.models import UnitaryTuple


class TestAssembleDirectSum:
    def test_blocks(self, haar_pair_factory):
        u, v = haar_pair_factory(n=3, dim=2, seed=1)
        s = assemble_direct_sum([u, v])
        assert (s.n, s.dim) == (3, 4)
        for j in range(3):
            assert np.allclose(s.matrices[j][:2, :2], u.matrices[j])
            assert np.allclose(s.matrices[j][2:, 2:], v.matrices[j])
            assert np.allclose(s.matrices[j][:2, 2:], 0.0)

    def test_trace_is_sum_of_traces(self, haar_pair_factory):
        u, v = haar_pair_factory(n=2, dim=3, seed=2)
        s = assemble_direct_sum([u, v])
        for j in range(2):
            expected = np.trace(u.matrices[j]) + np.trace(v.matrices[j])
            assert np.trace(s.matrices[j]) == pytest.approx(expected)

    def test_single_member(self, pauli):
        assert assemble_direct_sum([pauli]) is pauli

    def test_symmetric_family_stays_symmetric(self, haar_pair_factory):
        u, v = haar_pair_factory(n=4, dim=2, seed=3, symmetric=True)
        assert assemble_direct_sum([u, v]).symmetric

    def test_commutant_counts_blocks(self, haar_pair_factory):
        u, v = haar_pair_factory(n=3, dim=2, seed=4)
        assert commutant_dim(assemble_direct_sum([u, v])) == 2
        assert commutant_dim(assemble_direct_sum([u, u])) == 4

    @pytest.mark.parametrize("seed", range(50))
    def test_direct_sum_has_no_gap(self, seed, haar_pair_factory, dense_opts):
        u, v = haar_pair_factory(n=4, dim=2 + seed % 2, seed=100 + seed)
        s = assemble_direct_sum([u, v])
        assert lambda_gap(s, dense_opts).epsilon <= 1e-8

    def test_assembled_packing_has_no_gap(self, dense_opts):
        result = greedy_pack(4, 2, 0.01, 12, seed=5, opts=dense_opts)
        family = reconstruct_kept(result)
        assert len(family) >= 2
        assert certify_family(family, 0.01, dense_opts).ok
        assembled = assemble_direct_sum(family)
        assert assembled.dim == 2 * len(family)
        assert lambda_gap(assembled, dense_opts).epsilon <= 1e-8

    def test_empty(self):
        with pytest.raises(HeterogeneousFamilyError):
            assemble_direct_sum([])

    def test_mixed_shapes(self, haar_pair_factory):
        u, _ = haar_pair_factory(n=3, dim=2, seed=5)
        w, _ = haar_pair_factory(n=3, dim=3, seed=5)
        with pytest.raises(HeterogeneousFamilyError):
            assemble_direct_sum([u, w])


class TestCertifyFamily:
    """Independent re-check of members and pairs."""

    @pytest.mark.parametrize("seed", range(50))
    def test_independent_pairs_are_inequivalent(self, seed, haar_pair_factory):
        u, v = haar_pair_factory(n=2, dim=2, seed=100 + seed)
        assert intertwiner_dim(u, v) == 0

    def test_duplicate_member(self, haar_pair_factory, solver_options):
        u, _ = haar_pair_factory(n=3, dim=2, seed=6)
        report = certify_family([u, u], 0.1, solver_options)
        assert not report.ok
        kinds = {v.kind for v in report.violations}
        assert {ViolationKind.SEPARATION, ViolationKind.EQUIVALENCE} <= kinds
        assert ViolationKind.IRREDUCIBILITY not in kinds
        assert report.intertwiner_dims[0][1] == 1
        assert report.pair_certificates[0][1] == pytest.approx(3.0)

    def test_reducible_member(self, solver_options):
        identity = UnitaryTuple.from_matrices([np.eye(2), np.eye(2)])
        report = certify_family([identity], 0.1, solver_options)
        assert report.commutant_dims == [4]
        assert {v.kind for v in report.violations} == {
            ViolationKind.IRREDUCIBILITY,
            ViolationKind.GAP,
        }
        assert len(report.violations_of(ViolationKind.GAP)) == 1

    def test_pauli_is_clean(self, pauli, solver_options):
        report = certify_family([pauli], 0.5, solver_options)
        assert report.ok
        assert report.gap_certificates[0] == pytest.approx(1.0, abs=1e-8)
        assert report.pair_certificates == [[None]]

    def test_dimension_one_has_no_gap(self, solver_options):
        u = UnitaryTuple.from_matrices([np.array([[1j]]), np.array([[-1.0]])])
        report = certify_family([u], 0.1, solver_options)
        assert report.gap_certificates == [None]
        assert report.commutant_dims == [1]

    def test_report_dict(self, pauli, solver_options):
        data = certify_family([pauli], 0.5, solver_options).to_dict()
        assert data["ok"] is True
        assert data["options"]["method"] == "auto"
