"""Tests for packing/greedy.py"""

import math

import pytest
import scipy.linalg

from cli.output import render
from packing.assembly import certify_family
from packing.greedy import admission_sweep, gap_certificate, greedy_pack, reconstruct_kept
from packing.models import PackingResult, ViolationKind
from packing.sampler import derive_seed, random_tuple
from spectral.exceptions import HeterogeneousFamilyError, InvalidInputError
from spectral.gap import lambda_gap
from spectral.geometry import packing_bound_log
from spectral.linalg import dense_superoperator, traceless_basis


def _dense_epsilon(u):
    full = dense_superoperator(u.matrices, u.matrices)
    basis = traceless_basis(u.dim)
    restricted = basis.conj().T @ (0.5 * (full + full.conj().T)) @ basis
    return 1.0 - scipy.linalg.eigvalsh(restricted)[-1] / u.n


def _dense_pair_norm(u, v):
    return scipy.linalg.svdvals(dense_superoperator(u.matrices, v.matrices))[0]


@pytest.fixture(scope="module")
def desk_reference():
    """Kept indices of the (5, 2, 0.05, 200, 42) stream, from explicit dense matrices."""
    n, eps, tol = 5, 0.05, 1e-9
    kept = []
    for i in range(200):
        u = random_tuple(n, 2, derive_seed(42, i))
        if _dense_epsilon(u) < eps - tol:
            continue
        if all(_dense_pair_norm(u, v) <= n * (1 - eps) + tol for _, v in kept):
            kept.append((i, u))
    return [i for i, _ in kept]


class TestGapCertificate:
    def test_symmetric_certificate_is_a_lower_bound(self, dense_opts):
        u = random_tuple(4, 3, 21, symmetric=True)
        assert gap_certificate(u, dense_opts) <= lambda_gap(u, dense_opts).epsilon + 1e-9

    def test_plain_tuple_uses_gap(self, dense_opts):
        u = random_tuple(3, 3, 22)
        assert gap_certificate(u, dense_opts) == pytest.approx(lambda_gap(u, dense_opts).epsilon)

    def test_pauli(self, pauli, dense_opts):
        assert gap_certificate(pauli, dense_opts) == pytest.approx(1.0, abs=1e-12)


class TestGreedyPack:
    """Greedy admission over a seeded candidate stream."""

    def test_no_candidates(self, solver_options):
        result = greedy_pack(3, 2, 0.1, 0, seed=1, opts=solver_options)
        assert result.count == 0
        assert result.log_count is None
        assert result.within_bound
        assert result.pair_certificates == []

    def test_duplicate_rejected(self, pauli, solver_options):
        result = greedy_pack(4, 2, 0.5, 0, seed=0, opts=solver_options, candidates=[pauli, pauli])
        assert result.kept_indices == [0]
        assert result.kept_seeds == [None]
        assert result.seed is None
        assert result.candidates_examined == 2

    def test_marginal_gap_is_listed(self, pauli, solver_options):
        eps = 1.0 - 1e-12
        result = greedy_pack(4, 2, eps, 0, seed=0, opts=solver_options, candidates=[pauli])
        assert result.count == 1
        assert [m.kind for m in result.marginal] == [ViolationKind.GAP]
        assert result.marginal[0].admitted

    def test_kept_family_certifies(self, dense_opts):
        result = greedy_pack(4, 2, 0.1, 8, seed=3, opts=dense_opts)
        family = reconstruct_kept(result)
        assert len(family) == result.count
        if result.count:
            report = certify_family(family, 0.1, dense_opts)
            assert report.ok
        for row in result.pair_certificates:
            for value in row:
                assert value is None or value <= 4 * 0.9 + dense_opts.convergence_tol
        assert all(g >= 0.1 - dense_opts.convergence_tol for g in result.gap_certificates)

    def test_deterministic(self, solver_options):
        a = greedy_pack(3, 2, 0.2, 6, seed=11, opts=solver_options)
        b = greedy_pack(3, 2, 0.2, 6, seed=11, opts=solver_options)
        assert a.to_dict() == b.to_dict()

    def test_threads_do_not_change_result(self, solver_options):
        serial = greedy_pack(3, 2, 0.2, 6, seed=12, opts=solver_options, threads=1)
        pooled = greedy_pack(3, 2, 0.2, 6, seed=12, opts=solver_options, threads=3)
        assert serial.kept_indices == pooled.kept_indices
        assert serial.gap_certificates == pytest.approx(pooled.gap_certificates)

    def test_kept_seeds_follow_stream(self, solver_options):
        result = greedy_pack(3, 2, 0.2, 5, seed=13, opts=solver_options)
        assert result.kept_seeds == [derive_seed(13, i) for i in result.kept_indices]

    def test_reconstruct_from_seeds(self, solver_options):
        result = greedy_pack(3, 2, 0.2, 4, seed=14, opts=solver_options)
        stored = reconstruct_kept(result)
        restored = reconstruct_kept(PackingResult.from_dict(result.to_dict()))
        assert len(stored) == len(restored)
        for u, v in zip(stored, restored):
            for a, b in zip(u.matrices, v.matrices):
                assert (a == b).all()

    def test_reconstruct_needs_seeds_or_tuples(self, pauli, solver_options):
        result = greedy_pack(4, 2, 0.5, 0, seed=0, opts=solver_options, candidates=[pauli])
        result.tuples = None
        with pytest.raises(InvalidInputError):
            reconstruct_kept(result)

    def test_symmetric_candidates(self, solver_options):
        result = greedy_pack(4, 2, 0.1, 4, seed=15, opts=solver_options, symmetric=True)
        assert result.symmetric
        assert all(u.symmetric for u in reconstruct_kept(result))

    def test_symmetric_needs_even_n(self, solver_options):
        with pytest.raises(InvalidInputError):
            greedy_pack(3, 2, 0.1, 4, seed=0, opts=solver_options, symmetric=True)

    def test_heterogeneous_candidates(self, pauli, solver_options):
        with pytest.raises(HeterogeneousFamilyError):
            greedy_pack(3, 2, 0.1, 0, seed=0, opts=solver_options, candidates=[pauli])

    @pytest.mark.parametrize(
        "n,dim,eps,candidates",
        [(0, 2, 0.1, 1), (2, 1, 0.1, 1), (2, 2, 0.0, 1), (2, 2, 1.0, 1), (2, 2, 0.1, -1)],
    )
    def test_parameter_ranges(self, n, dim, eps, candidates, solver_options):
        with pytest.raises(InvalidInputError):
            greedy_pack(n, dim, eps, candidates, seed=0, opts=solver_options)

    def test_bound_is_reported(self, solver_options):
        result = greedy_pack(3, 2, 0.2, 3, seed=16, opts=solver_options)
        assert result.within_bound
        assert result.log_volume_bound > 0

    @pytest.mark.slow
    def test_desk_scale_run(self, solver_options, desk_reference):
        result = greedy_pack(5, 2, 0.05, 200, seed=42, opts=solver_options)
        assert result.kept_indices == desk_reference
        assert result.within_bound
        assert math.log(result.count) <= packing_bound_log(5, 2, 0.05)
        report = certify_family(reconstruct_kept(result), 0.05, solver_options)
        assert report.ok

    @pytest.mark.slow
    def test_desk_scale_run_renders_identically(self, solver_options):
        first = greedy_pack(5, 2, 0.05, 200, seed=42, opts=solver_options)
        second = greedy_pack(5, 2, 0.05, 200, seed=42, opts=solver_options)
        assert render(first.to_dict(), "json") == render(second.to_dict(), "json")


class TestAdmissionSweep:
    def test_rows(self, solver_options):
        rows = admission_sweep([3], [2], [0.1, 0.5], 3, seed=1, opts=solver_options)
        assert [row["eps"] for row in rows] == [0.1, 0.5]
        for row in rows:
            assert row["examined"] == 3
            assert 0.0 <= row["admission_rate"] <= 1.0

    def test_empty_stream_rate(self, solver_options):
        rows = admission_sweep([3], [2], [0.1], 0, seed=1, opts=solver_options)
        assert rows[0]["admission_rate"] is None
