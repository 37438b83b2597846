import os
import sys

import pytest

# Set deterministic environment BEFORE any imports that use Settings
os.environ.setdefault("QEXP_SEED", "0")
os.environ.setdefault("QEXP_THREADS", "1")
os.environ.setdefault("QEXP_LOG_FILE", os.devnull)

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import numpy as np

from spectral.models import SolveMethod, SolverOptions, UnitaryTuple
from packing.sampler import random_tuple


PAULI = [
    np.eye(2),
    np.array([[0, 1], [1, 0]]),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]]),
]


@pytest.fixture
def pauli():
    return UnitaryTuple.from_matrices(PAULI)


@pytest.fixture
def solver_options():
    return SolverOptions()


@pytest.fixture
def dense_opts():
    return SolverOptions(method=SolveMethod.dense)


@pytest.fixture
def iterative_opts():
    return SolverOptions(method=SolveMethod.iterative, convergence_tol=1e-10)


@pytest.fixture
def haar_pair_factory():
    """Build two independent Haar tuples of a common (n, dim) from one seed."""

    def _create(n=3, dim=2, seed=0, symmetric=False):
        u = random_tuple(n, dim, 2 * seed, symmetric=symmetric)
        v = random_tuple(n, dim, 2 * seed + 1, symmetric=symmetric)
        return u, v

    return _create


@pytest.fixture
def tuple_file_factory(tmp_path):
    """Write a tuple to a JSON file and return its path."""
    from spectral.codec import save_tuple

    counter = {"i": 0}

    def _write(u):
        counter["i"] += 1
        path = tmp_path / f"tuple_{counter['i']}.json"
        save_tuple(path, u)
        return str(path)

    return _write
