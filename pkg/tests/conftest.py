import numpy as np
import pytest
from hypothesis import strategies as st

from cpbs import hilbert, model

ACCEPTANCE_LINES = []


def random_density_matrix(seed, dim=16, rank=None):
    rng = np.random.default_rng(seed)
    rank = rank or dim
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_pure_state(seed, dim=16):
    rng = np.random.default_rng(seed)
    ket = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return hilbert.pure_state(ket)


def random_unitary(seed, dim=4):
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture(scope="session")
def params():
    return model.ModelParams.benchmark()


@pytest.fixture(scope="session")
def H(params):
    return model.build_hamiltonian(params)


@pytest.fixture(scope="session")
def bell():
    """(|0110> - i|1001>)/sqrt(2)."""
    ket = np.zeros(16, dtype=complex)
    ket[6] = 1
    ket[9] = -1j
    return hilbert.pure_state(ket)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
