import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import sqrtm

from cpbs import hilbert, model, quantifiers as q
from cpbs.hilbert import partial_trace

from conftest import random_density_matrix, random_pure_state, random_unitary, seeds


def ket2(*amps):
    return hilbert.pure_state(np.array(amps, dtype=complex))


@pytest.fixture
def mixture():
    """(|0110><0110| + |1001><1001|) / 2."""
    rho = np.zeros((16, 16), dtype=complex)
    rho[6, 6] = rho[9, 9] = 0.5
    return rho


@pytest.fixture
def basis6():
    return hilbert.pure_state(hilbert.basis_ket(6))


def test_svne_examples(basis6, bell):
    assert q.svne(partial_trace(basis6, 1)) == 0
    assert q.svne(np.diag([0, 0.5, 0.5, 0])) == pytest.approx(1)
    assert q.svne(np.eye(4) / 4) == pytest.approx(2)
    assert q.svne(partial_trace(bell, 1)) == pytest.approx(1)


def test_svne_shape_checked():
    with pytest.raises(ValueError):
        q.svne(np.eye(16) / 16)


def test_qmi_examples(basis6, bell, mixture):
    assert q.qmi(basis6) == pytest.approx(0, abs=1e-12)
    assert q.qmi(bell) == pytest.approx(2)
    assert q.qmi(bell) / 2 == pytest.approx(1)
    # S1 = S2 = 1 bit, S12 = 1 bit
    assert q.qmi(mixture) == pytest.approx(1)


def test_negativity_examples(basis6, bell, mixture):
    assert q.negativity(basis6) == pytest.approx(0, abs=1e-12)
    assert q.negativity(bell) == pytest.approx(0.5)
    assert 2 * q.negativity(bell) == pytest.approx(1)
    assert q.negativity(mixture) == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize(
    "state, expected",
    [("basis", (0, 0, 0)), ("bell", (1, 1, 1)), ("mixed", (4, 2, 2))],
)
def test_tomographic_entropies(state, expected, basis6, bell):
    rho = {"basis": basis6, "bell": bell, "mixed": np.eye(16) / 16}[state]
    np.testing.assert_allclose(q.tomographic_entropies(rho), expected, atol=1e-12)


def test_tei_examples(basis6, bell):
    assert q.tei(bell) == pytest.approx(1)
    assert q.tei(basis6) == pytest.approx(0)
    assert q.tei(np.eye(16) / 16) == pytest.approx(0, abs=1e-12)


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(0, 15))
def test_tei_zero_for_basis_state_of_rotated_basis(seed, k):
    u1, u2 = random_unitary(seed), random_unitary(seed + 1)
    u = np.kron(u1, u2)
    rho = u @ hilbert.pure_state(hilbert.basis_ket(k)) @ u.conj().T
    assert q.tei(rho, basis=(u1, u2)) == pytest.approx(0, abs=1e-9)
    assert q.tei(rho, basis=(np.eye(4), np.eye(4))) == pytest.approx(q.tei(rho), abs=1e-12)


def test_tei_rejects_non_unitary_basis(bell):
    with pytest.raises(ValueError):
        q.tei(bell, basis=(np.ones((4, 4)), np.eye(4)))


def test_concurrence_examples():
    assert q.concurrence(ket2(0, 1, -1j, 0)) == pytest.approx(1)
    assert q.concurrence(ket2(0, 1, 0, 0)) == pytest.approx(0, abs=1e-12)
    assert q.concurrence(np.diag([0, 0.5, 0.5, 0])) == pytest.approx(0, abs=1e-12)


def concurrence_via_R(rho):
    """Eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho))."""
    yy = np.kron(hilbert.SIGMA_Y, hilbert.SIGMA_Y)
    root = sqrtm(rho)
    R = sqrtm(root @ yy @ rho.conj() @ yy @ root)
    lam = np.sort(np.linalg.eigvalsh((R + R.conj().T) / 2))[::-1]
    return max(0.0, lam[0] - lam[1:].sum())


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 4))
def test_concurrence_matches_R_operator(seed, rank):
    rho = random_density_matrix(seed, dim=4, rank=rank)
    c = q.concurrence(rho)
    assert 0 <= c <= 1
    assert c == pytest.approx(concurrence_via_R(rho), abs=1e-6)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0, max_value=np.pi))
def test_concurrence_of_analytic_state(theta):
    ket = np.zeros(4, dtype=complex)
    ket[[1, 2]] = model.analytic_state(theta)
    assert q.concurrence(hilbert.pure_state(ket)) == pytest.approx(abs(np.sin(2 * theta)), abs=1e-6)


def test_concurrence_full_projects(bell):
    c, weight = q.concurrence_full(bell)
    assert c == pytest.approx(1) and weight == pytest.approx(1)
    rho = 0.5 * bell + 0.5 * hilbert.pure_state(hilbert.basis_ket(15))
    c, weight = q.concurrence_full(rho)
    assert c == pytest.approx(1) and weight == pytest.approx(0.5)


def test_covariance_examples(basis6):
    for i in range(16):
        rho = hilbert.pure_state(hilbert.basis_ket(i))
        assert q.covariances(rho) == (0, 0, 0, 0)
    psi = model.analytic_state_full(np.pi / 4)
    assert q.covariance(hilbert.pure_state(psi), "up", "down") == pytest.approx(1)


@settings(max_examples=40)
@given(st.floats(min_value=-10, max_value=10))
def test_covariance_of_analytic_state(theta):
    rho = hilbert.pure_state(model.analytic_state_full(theta))
    expected = 4 * np.cos(theta) ** 2 * np.sin(theta) ** 2
    assert q.covariance(rho, "up", "down") == pytest.approx(expected, abs=1e-12)
    assert q.covariance_analytic(theta) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "theta, expected", [(0, 0), (np.pi / 4, 1), (np.pi / 8, 0.5)]
)
def test_covariance_analytic(theta, expected):
    assert q.covariance_analytic(theta) == pytest.approx(expected, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(seeds, seeds)
def test_product_state_has_zero_covariance(s1, s2):
    rho = np.kron(random_density_matrix(s1, 4), random_density_matrix(s2, 4))
    for value in q.covariances(rho):
        assert value <= 1e-10


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_svne_unitary_invariance(seed):
    rho = random_density_matrix(seed, dim=4)
    u = random_unitary(seed + 7)
    assert q.svne(u @ rho @ u.conj().T) == pytest.approx(q.svne(rho), abs=1e-9)
    assert 0 <= q.svne(rho) <= 2 + 1e-12


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(1, 16))
def test_negativity_symmetric(seed, rank):
    rho = random_density_matrix(seed, rank=rank)
    assert abs(q.negativity(rho, 1) - q.negativity(rho, 2)) <= 1e-10
    assert q.negativity(rho) >= 0


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_svne_equal_on_pure_states(seed):
    rho = random_pure_state(seed)
    assert abs(q.svne(partial_trace(rho, 1)) - q.svne(partial_trace(rho, 2))) <= 1e-9
    # pure global state: qmi = 2 S(rho_1)
    assert q.qmi(rho) == pytest.approx(2 * q.svne(partial_trace(rho, 1)), abs=1e-9)


def test_indicator_set(bell):
    ind = q.indicators(bell)
    assert ind.qmi_scaled == pytest.approx(1)
    assert ind.neg_scaled == pytest.approx(1)
    assert ind.svne == pytest.approx(1)
    assert ind.tei == pytest.approx(1)
    # each pair is perfectly correlated or anti-correlated
    np.testing.assert_allclose(ind.covariances, [1, 1, 1, 1], atol=1e-12)
