import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpbs import rk


@settings(max_examples=20, deadline=None)
@given(st.floats(-3, 3), st.floats(-20, 20))
def test_complex_exponential(re, im):
    lam = re + 1j * im
    t = np.linspace(0, 1, 11)
    y = rk.solve(lambda t, y: lam * y, np.array([1.0 + 0j]), t, rtol=1e-10, atol=1e-13)
    np.testing.assert_allclose(y[:, 0], np.exp(lam * t), rtol=1e-7, atol=1e-10)


def test_hits_output_times_and_matrix_shape():
    A = np.array([[0, 1], [-1, 0]], dtype=complex)
    t = np.array([0.0, 0.3, 0.3, np.pi])
    y = rk.solve(lambda t, y: A @ y, np.array([1.0, 0.0]), t)
    np.testing.assert_allclose(y[1], [np.cos(0.3), -np.sin(0.3)], atol=1e-8)
    np.testing.assert_allclose(y[1], y[2])
    np.testing.assert_allclose(y[-1], [-1, 0], atol=1e-8)


def test_time_dependent_rhs():
    t = np.linspace(0, 2, 5)
    y = rk.solve(lambda t, y: np.array([2 * t + 0j]), np.array([0.0]), t)
    np.testing.assert_allclose(y[:, 0].real, t**2, atol=1e-10)


def test_tolerance_controls_error():
    t = np.linspace(0, 20, 3)
    f = lambda t, y: 1j * y
    loose = rk.solve(f, np.array([1.0]), t, rtol=1e-4, atol=1e-7)
    tight = rk.solve(f, np.array([1.0]), t, rtol=1e-10, atol=1e-13)
    exact = np.exp(1j * t)
    assert np.abs(tight[:, 0] - exact).max() < np.abs(loose[:, 0] - exact).max()
    assert np.abs(tight[:, 0] - exact).max() < 1e-7


def test_step_underflow_raises():
    # finite-time blow-up of y' = y^2 at t = 1
    with pytest.raises(rk.IntegrationError) as info:
        rk.solve(lambda t, y: y**2, np.array([1.0]), [0.0, 2.0])
    assert 0.9 < info.value.t <= 1.0


def test_step_budget():
    with pytest.raises(rk.IntegrationError, match="budget"):
        rk.solve(lambda t, y: 1j * y, np.array([1.0]), [0.0, 100.0], max_steps=5)


def test_rejects_decreasing_times():
    with pytest.raises(ValueError):
        rk.solve(lambda t, y: y, np.array([1.0]), [0.0, 1.0, 0.5])
