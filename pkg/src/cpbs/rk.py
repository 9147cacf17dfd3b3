"""Adaptive Dormand-Prince 5(4) integrator for complex-valued ODE systems."""
from __future__ import annotations

import numpy as np

# Dormand & Prince (1980) tableau; the 7th stage is evaluated at the accepted
# 5th-order point and reused as the first stage of the next step (FSAL).
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    np.array(row)
    for row in (
        [],
        [1 / 5],
        [3 / 40, 9 / 40],
        [44 / 45, -56 / 15, 32 / 9],
        [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
        [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
        [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
    )
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array(
    [5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40]
)
_E = _B5 - _B4

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0


class IntegrationError(RuntimeError):
    def __init__(self, message: str, t: float):
        super().__init__(f"{message} at t={t:.12g}")
        self.t = t


def _error_norm(err, y_old, y_new, rtol, atol):
    scale = atol + rtol * np.maximum(np.abs(y_old), np.abs(y_new))
    return float(np.sqrt(np.mean(np.abs(err / scale) ** 2)))


def _initial_step(f, t0, y0, f0, rtol, atol):
    # Hairer, Norsett & Wanner, section II.4
    scale = atol + rtol * np.abs(y0)
    d0 = np.sqrt(np.mean(np.abs(y0 / scale) ** 2))
    d1 = np.sqrt(np.mean(np.abs(f0 / scale) ** 2))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    f1 = f(t0 + h0, y0 + h0 * f0)
    d2 = np.sqrt(np.mean(np.abs((f1 - f0) / scale) ** 2)) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1 / 5)
    return min(100 * h0, h1)


def solve(f, y0, t_out, rtol=1e-9, atol=1e-12, max_steps=10_000_000, h_min=1e-14):
    """Integrate ``y' = f(t, y)`` and return the solution at each time in ``t_out``.

    ``t_out`` must be non-decreasing and start at the initial time.  Steps are
    shortened to land exactly on every output time.  Raises
    :class:`IntegrationError` if the step size underflows or the step budget
    runs out.  ``atol`` must be positive since populations start at zero.
    """
    t_out = np.asarray(t_out, dtype=float)
    if t_out.ndim != 1 or t_out.size == 0:
        raise ValueError("t_out must be a non-empty 1-d sequence")
    if np.any(np.diff(t_out) < 0):
        raise ValueError("t_out must be non-decreasing")
    if not (atol > 0 and rtol >= 0):
        raise ValueError(f"need atol > 0 and rtol >= 0, got atol={atol}, rtol={rtol}")

    y = np.array(y0, dtype=complex)
    t = float(t_out[0])
    out = np.empty((t_out.size,) + y.shape, dtype=complex)
    out[0] = y
    k = np.empty((7, y.size), dtype=complex)
    k[0] = f(t, y).ravel()
    h = _initial_step(f, t, y, k[0].reshape(y.shape), rtol, atol)
    flat = y.ravel()
    steps = 0

    for i in range(1, t_out.size):
        t_target = float(t_out[i])
        while t < t_target:
            if steps >= max_steps:
                raise IntegrationError("step budget exhausted", t)
            span = t_target - t
            last = h >= span
            step = span if last else h
            if step < h_min * max(1.0, abs(t)) and not last:
                raise IntegrationError("step size underflow", t)

            for s in range(1, 7):
                ys = flat + step * (_A[s] @ k[:s])
                k[s] = f(t + _C[s] * step, ys.reshape(y.shape)).ravel()
            y_new = flat + step * (_B5 @ k)
            err = step * (_E @ k)
            err_norm = _error_norm(err, flat, y_new, rtol, atol)
            steps += 1

            if not np.isfinite(err_norm):
                raise IntegrationError("non-finite solution", t)
            if err_norm <= 1.0:
                t = t_target if last else t + step
                flat = y_new
                k[0] = k[6]
                factor = MAX_FACTOR if err_norm == 0 else min(
                    MAX_FACTOR, SAFETY * err_norm ** (-1 / 5)
                )
                # a step clipped to hit an output time says little about the next one
                if not last or step >= h:
                    h = step * factor
            else:
                h = step * max(MIN_FACTOR, SAFETY * err_norm ** (-1 / 5))
                if h < h_min * max(1.0, abs(t)):
                    raise IntegrationError("step size underflow", t)
        out[i] = flat.reshape(y.shape)
    return out
