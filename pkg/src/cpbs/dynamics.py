"""Lindblad (GKSL) propagation of the double-dot density matrix.

Density matrices are vectorised row-major (``rho.ravel()``), so that
``vec(A X B) = kron(A, B.T) @ vec(X)``.  Time is measured in hbar/J' and
reported through the dimensionless phase ``theta = |omega| * t``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.linalg import expm

from . import hilbert, rk
from .rk import IntegrationError

HBAR_UEV_NS = 0.6582119569  # hbar in micro-eV * ns

__all__ = [
    "HBAR_UEV_NS",
    "DrainRates",
    "DephasingConfig",
    "IntegrationError",
    "Trajectory",
    "liouvillian",
    "evolve",
    "evolve_2qb_dephasing",
    "dephasing_channels",
    "occupation",
]


@dataclass(frozen=True)
class DrainRates:
    """Tunnelling rates (units of J') into the spin-up lead of dot 1 and spin-down lead of dot 2."""

    Gamma1: float = 1e-4
    Gamma2: float = 1e-4

    def __post_init__(self):
        if self.Gamma1 < 0 or self.Gamma2 < 0:
            raise ValueError(f"drain rates must be non-negative, got {self}")

    def channels(self):
        return [
            (self.Gamma1, hilbert.annihilation_operator(1, "up")),
            (self.Gamma2, hilbert.annihilation_operator(2, "down")),
        ]


@dataclass(frozen=True)
class DephasingConfig:
    """Dephasing rate on the |01> and |10> two-qubit populations.

    ``unit`` is ``"Jp"`` (rate already in units of J') or ``"per_ns"``, in
    which case ``Jp_ueV`` fixes the energy scale: rate_Jp = rate * hbar / J'.
    """

    rate: float
    unit: str = "Jp"
    Jp_ueV: float | None = None

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError(f"dephasing rate must be non-negative, got {self.rate}")
        if self.unit not in ("Jp", "per_ns"):
            raise ValueError(f"unknown dephasing unit {self.unit!r}")
        if self.unit == "per_ns" and not (self.Jp_ueV and self.Jp_ueV > 0):
            raise ValueError("a rate in 1/ns needs a positive Jp_ueV")

    def rate_in_Jp(self) -> float:
        if self.unit == "Jp":
            return self.rate
        return self.rate * HBAR_UEV_NS / self.Jp_ueV


def dephasing_channels(deph: DephasingConfig):
    s1 = np.zeros((4, 4), dtype=complex)
    s1[1, 1] = 1
    s2 = np.zeros((4, 4), dtype=complex)
    s2[2, 2] = 1
    rate = deph.rate_in_Jp()
    return [(rate, s1), (rate, s2)]


@dataclass
class Trajectory:
    thetas: np.ndarray
    times: np.ndarray
    states: np.ndarray
    omega: float
    observables: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.thetas)

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.einsum("tii->ti", self.states))

    @property
    def traces(self) -> np.ndarray:
        return np.real(np.einsum("tii->t", self.states))

    def map(self, func) -> np.ndarray:
        """Apply ``func`` to every snapshot and stack the results."""
        return np.array([func(rho) for rho in self.states])


def liouvillian(H: np.ndarray, channels=()) -> np.ndarray:
    """Superoperator of d rho/dt = -i[H, rho] + sum_k r_k (L rho L^+ - {L^+ L, rho}/2)."""
    H = np.asarray(H, dtype=complex)
    d = H.shape[0]
    if H.shape != (d, d):
        raise ValueError(f"H must be square, got shape {H.shape}")
    if np.abs(H - H.conj().T).max() > 1e-12:
        raise ValueError("H must be Hermitian")
    eye = np.eye(d)
    gen = -1j * (np.kron(H, eye) - np.kron(eye, H.T))
    for rate, op in channels:
        if rate < 0:
            raise ValueError(f"negative rate {rate}")
        if rate == 0:
            continue
        op = np.asarray(op, dtype=complex)
        nn = op.conj().T @ op
        gen += rate * (
            np.kron(op, op.conj()) - 0.5 * np.kron(nn, eye) - 0.5 * np.kron(eye, nn.T)
        )
    return gen


def _validate_grid(thetas, omega):
    thetas = np.asarray(thetas, dtype=float)
    if thetas.ndim != 1 or thetas.size == 0:
        raise ValueError("thetas must be a non-empty 1-d grid")
    if thetas[0] != 0 or np.any(np.diff(thetas) < 0):
        raise ValueError("thetas must start at 0 and be non-decreasing")
    if not omega:
        raise ValueError("omega must be nonzero to convert theta to time")
    return thetas, thetas / abs(omega)


def _propagate_expm(gen, v0, times):
    out = np.empty((times.size, v0.size), dtype=complex)
    out[0] = v0
    cache = {}
    v = v0
    for i, dt in enumerate(np.diff(times), start=1):
        key = round(dt, 13)
        if key not in cache:
            cache[key] = expm(gen * dt)
        v = cache[key] @ v
        out[i] = v
    return out


def _propagate(H, channels, rho0, times, method, rtol, atol):
    if method == "expm":
        gen = liouvillian(H, channels)
        vs = _propagate_expm(gen, rho0.ravel(), times)
        return vs.reshape(times.size, *rho0.shape)
    if method == "rk":
        op = sparse.csr_matrix(liouvillian(H, channels))
        vs = rk.solve(lambda t, v: op @ v, rho0.ravel(), times, rtol=rtol, atol=atol)
        return vs.reshape(times.size, *rho0.shape)
    raise ValueError(f"unknown method {method!r}; use 'expm' or 'rk'")


def evolve(rho0, H, channels, thetas, omega, method="expm", rtol=1e-9, atol=1e-12):
    """Propagate ``rho0`` and return snapshots at the phases ``thetas``.

    ``omega`` sets the time axis, t = theta / |omega|.  ``method`` selects the
    dense exponential of the generator (``"expm"``) or adaptive Dormand-Prince
    stepping (``"rk"``).  An :class:`IntegrationError` raised by the stepper is
    re-raised with the failing theta.
    """
    thetas, times = _validate_grid(thetas, omega)
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.ndim != 2 or rho0.shape != np.shape(H):
        raise ValueError(f"rho0 shape {rho0.shape} does not match H {np.shape(H)}")
    channels = list(channels)
    try:
        states = _propagate(H, channels, rho0, times, method, rtol, atol)
    except IntegrationError as exc:
        theta = exc.t * abs(omega)
        raise IntegrationError(f"integration failed near theta={theta:.12g}", exc.t) from exc
    return Trajectory(thetas=thetas, times=times, states=states, omega=abs(omega))


def evolve_2qb_dephasing(rho0, H2qb, deph: DephasingConfig, thetas, omega, method="expm"):
    """Two-qubit evolution with dephasing on the |01> and |10> projectors."""
    return evolve(rho0, H2qb, dephasing_channels(deph), thetas, omega, method=method)


def occupation(rho: np.ndarray, index: int) -> float:
    """Population <Phi_index| rho |Phi_index>."""
    return float(np.real(np.asarray(rho)[index, index]))
