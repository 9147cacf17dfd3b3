"""Double-dot Hamiltonian and its perturbative two-level / two-qubit reductions.

Energies are measured in units of the inter-dot Coulomb repulsion J' and
hbar = 1 throughout.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import hilbert
from .hilbert import SIGMA_MINUS, SIGMA_PLUS, SIGMA_X, SIGMA_Y, ID2

# 16-level indices of the two-qubit basis {|00>, |01>, |10>, |11>}
# |00> = |0101>, |01> = |0110>, |10> = |1001>, |11> = |1010>
TWO_QUBIT_INDICES = (5, 6, 9, 10)


class DegenerateParameterError(ValueError):
    """A perturbative denominator vanishes for the requested parameters."""


@dataclass(frozen=True)
class ModelParams:
    delta1: float = 0.5
    delta2: float = 0.5
    J: float = 4.0
    Jp: float = 1.0
    Delta: float = 0.05
    gamma: float = 0.005

    def __post_init__(self):
        for name, value in vars(self).items():
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")

    @classmethod
    def benchmark(cls) -> "ModelParams":
        return cls()


@dataclass(frozen=True)
class EffectiveModel:
    Omega: float
    eps0: float
    xi: float
    delta: float


def _check_denominators(p: ModelParams) -> None:
    if p.Jp == 0:
        raise DegenerateParameterError("Jp must be nonzero")
    if p.J == p.Jp:
        raise DegenerateParameterError("J == Jp makes the cotunneling denominator vanish")
    if 2 * p.J + 3 * p.Jp == 0:
        raise DegenerateParameterError("2J + 3Jp must be nonzero")


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Full 16x16 Hamiltonian: Zeeman + Coulomb + crossed Andreev + cotunneling."""
    d = {m: hilbert.annihilation_operator(*m) for m in hilbert.MODES}
    dag = {m: op.conj().T for m, op in d.items()}
    n = {m: dag[m] @ d[m] for m in hilbert.MODES}
    up1, dn1, up2, dn2 = hilbert.MODES

    zeeman = p.delta1 / 2 * (n[up1] - n[dn1]) + p.delta2 / 2 * (n[up2] - n[dn2])
    coulomb = p.J * (n[up1] @ n[dn1] + n[up2] @ n[dn2])
    coulomb = coulomb + p.Jp * (n[up1] + n[dn1]) @ (n[up2] + n[dn2])
    car = p.Delta * (dag[up1] @ dag[dn2] - dag[dn1] @ dag[up2])
    cotunnel = p.gamma * (dag[up1] @ d[up2] + dag[dn1] @ d[dn2])

    H = zeeman + coulomb + car + car.conj().T + cotunnel + cotunnel.conj().T
    return (H + H.conj().T) / 2


def diagonal_energies(p: ModelParams) -> np.ndarray:
    """Closed-form energies of every basis state when Delta = gamma = 0."""
    energies = np.empty(hilbert.DIM)
    for i in range(hilbert.DIM):
        o = hilbert.occupation(i)
        energies[i] = (
            p.delta1 / 2 * (o.n1up - o.n1dn)
            + p.delta2 / 2 * (o.n2up - o.n2dn)
            + p.J * (o.n1up * o.n1dn + o.n2up * o.n2dn)
            + p.Jp * (o.n1up + o.n1dn) * (o.n2up + o.n2dn)
        )
    return energies


def effective_coupling(p: ModelParams) -> float:
    """Second-order coupling between |0110> and |1001>."""
    _check_denominators(p)
    return (
        -p.Delta**2 * (1 / p.Jp - 1 / (2 * p.J + 3 * p.Jp))
        - 2 * p.gamma**2 / (p.Jp - p.J)
    )


def effective_onsite(p: ModelParams) -> float:
    """Second-order diagonal energy of |0110> (and of |1001>)."""
    _check_denominators(p)
    return (
        p.Jp
        + 2 * p.gamma**2 / (p.Jp - p.J)
        + p.Delta**2 / p.Jp
        - p.Delta**2 / (2 * p.J + 3 * p.Jp)
    )


def effective_model(p: ModelParams) -> EffectiveModel:
    eps0 = effective_onsite(p)
    return EffectiveModel(
        Omega=effective_coupling(p),
        eps0=eps0,
        xi=eps0 - p.Jp,
        delta=p.delta1 / 2 + p.delta2 / 2,
    )


def build_2qb_hamiltonian(p: ModelParams, simplified: bool = False) -> np.ndarray:
    """Two-qubit effective Hamiltonian in the basis {|00>, |01>, |10>, |11>}.

    The energy origin is shifted by (xi + Jp).  With ``simplified=True`` only
    the exchange part Omega/2 (XX + YY) is kept, which is exact for dynamics
    confined to {|01>, |10>}.
    """
    eff = effective_model(p)
    H = np.zeros((4, 4), dtype=complex)
    H[1, 2] = H[2, 1] = eff.Omega
    if not simplified:
        H[0, 0] = eff.delta - eff.xi
        H[3, 3] = -eff.delta - eff.xi
    return H


def pauli_2qb_hamiltonian(p: ModelParams) -> np.ndarray:
    """The same operator assembled from Pauli and ladder products."""
    eff = effective_model(p)
    Z = np.diag([1, -1]).astype(complex)
    exchange = eff.Omega / 2 * (np.kron(SIGMA_X, SIGMA_X) + np.kron(SIGMA_Y, SIGMA_Y))
    contact = -eff.xi / 2 * (np.kron(Z, Z) + np.kron(ID2, ID2))
    zeeman = eff.delta * (
        np.kron(SIGMA_PLUS @ SIGMA_MINUS, ID2) - np.kron(ID2, SIGMA_MINUS @ SIGMA_PLUS)
    )
    return exchange + contact + zeeman


def analytic_state(theta: float) -> np.ndarray:
    """Amplitudes on (|0110>, |1001>) of the closed effective evolution at phase theta."""
    return np.array([np.cos(theta), -1j * np.sin(theta)])


def analytic_state_full(theta: float) -> np.ndarray:
    """:func:`analytic_state` embedded in the 16-level basis."""
    ket = np.zeros(hilbert.DIM, dtype=complex)
    ket[[6, 9]] = analytic_state(theta)
    return ket


def embed_2qb(rho2: np.ndarray) -> np.ndarray:
    """Place a two-qubit density matrix on span{|0101>, |0110>, |1001>, |1010>}."""
    rho2 = np.asarray(rho2)
    if rho2.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho2.shape}")
    rho = np.zeros((hilbert.DIM, hilbert.DIM), dtype=complex)
    idx = np.array(TWO_QUBIT_INDICES)
    rho[np.ix_(idx, idx)] = rho2
    return rho


def project_2qb(rho: np.ndarray) -> tuple[np.ndarray, float]:
    """Restrict a 16-level state to the two-qubit subspace and renormalise.

    Returns the 4x4 block and the population weight it carried.
    """
    idx = np.array(TWO_QUBIT_INDICES)
    block = np.asarray(rho)[np.ix_(idx, idx)]
    weight = float(np.trace(block).real)
    if weight <= 0:
        raise ValueError("state has no weight on the two-qubit subspace")
    return block / weight, weight
