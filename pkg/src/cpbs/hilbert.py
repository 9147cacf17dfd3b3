"""Occupation basis, Jordan-Wigner fermion operators and bipartite algebra.

The four fermionic modes are ordered (1up, 1down, 2up, 2down). Each mode is a
two-level system whose ket label is 0 when the level is occupied and 1 when it
is empty, so a basis ket reads |(1-n1up)(1-n1dn)(1-n2up)(1-n2dn)> and its
index is that label read as a big-endian binary number.  |0000> (index 0) is
the four-electron state and |1111> (index 15) is the empty dot pair.

The 16-dimensional space factorises as QD1 (x) QD2, each dot being a 4-level
system spanned by {|00>, |01>, |10>, |11>} in the same labelling.
"""
from __future__ import annotations

from functools import reduce
from typing import NamedTuple

import numpy as np

DIM = 16
DOT_DIM = 4
MODES = ((1, "up"), (1, "down"), (2, "up"), (2, "down"))

# single-level basis (|0>=occupied, |1>=empty); sigma_minus empties the level
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)
SIGMA_PLUS = SIGMA_MINUS.conj().T
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)


class OccupationState(NamedTuple):
    n1up: int
    n1dn: int
    n2up: int
    n2dn: int

    @property
    def particle_number(self) -> int:
        return self.n1up + self.n1dn + self.n2up + self.n2dn

    @property
    def label(self) -> str:
        return "".join(str(1 - n) for n in self)


def basis_index(occ) -> int:
    """Index of the basis ket with the given occupations (1 = electron present)."""
    occ = OccupationState(*occ)
    if any(n not in (0, 1) for n in occ):
        raise ValueError(f"occupations must be 0 or 1, got {tuple(occ)}")
    index = 0
    for n in occ:
        index = 2 * index + (1 - n)
    return index


def occupation(index: int) -> OccupationState:
    """Inverse of :func:`basis_index`."""
    if not 0 <= index < DIM:
        raise ValueError(f"basis index must lie in 0..15, got {index}")
    bits = [(index >> shift) & 1 for shift in (3, 2, 1, 0)]
    return OccupationState(*(1 - b for b in bits))


def basis_label(index: int) -> str:
    return occupation(index).label


def basis_ket(index: int) -> np.ndarray:
    ket = np.zeros(DIM, dtype=complex)
    ket[index] = 1.0
    return ket


def particle_numbers() -> np.ndarray:
    """Particle number of every basis state, indexed like the basis."""
    return np.array([occupation(i).particle_number for i in range(DIM)])


def _mode_position(dot: int, spin: str) -> int:
    try:
        return MODES.index((dot, spin))
    except ValueError:
        raise ValueError(f"unknown mode dot={dot!r} spin={spin!r}") from None


def _kron(*factors: np.ndarray) -> np.ndarray:
    return reduce(np.kron, factors)


def annihilation_operator(dot: int, spin: str) -> np.ndarray:
    """Jordan-Wigner matrix of d_{dot,spin}: sigma_z string, then sigma_minus."""
    pos = _mode_position(dot, spin)
    factors = [SIGMA_Z] * pos + [SIGMA_MINUS] + [ID2] * (3 - pos)
    return _kron(*factors)


def creation_operator(dot: int, spin: str) -> np.ndarray:
    return annihilation_operator(dot, spin).conj().T


def number_operator(dot: int, spin: str) -> np.ndarray:
    d = annihilation_operator(dot, spin)
    return d.conj().T @ d


def _check_square(rho: np.ndarray, dim: int) -> np.ndarray:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {rho.shape}")
    return rho


def _check_dot(dot) -> int:
    if dot not in (1, 2):
        raise ValueError(f"dot must be 1 or 2, got {dot!r}")
    return dot


def partial_trace(rho: np.ndarray, keep: int) -> np.ndarray:
    """Reduced 4x4 density matrix of dot ``keep`` (1 or 2)."""
    rho = _check_square(rho, DIM)
    t = rho.reshape(DOT_DIM, DOT_DIM, DOT_DIM, DOT_DIM)
    if _check_dot(keep) == 1:
        return np.einsum("ajbj->ab", t)
    return np.einsum("jajb->ab", t)


def partial_transpose(rho: np.ndarray, subsystem: int) -> np.ndarray:
    """Transpose only the indices belonging to dot ``subsystem``."""
    rho = _check_square(rho, DIM)
    t = rho.reshape(DOT_DIM, DOT_DIM, DOT_DIM, DOT_DIM)
    axes = (2, 1, 0, 3) if _check_dot(subsystem) == 1 else (0, 3, 2, 1)
    return t.transpose(axes).reshape(DIM, DIM)


def is_density_matrix(rho: np.ndarray, tol: float = 1e-10, psd_tol: float = 1e-8) -> bool:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if abs(np.trace(rho) - 1) > tol or np.abs(rho - rho.conj().T).max() > tol:
        return False
    return np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() >= -psd_tol


def pure_state(ket: np.ndarray) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex)
    ket = ket / np.linalg.norm(ket)
    return np.outer(ket, ket.conj())
