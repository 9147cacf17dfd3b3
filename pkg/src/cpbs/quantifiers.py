"""Entanglement indicators and the occupation covariance.

All entropies are in bits.  Eigenvalues below ``CLIP`` are treated as zero
before logarithms and square roots.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import hilbert
from .hilbert import partial_trace, partial_transpose
from .model import project_2qb

CLIP = 1e-12

SPIN_PAIRS = (("up", "down"), ("down", "up"), ("down", "down"), ("up", "up"))

_SIGMA_YY = np.kron(hilbert.SIGMA_Y, hilbert.SIGMA_Y)


@dataclass(frozen=True)
class IndicatorSet:
    svne: float
    qmi: float
    neg: float
    tei: float
    covariances: tuple[float, float, float, float]
    concurrence: float | None = None

    @property
    def qmi_scaled(self) -> float:
        return self.qmi / 2

    @property
    def neg_scaled(self) -> float:
        return 2 * self.neg


def _hermitian_eigvals(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho)
    return np.linalg.eigvalsh((rho + rho.conj().T) / 2)


def shannon_entropy(probs) -> float:
    p = np.asarray(probs, dtype=float)
    p = p[p > CLIP]
    return float(-(p * np.log2(p)).sum())


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-Tr(rho log2 rho) of a density matrix of any dimension."""
    return shannon_entropy(_hermitian_eigvals(rho))


def svne(rho_sub: np.ndarray) -> float:
    """Von Neumann entropy of a reduced 4x4 single-dot state."""
    rho_sub = np.asarray(rho_sub)
    if rho_sub.shape != (4, 4):
        raise ValueError(f"expected a 4x4 reduced state, got shape {rho_sub.shape}")
    return von_neumann_entropy(rho_sub)


def qmi(rho: np.ndarray) -> float:
    """Quantum mutual information S(rho_1) + S(rho_2) - S(rho) between the dots."""
    return (
        von_neumann_entropy(partial_trace(rho, 1))
        + von_neumann_entropy(partial_trace(rho, 2))
        - von_neumann_entropy(rho)
    )


def negativity(rho: np.ndarray, subsystem: int = 1) -> float:
    L = _hermitian_eigvals(partial_transpose(rho, subsystem))
    return float(0.5 * (np.abs(L) - L).sum())


def _product_basis(basis):
    if basis is None:
        return None, None
    u1, u2 = (np.asarray(u, dtype=complex) for u in basis)
    for u in (u1, u2):
        if u.shape != (4, 4) or not np.allclose(u.conj().T @ u, np.eye(4), atol=1e-10):
            raise ValueError("subsystem bases must be 4x4 unitaries (columns = basis kets)")
    return u1, u2


def tomographic_entropies(rho: np.ndarray, basis=None) -> tuple[float, float, float]:
    """Shannon entropies (S12, S1, S2) of the measurement statistics in a product basis.

    ``basis`` is an optional pair (U1, U2) of 4x4 unitaries whose columns are
    the single-dot measurement kets; the full-system basis is their tensor
    product.  The default is the occupation basis.
    """
    rho = np.asarray(rho)
    u1, u2 = _product_basis(basis)
    if u1 is not None:
        u = np.kron(u1, u2)
        rho = u.conj().T @ rho @ u
    probs = np.real(np.diag(rho))
    s12 = shannon_entropy(probs)
    s1 = shannon_entropy(np.real(np.diag(partial_trace(rho, 1))))
    s2 = shannon_entropy(np.real(np.diag(partial_trace(rho, 2))))
    return s12, s1, s2


def tei(rho: np.ndarray, basis=None) -> float:
    """Tomographic entanglement indicator S1 + S2 - S12."""
    s12, s1, s2 = tomographic_entropies(rho, basis)
    return s1 + s2 - s12


def concurrence(rho2: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix."""
    rho2 = np.asarray(rho2, dtype=complex)
    if rho2.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit state, got shape {rho2.shape}")
    flipped = _SIGMA_YY @ rho2.conj() @ _SIGMA_YY
    # rho * flipped has real non-negative spectrum; clip round-off before the root
    ev = np.linalg.eigvals(rho2 @ flipped).real
    lam = np.sort(np.sqrt(np.clip(ev, 0, None)))[::-1]
    lam[lam < np.sqrt(CLIP)] = 0.0
    return float(max(0.0, lam[0] - lam[1:].sum()))


def concurrence_full(rho: np.ndarray) -> tuple[float, float]:
    """Concurrence of a 16-level state after projecting onto the two-qubit subspace.

    Returns ``(C, weight)`` where ``weight`` is the population that was kept.
    """
    block, weight = project_2qb(rho)
    return concurrence(block), weight


def covariance(rho: np.ndarray, sigma1: str, sigma2: str) -> float:
    """4 |<N1s N2s'> - <N1s><N2s'>| for occupation operators of dot 1 and dot 2."""
    rho = np.asarray(rho)
    n1 = np.real(np.diag(hilbert.number_operator(1, sigma1)))
    n2 = np.real(np.diag(hilbert.number_operator(2, sigma2)))
    p = np.real(np.diag(rho))
    joint = (p * n1 * n2).sum()
    return float(4 * abs(joint - (p * n1).sum() * (p * n2).sum()))


def covariances(rho: np.ndarray) -> tuple[float, float, float, float]:
    """Covariances for the spin pairs (up,down), (down,up), (down,down), (up,up)."""
    return tuple(covariance(rho, s1, s2) for s1, s2 in SPIN_PAIRS)


def covariance_analytic(theta):
    return np.sin(2 * np.asarray(theta)) ** 2


def indicators(rho: np.ndarray) -> IndicatorSet:
    return IndicatorSet(
        svne=svne(partial_trace(rho, 1)),
        qmi=qmi(rho),
        neg=negativity(rho),
        tei=tei(rho),
        covariances=covariances(rho),
    )
