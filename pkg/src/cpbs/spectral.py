"""Eigenstructure of the full Hamiltonian and per-eigenstate entanglement."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import hilbert, quantifiers

DEGENERACY_GAP = 1e-9
SVNE_THRESHOLD = 0.9
SECTOR_WEIGHT = 0.99

SECTOR_LABELS = {
    1: "one-particle-entangled",
    2: "two-particle-entangled",
    3: "three-particle-entangled",
}
PURE = "pure"
AMBIGUOUS = "ambiguous"


@dataclass
class SpectralReport:
    energies: np.ndarray
    vectors: np.ndarray  # columns are eigenvectors
    svne: np.ndarray | None = None
    tei: np.ndarray | None = None
    covariances: np.ndarray | None = None  # (n, 4), order of quantifiers.SPIN_PAIRS
    sectors: list = field(default_factory=list)
    labels: list = field(default_factory=list)

    @property
    def projections(self) -> np.ndarray:
        return projection_table(self)

    def state(self, n: int) -> np.ndarray:
        return hilbert.pure_state(self.vectors[:, n])

    def to_dict(self) -> dict:
        pairs = ["_".join(p) for p in quantifiers.SPIN_PAIRS]
        out = {
            "energies": self.energies.tolist(),
            "eigenvectors_real": self.vectors.real.T.tolist(),
            "eigenvectors_imag": self.vectors.imag.T.tolist(),
            "projections": self.projections.tolist(),
        }
        if self.svne is not None:
            out["svne"] = self.svne.tolist()
            out["tei"] = self.tei.tolist()
            out["covariances"] = {
                name: self.covariances[:, k].tolist() for k, name in enumerate(pairs)
            }
            out["sectors"] = list(self.sectors)
            out["labels"] = list(self.labels)
        return out


def _fix_phase(vectors: np.ndarray) -> np.ndarray:
    # largest component real and positive, so that output is reproducible
    idx = np.argmax(np.abs(vectors), axis=0)
    lead = vectors[idx, np.arange(vectors.shape[1])]
    return vectors * (np.abs(lead) / lead)


def eigensystem(H: np.ndarray) -> SpectralReport:
    """Ascending eigenpairs of a Hermitian matrix.

    Eigenvalues within ``DEGENERACY_GAP`` of the first member of their
    cluster are ordered by the index of their dominant basis component, so
    the energies are ascending up to that gap.
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"H must be square, got shape {H.shape}")
    if np.abs(H - H.conj().T).max() > 1e-12:
        raise ValueError("H must be Hermitian")
    energies, vectors = np.linalg.eigh(H)
    order = []
    start = 0
    for i in range(1, len(energies) + 1):
        if i == len(energies) or energies[i] - energies[start] >= DEGENERACY_GAP:
            cluster = list(range(start, i))
            dominant = np.argmax(np.abs(vectors[:, cluster]) ** 2, axis=0)
            order.extend(np.array(cluster)[np.argsort(dominant, kind="stable")])
            start = i
    order = np.array(order)
    return SpectralReport(energies=energies[order], vectors=_fix_phase(vectors[:, order]))


def projection_table(report: SpectralReport) -> np.ndarray:
    """``P[n, i] = |<Phi_i|psi_n>|^2``; row n belongs to eigenstate n."""
    return (np.abs(report.vectors) ** 2).T


def eigenstate_covariances(report: SpectralReport) -> np.ndarray:
    return np.array(
        [quantifiers.covariances(report.state(n)) for n in range(len(report.energies))]
    )


def particle_sector(projections_row: np.ndarray, weight: float = SECTOR_WEIGHT):
    """Particle number holding at least ``weight`` of the state, or None."""
    numbers = hilbert.particle_numbers()
    totals = np.bincount(numbers, weights=projections_row, minlength=5)
    best = int(np.argmax(totals))
    return best if totals[best] >= weight else None


def classify_eigenstates(
    report: SpectralReport,
    svne_threshold: float = SVNE_THRESHOLD,
    sector_weight: float = SECTOR_WEIGHT,
) -> list[str]:
    """Label each eigenstate pure / one-, two-, three-particle entangled.

    States without a particle-number sector carrying ``sector_weight`` of
    the norm are labelled ``"ambiguous"`` rather than forced into a set.
    """
    if report.svne is None:
        raise ValueError("report has no per-eigenstate entropies; use analyze()")
    labels, sectors = [], []
    for n, row in enumerate(projection_table(report)):
        sector = particle_sector(row, sector_weight)
        sectors.append(sector)
        if sector is None:
            labels.append(AMBIGUOUS)
        elif report.svne[n] < svne_threshold:
            labels.append(PURE)
        else:
            labels.append(SECTOR_LABELS.get(sector, AMBIGUOUS))
    report.sectors = sectors
    report.labels = labels
    return labels


def analyze(H: np.ndarray, svne_threshold: float = SVNE_THRESHOLD) -> SpectralReport:
    """Eigensystem plus entropies, covariances and classification of every eigenstate."""
    report = eigensystem(H)
    states = [report.state(n) for n in range(len(report.energies))]
    report.svne = np.array([quantifiers.svne(hilbert.partial_trace(r, 1)) for r in states])
    report.tei = np.array([quantifiers.tei(r) for r in states])
    report.covariances = eigenstate_covariances(report)
    classify_eigenstates(report, svne_threshold)
    return report


def groups(labels: list[str]) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    for n, label in enumerate(labels):
        out.setdefault(label, []).append(n)
    return out


def anticrossing_half_gap(H: np.ndarray, pair=(6, 9)) -> float:
    """Half the splitting of the two eigenstates living mostly on ``pair`` basis states.

    This is the exact (all-order) counterpart of the perturbative coupling
    between the two basis states.
    """
    report = eigensystem(H)
    weight = projection_table(report)[:, list(pair)].sum(axis=1)
    a, b = np.argsort(weight)[-2:]
    return abs(report.energies[a] - report.energies[b]) / 2
