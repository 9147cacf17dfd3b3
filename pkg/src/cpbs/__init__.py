"""Entanglement of electron pairs in a Cooper-pair beam splitter double dot."""
__version__ = "0.1.0"

from .hilbert import annihilation_operator, basis_index, number_operator, partial_trace, partial_transpose
from .model import (
    EffectiveModel,
    ModelParams,
    build_2qb_hamiltonian,
    build_hamiltonian,
    effective_coupling,
    effective_model,
    effective_onsite,
)
from .dynamics import DephasingConfig, DrainRates, Trajectory, evolve, evolve_2qb_dephasing, liouvillian
from .quantifiers import concurrence, covariance, negativity, qmi, svne, tei
from .spectral import SpectralReport, analyze, eigensystem

__all__ = [name for name in dir() if not name.startswith("_")]
