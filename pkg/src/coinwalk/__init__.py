"""Spectral structure of the discrete-time quantum walk on the N-cycle."""

__version__ = "0.1.0"

from .coin import CoinParams, build_coin, hadamard_params
from .operator import StateVector, StepOperator, apply_step, build_dense, evolve, fourier, inverse_fourier
from .spectrum import DegeneracyReport, SpectralPoint, degeneracy_report, eigenphase, full_spectrum, limiting_phases
from .eigensystem import (
    EigenBasis,
    GaugeChoice,
    eigenvector_nondegenerate,
    eigenvector_pair_degenerate,
    full_eigenbasis,
    g_elements,
    protected_coin_ratio,
    symmetry_operator,
)
from .bloch import BlochVector, bloch_vector, eigenstate_bloch, reduced_coin_state, trajectory
from .oracle import compare_spectra, dense_eigendecompose

__all__ = [
    "BlochVector",
    "CoinParams",
    "DegeneracyReport",
    "EigenBasis",
    "GaugeChoice",
    "SpectralPoint",
    "StateVector",
    "StepOperator",
    "apply_step",
    "bloch_vector",
    "build_coin",
    "build_dense",
    "compare_spectra",
    "degeneracy_report",
    "dense_eigendecompose",
    "eigenphase",
    "eigenstate_bloch",
    "eigenvector_nondegenerate",
    "eigenvector_pair_degenerate",
    "evolve",
    "fourier",
    "full_eigenbasis",
    "full_spectrum",
    "g_elements",
    "hadamard_params",
    "inverse_fourier",
    "limiting_phases",
    "protected_coin_ratio",
    "reduced_coin_state",
    "symmetry_operator",
    "trajectory",
]
