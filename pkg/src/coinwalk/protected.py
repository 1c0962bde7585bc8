"""
Evolution of states overlapping the eigenvectors at an unpaired wavenumber.

At ``alpha = n pi / N`` the eigenvectors at a self-conjugate wavenumber do
not depend on ``R``, so their overlaps with the walker keep constant
magnitude while ``R`` changes from step to step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .coin import CoinParams
from .eigensystem import eigenvector_nondegenerate
from .errors import DomainError, NotUniqueError
from .operator import StateVector, StepOperator, apply_step
from .spectrum import degeneracy_report

__all__ = ["RNG_ALGORITHM", "ProtectedTrace", "initial_state", "protected_trace"]

RNG_ALGORITHM = "numpy.random.Generator(PCG64)"


@dataclass
class ProtectedTrace:
    k: int
    R: np.ndarray  # R used for step t (entry 0 is the starting R)
    alpha: np.ndarray
    overlap1: np.ndarray
    overlap2: np.ndarray

    def rows(self) -> List[tuple]:
        return [
            (t, float(self.R[t]), float(self.alpha[t]), float(self.overlap1[t]), float(self.overlap2[t]))
            for t in range(len(self.overlap1))
        ]


def protected_eigenvectors(params: CoinParams, k: int) -> Tuple[StateVector, StateVector]:
    report = degeneracy_report(params)
    if not report.is_degenerate or k not in report.unique_ks:
        raise NotUniqueError(
            f"k={k} carries no unique eigenvalue (unique wavenumbers: {report.unique_ks})"
        )
    return tuple(
        eigenvector_nondegenerate(params, k, z, report).state.to_position() for z in (1, 2)
    )


def initial_state(params: CoinParams, k: int, x: Tuple[complex, complex, complex],
                  rng: np.random.Generator) -> StateVector:
    """
    ``x0 |phi> + x1 |psi(k,1)> + x2 |psi(k,2)>`` with ``|phi>`` a random unit
    vector orthogonal to both protected eigenvectors.
    """
    x0, x1, x2 = x
    if not np.isclose(abs(x0) ** 2 + abs(x1) ** 2 + abs(x2) ** 2, 1.0, atol=1e-12):
        raise DomainError("weights must satisfy |x0|^2 + |x1|^2 + |x2|^2 = 1")
    p1, p2 = protected_eigenvectors(params, k)
    dim = 2 * params.N
    phi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    for p in (p1, p2):
        phi -= np.vdot(p.amplitudes, phi) * p.amplitudes
    phi /= np.linalg.norm(phi)
    return StateVector(x0 * phi + x1 * p1.amplitudes + x2 * p2.amplitudes)


def protected_trace(
    params: CoinParams,
    steps: int,
    rng: np.random.Generator,
    k: Optional[int] = None,
    x: Tuple[complex, complex, complex] = (3 ** -0.5, 3 ** -0.5, 3 ** -0.5),
    vary_alpha: bool = False,
) -> ProtectedTrace:
    """
    Evolve with a fresh uniform ``R`` in [0, 1] every step and record
    ``|<psi(k,z)|psi(t)>|`` for both bands.

    With ``vary_alpha`` the angle is also redrawn uniformly in [0, 2*pi) every
    step, which breaks the protection.
    """
    if steps < 1:
        raise DomainError("steps must be >= 1")
    if params.R >= 1.0:
        raise DomainError("protected eigenvectors need R < 1 to be constructed")
    report = degeneracy_report(params)
    if not report.unique_ks:
        raise NotUniqueError("spectrum has no unique eigenvalues for these parameters")
    if k is None:
        k = report.unique_ks[0]
    p1, p2 = protected_eigenvectors(params, k)
    psi = initial_state(params, k, x, rng)

    Rs = np.empty(steps + 1)
    alphas = np.empty(steps + 1)
    o1 = np.empty(steps + 1)
    o2 = np.empty(steps + 1)
    Rs[0], alphas[0] = params.R, params.alpha
    o1[0] = abs(np.vdot(p1.amplitudes, psi.amplitudes))
    o2[0] = abs(np.vdot(p2.amplitudes, psi.amplitudes))
    for t in range(1, steps + 1):
        R = rng.uniform(0.0, 1.0)
        step_params = params.with_R(R)
        if vary_alpha:
            step_params = step_params.with_alpha(rng.uniform(0.0, 2 * np.pi))
        psi = apply_step(StepOperator.from_params(step_params), psi)
        Rs[t], alphas[t] = step_params.R, step_params.alpha
        o1[t] = abs(np.vdot(p1.amplitudes, psi.amplitudes))
        o2[t] = abs(np.vdot(p2.amplitudes, psi.amplitudes))
    return ProtectedTrace(k, Rs, alphas, o1, o2)
