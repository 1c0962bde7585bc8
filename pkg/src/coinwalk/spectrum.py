"""
Closed-form quasi-energies of the walk and their degeneracy structure.

Translation invariance reduces U to a 2x2 block per wavenumber ``k``; each
block has two eigenvalues labelled by the band index ``z`` in {1, 2}:

    exp(i lambda(k, z)) = exp(i beta) [sqrt(R) cos d + i (-1)^z sqrt(1 - R cos^2 d)],
    d = alpha - 2 pi k / N.

Two wavenumbers share an eigenvalue (within the same band) exactly when
``k + k' = n (mod N)`` with ``alpha = n pi / N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .coin import CoinParams
from .errors import DomainError
from .phase import circle_distance, wrap_phase

__all__ = [
    "ALPHA_LATTICE_TOL",
    "DegeneracyReport",
    "SpectralPoint",
    "alpha_lattice_index",
    "degeneracy_report",
    "eigenphase",
    "full_spectrum",
    "limiting_phases",
    "unique_wavenumbers",
]

ALPHA_LATTICE_TOL = 1e-9
LIMIT_AGREEMENT_TOL = 1e-12


@dataclass(frozen=True)
class SpectralPoint:
    k: int
    z: int
    lam: float
    partner_k: Optional[int] = None


@dataclass(frozen=True)
class DegeneracyReport:
    is_degenerate: bool
    n: Optional[int] = None
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    unique_ks: List[int] = field(default_factory=list)

    def partner(self, k: int) -> Optional[int]:
        for a, b in self.pairs:
            if k == a:
                return b
            if k == b:
                return a
        return None

    def as_dict(self) -> dict:
        return {
            "is_degenerate": self.is_degenerate,
            "n": self.n,
            "pairs": [list(p) for p in self.pairs],
            "unique_ks": list(self.unique_ks),
        }


def _check_k(params: CoinParams, k: int) -> None:
    if not 0 <= k < params.N:
        raise IndexError(f"wavenumber k={k} out of range for N={params.N}")


def _check_z(z: int) -> None:
    if z not in (1, 2):
        raise ValueError(f"band index z must be 1 or 2, got {z!r}")


def eigenphase(params: CoinParams, k: int, z: int) -> float:
    """
    Quasi-energy ``lambda(k, z)`` in [-pi, pi).

    Raises
    ------
    IndexError
        If ``k`` is not in ``0..N-1``.
    """
    _check_k(params, k)
    _check_z(z)
    d = params.alpha - 2.0 * np.pi * k / params.N
    c = np.cos(d)
    # 1 - R cos^2 d written as (1 - R) + R sin^2 d to avoid cancellation near |cos d| = 1
    im = np.sqrt((1.0 - params.R) + params.R * np.sin(d) ** 2)
    sign = -1.0 if z == 1 else 1.0
    return wrap_phase(params.beta + np.arctan2(sign * im, np.sqrt(params.R) * c))


def alpha_lattice_index(params: CoinParams, tol: float = ALPHA_LATTICE_TOL) -> Optional[int]:
    """Return ``n`` in ``0..2N-1`` if ``alpha = n*pi/N``, else ``None``."""
    if params.alpha_n is not None:
        return params.alpha_n
    x = params.alpha * params.N / np.pi
    n = round(x)
    if abs(x - n) < tol:
        return int(n) % (2 * params.N)
    return None


def unique_wavenumbers(N: int, n: int) -> List[int]:
    """
    Wavenumbers that are their own conjugate, ``2k = n (mod N)``.

    n even, N even -> {n/2, (N+n)/2}; n even, N odd -> {n/2};
    n odd, N even -> {}; n odd, N odd -> {(N+n)/2}  (all mod N).
    """
    if n % 2 == 0:
        ks = {(n // 2) % N}
        if N % 2 == 0:
            ks.add(((N + n) // 2) % N)
    elif N % 2 == 1:
        ks = {((N + n) // 2) % N}
    else:
        ks = set()
    return sorted(ks)


def degeneracy_report(params: CoinParams) -> DegeneracyReport:
    """
    Classify the spectrum as degenerate or not and list the conjugate pairs.

    ``alpha`` counts as a lattice value ``n*pi/N`` when the residue of
    ``alpha*N/pi`` is below 1e-9, or exactly when ``params.alpha_n`` is set.
    """
    n = alpha_lattice_index(params)
    if n is None:
        return DegeneracyReport(False)
    N = params.N
    pairs = []
    for k in range(N):
        kp = (n - k) % N
        if k < kp:
            pairs.append((k, kp))
    return DegeneracyReport(True, n, pairs, unique_wavenumbers(N, n))


def full_spectrum(params: CoinParams) -> List[SpectralPoint]:
    """All 2N eigenvalues, ordered by ``k`` then ``z``."""
    report = degeneracy_report(params)
    out = []
    for k in range(params.N):
        partner = report.partner(k)
        for z in (1, 2):
            out.append(SpectralPoint(k, z, eigenphase(params, k, z), partner))
    return out


def limiting_phases(params: CoinParams) -> List[float]:
    """
    Phases in the two limits of the bias, ordered like :func:`full_spectrum`.

    For ``R = 0`` every phase is ``beta + (-1)^z pi/2``. For ``R = 1`` the
    phase is ``beta +/- (-1)^z (alpha - 2 pi k/N)``, with ``+`` when
    ``sin(alpha - 2 pi k/N) >= 0``.

    Raises
    ------
    DomainError
        Unless ``R`` is exactly 0 or 1.
    RuntimeError
        If the limiting form disagrees with :func:`eigenphase` beyond 1e-12.
    """
    if params.R not in (0.0, 1.0):
        raise DomainError(f"limiting phases need R in {{0, 1}}, got {params.R}")
    out = []
    for k in range(params.N):
        d = params.alpha - 2.0 * np.pi * k / params.N
        for z in (1, 2):
            sign = (-1) ** z
            if params.R == 0.0:
                lam = params.beta + sign * np.pi / 2
            elif np.sin(d) >= 0:
                lam = params.beta + sign * d
            else:
                lam = params.beta - sign * d
            lam = wrap_phase(lam)
            ref = eigenphase(params, k, z)
            if circle_distance(lam, ref) > LIMIT_AGREEMENT_TOL:
                raise RuntimeError(
                    f"limiting phase {lam} disagrees with closed form {ref} at k={k}, z={z}"
                )
            out.append(lam)
    return out
