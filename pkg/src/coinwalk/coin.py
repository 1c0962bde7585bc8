"""
Coin-flip matrix for the walk on the N-cycle.

The coin is drawn from a three-parameter family of 2x2 unitaries: a bias
weight ``R`` in [0, 1] that mixes the two coin components, and two angles
``alpha`` and ``beta``. The overall phase of a general U(2) element has no
effect on the walk and is not represented.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from .errors import DomainError
from .phase import wrap_angle

__all__ = [
    "CoinParams",
    "CoinMatrix",
    "build_coin",
    "build_coin_bare",
    "hadamard_params",
]

CoinMatrix = NDArray[np.complex128]

UNITARY_ATOL = 1e-12


@dataclass(frozen=True)
class CoinParams:
    """
    Coin parameters plus the lattice size.

    ``alpha`` and ``beta`` are reduced into [0, 2*pi) on construction. When
    ``alpha_n`` is given, ``alpha`` is set to ``alpha_n * pi / N`` and the
    integer is kept so that lattice membership of ``alpha`` is exact rather
    than tolerance based.
    """

    R: float
    alpha: float = 0.0
    beta: float = 0.0
    N: int = 2
    alpha_n: Optional[int] = field(default=None)

    def __post_init__(self):
        if isinstance(self.N, bool) or int(self.N) != self.N:
            raise DomainError(f"N must be an integer, got {self.N!r}")
        if self.N < 2:
            raise DomainError(f"N must be >= 2, got {self.N}")
        object.__setattr__(self, "N", int(self.N))
        R = float(self.R)
        if not (0.0 <= R <= 1.0) or np.isnan(R):
            raise DomainError(f"bias R must lie in [0, 1], got {self.R!r}")
        object.__setattr__(self, "R", R)
        if self.alpha_n is not None:
            n = int(self.alpha_n) % (2 * self.N)
            object.__setattr__(self, "alpha_n", n)
            object.__setattr__(self, "alpha", wrap_angle(n * np.pi / self.N))
        else:
            object.__setattr__(self, "alpha", wrap_angle(float(self.alpha)))
        object.__setattr__(self, "beta", wrap_angle(float(self.beta)))

    @classmethod
    def from_alpha_n(cls, n: int, N: int, R: float, beta: float = 0.0) -> "CoinParams":
        """Parameters with ``alpha = n*pi/N`` held exactly on the lattice."""
        return cls(R=R, beta=beta, N=N, alpha_n=n)

    def with_R(self, R: float) -> "CoinParams":
        return replace(self, R=R)

    def with_alpha(self, alpha: float) -> "CoinParams":
        return replace(self, alpha=alpha, alpha_n=None)

    def with_beta(self, beta: float) -> "CoinParams":
        return replace(self, beta=beta)

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "R": self.R,
            "alpha": self.alpha,
            "alpha_n": self.alpha_n,
            "beta": self.beta,
        }


def build_coin_bare(params: CoinParams) -> CoinMatrix:
    """The coin without its leading ``exp(i*beta)`` factor."""
    if not 0.0 <= params.R <= 1.0:
        raise DomainError(f"bias R must lie in [0, 1], got {params.R!r}")
    a, b = params.alpha, params.beta
    sr = np.sqrt(params.R)
    sq = np.sqrt(1.0 - params.R)
    return np.array(
        [
            [sr * np.exp(1j * a), sq * np.exp(-1j * b)],
            [-sq * np.exp(1j * b), sr * np.exp(-1j * a)],
        ],
        dtype=np.complex128,
    )


def build_coin(params: CoinParams) -> CoinMatrix:
    """
    Build the 2x2 coin-flip matrix.

    Parameters
    ----------
    params : CoinParams

    Returns
    -------
    NDArray[np.complex128]
        ``exp(i*beta) * [[sqrt(R) e^{i alpha}, sqrt(1-R) e^{-i beta}],
        [-sqrt(1-R) e^{i beta}, sqrt(R) e^{-i alpha}]]``

    Raises
    ------
    DomainError
        If ``R`` is outside [0, 1].
    """
    F = np.exp(1j * params.beta) * build_coin_bare(params)
    err = np.max(np.abs(F @ F.conj().T - np.eye(2)))
    if err > UNITARY_ATOL:
        raise DomainError(f"coin failed unitarity check (max deviation {err:.3e})")
    return F


def hadamard_params(N: int) -> CoinParams:
    """
    Parameters reproducing the Hadamard coin up to a global phase.

    For even ``N`` the angle ``3*pi/2`` sits on the lattice ``n*pi/N`` with
    ``n = 3N/2``; the integer is recorded so degeneracy checks are exact.
    """
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    if N % 2 == 0:
        return CoinParams(R=0.5, beta=np.pi / 2, N=N, alpha_n=3 * N // 2)
    return CoinParams(R=0.5, alpha=3 * np.pi / 2, beta=np.pi / 2, N=N)

