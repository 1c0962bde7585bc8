"""
Step operator of the walk and state vectors on the N-cycle.

Amplitudes are stored position-major: the component ``(x, c)`` lives at flat
index ``2*x + c``. One step applies the coin at every site and then shifts
the ``c = 0`` component one site to the left and ``c = 1`` one site to the
right, with periodic boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np
from numpy.typing import NDArray

from .coin import CoinMatrix, CoinParams, build_coin
from .errors import DenseLimitError, SizeMismatchError

__all__ = [
    "DENSE_LIMIT",
    "StateVector",
    "StepOperator",
    "apply_step",
    "build_dense",
    "evolve",
    "fourier",
    "inverse_fourier",
]

DENSE_LIMIT = 512

Basis = Literal["position", "fourier"]


@dataclass(frozen=True, eq=False)
class StateVector:
    """
    2N complex amplitudes over position (or wavenumber) times coin.

    The amplitude array is copied and frozen on construction.
    """

    amplitudes: NDArray[np.complex128]
    basis: Basis = "position"

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if a.size < 4 or a.size % 2:
            raise SizeMismatchError(f"need 2N amplitudes with N >= 2, got {a.size}")
        if self.basis not in ("position", "fourier"):
            raise ValueError(f"unknown basis {self.basis!r}")
        a.flags.writeable = False
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def from_grid(cls, grid, basis: Basis = "position") -> "StateVector":
        """Build from an ``(N, 2)`` array indexed ``[x, c]``."""
        return cls(np.asarray(grid).reshape(-1), basis)

    @classmethod
    def basis_state(cls, N: int, x: int, c: int) -> "StateVector":
        a = np.zeros(2 * N, dtype=np.complex128)
        a[2 * (x % N) + c] = 1.0
        return cls(a)

    @property
    def N(self) -> int:
        return self.amplitudes.size // 2

    @property
    def grid(self) -> NDArray[np.complex128]:
        """Read-only ``(N, 2)`` view."""
        return self.amplitudes.reshape(self.N, 2)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def to_position(self) -> "StateVector":
        return self if self.basis == "position" else inverse_fourier(self)

    def to_fourier(self) -> "StateVector":
        return self if self.basis == "fourier" else fourier(self)

    def inner(self, other: "StateVector") -> complex:
        """``<self|other>``; both sides are brought to the position basis."""
        return complex(np.vdot(self.to_position().amplitudes, other.to_position().amplitudes))


@dataclass(frozen=True, eq=False)
class StepOperator:
    """U = T (I x F) for a fixed coin on N sites."""

    coin: CoinMatrix
    N: int

    @classmethod
    def from_params(cls, params: CoinParams) -> "StepOperator":
        return cls(build_coin(params), params.N)


def apply_step(op: StepOperator, psi: StateVector) -> StateVector:
    """
    One step of the walk in O(N) work.

    Raises
    ------
    SizeMismatchError
        If ``psi`` lives on a different number of sites than ``op``.
    """
    if psi.N != op.N:
        raise SizeMismatchError(f"state has N={psi.N}, operator has N={op.N}")
    g = psi.to_position().grid
    F = op.coin
    a, b = g[:, 0], g[:, 1]
    left = F[0, 0] * a + F[0, 1] * b
    right = F[1, 0] * a + F[1, 1] * b
    out = np.empty_like(g)
    # c=0 moves left: new[x] = old[x+1]; c=1 moves right: new[x] = old[x-1]
    out[:-1, 0] = left[1:]
    out[-1, 0] = left[0]
    out[1:, 1] = right[:-1]
    out[0, 1] = right[-1]
    return StateVector.from_grid(out)


def shift_matrix(N: int) -> NDArray[np.complex128]:
    """Dense conditional shift on the position-major layout."""
    T = np.zeros((2 * N, 2 * N), dtype=np.complex128)
    for x in range(N):
        T[2 * ((x - 1) % N), 2 * x] = 1.0
        T[2 * ((x + 1) % N) + 1, 2 * x + 1] = 1.0
    return T


def build_dense(op: StepOperator, limit: int = DENSE_LIMIT) -> NDArray[np.complex128]:
    """Explicit 2N x 2N matrix of the step operator, for verification only."""
    if op.N > limit:
        raise DenseLimitError(f"N={op.N} exceeds dense limit {limit}")
    return shift_matrix(op.N) @ np.kron(np.eye(op.N), op.coin)


def fourier(psi: StateVector) -> StateVector:
    """
    Position to wavenumber basis, per coin component.

    Uses ``psi~(k, c) = N^{-1/2} sum_x exp(+2 pi i k x / N) psi(x, c)``; the
    positive exponent is numpy's inverse-FFT sign.
    """
    if psi.basis == "fourier":
        raise ValueError("state is already in the Fourier basis")
    return StateVector.from_grid(np.fft.ifft(psi.grid, axis=0, norm="ortho"), "fourier")


def inverse_fourier(psi: StateVector) -> StateVector:
    """Adjoint of :func:`fourier`."""
    if psi.basis == "position":
        raise ValueError("state is already in the position basis")
    return StateVector.from_grid(np.fft.fft(psi.grid, axis=0, norm="ortho"), "position")


def evolve(steps: Iterable[CoinParams], psi0: StateVector) -> StateVector:
    """Apply one step per parameter set, in order. An empty sequence returns ``psi0``."""
    psi = psi0.to_position()
    for params in steps:
        psi = apply_step(StepOperator.from_params(params), psi)
    return psi
