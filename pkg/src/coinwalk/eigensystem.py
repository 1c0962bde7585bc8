"""
Eigenvectors of the step operator.

In the Fourier basis the eigenvalue problem at wavenumber ``k`` is the 2x2
system ``G (psi~(k,0), psi~(k,1))^T = 0``. Away from degeneracy each
eigenvector lives on a single wavenumber. When ``alpha = n pi / N`` the
eigenvalues at conjugate wavenumbers ``k`` and ``k' = n - k (mod N)``
coincide and each degenerate eigenspace is two dimensional; an orthonormal
pair inside it is fixed by a gauge choice ``(s1, omega1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from .coin import CoinParams
from .errors import DegeneracyError, DomainError, GaugeError, NotUniqueError
from .operator import StateVector
from .phase import wrap_angle
from .spectrum import DegeneracyReport, degeneracy_report, eigenphase

__all__ = [
    "EigenBasis",
    "Eigenvector",
    "GElements",
    "GaugeChoice",
    "PairWeights",
    "coin_ratio",
    "eigenvector_bias_one",
    "eigenvector_nondegenerate",
    "eigenvector_pair_degenerate",
    "equal_weight_gauge",
    "full_eigenbasis",
    "g_elements",
    "pair_weights",
    "protected_coin_ratio",
    "symmetry_operator",
]

GAUGE_MARGIN = 1e-12


@dataclass(frozen=True)
class GElements:
    g00: complex
    g01: complex
    g10: complex
    g11: complex

    @property
    def det(self) -> complex:
        return self.g00 * self.g11 - self.g10 * self.g01

    def matrix(self) -> NDArray[np.complex128]:
        return np.array([[self.g00, self.g01], [self.g10, self.g11]])


@dataclass(frozen=True)
class GaugeChoice:
    s1: float
    omega1: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "omega1", wrap_angle(self.omega1))


@dataclass(frozen=True)
class PairWeights:
    """Real weights and phases for both members of a degenerate pair."""

    s1: float
    s1p: float
    omega1: float
    s2: float
    s2p: float
    omega2: float
    s_max: float


@dataclass(frozen=True, eq=False)
class Eigenvector:
    state: StateVector
    k: int
    z: int
    lam: float
    partner_k: Optional[int] = None
    member: Optional[int] = None
    gauge: Optional[GaugeChoice] = None
    s: float = 1.0
    s_prime: float = 0.0


def g_elements(params: CoinParams, lam: float, k: int) -> GElements:
    """The four entries of G at phase ``lam`` and wavenumber ``k``."""
    if not 0 <= k < params.N:
        raise IndexError(f"wavenumber k={k} out of range for N={params.N}")
    a, b, R = params.alpha, params.beta, params.R
    t = 2.0 * np.pi * k / params.N
    e = np.exp(1j * lam)
    sr, sq = np.sqrt(R), np.sqrt(1.0 - R)
    return GElements(
        g00=complex(sr * np.exp(1j * (a + b - t)) - e),
        g01=complex(sq * np.exp(-1j * t)),
        g10=complex(-sq * np.exp(1j * (2 * b + t))),
        g11=complex(sr * np.exp(-1j * (a - b - t)) - e),
    )


def coin_ratio(params: CoinParams, lam: float, k: int) -> complex:
    """``psi~(k,1) / psi~(k,0) = -g00(lam, k) / g01(k)``; needs ``R < 1``."""
    if params.R >= 1.0:
        raise DomainError("coin ratio is undefined at R = 1 (g01 vanishes)")
    g = g_elements(params, lam, k)
    return -g.g00 / g.g01


def _single_k_grid(N: int, k: int, ratio: complex) -> NDArray[np.complex128]:
    grid = np.zeros((N, 2), dtype=np.complex128)
    a = 1.0 / np.sqrt(1.0 + abs(ratio) ** 2)
    grid[k] = (a, a * ratio)
    return grid


def eigenvector_bias_one(params: CoinParams, k: int, z: int) -> Eigenvector:
    """
    Eigenvector at ``R = 1``, where the coin is diagonal.

    The states are ``|k>|0>`` and ``|k>|1>``; band ``z = 2`` takes the coin
    component whose phase is ``beta + |alpha - 2 pi k/N|`` on the branch
    where ``sin(alpha - 2 pi k/N) >= 0``.
    """
    if params.R != 1.0:
        raise DomainError("coin-basis eigenvectors only apply at R = 1")
    d = params.alpha - 2.0 * np.pi * k / params.N
    upper_is_c0 = np.sin(d) >= 0
    c = 0 if (z == 2) == upper_is_c0 else 1
    grid = np.zeros((params.N, 2), dtype=np.complex128)
    grid[k, c] = 1.0
    return Eigenvector(StateVector.from_grid(grid, "fourier"), k, z, eigenphase(params, k, z))


def eigenvector_nondegenerate(
    params: CoinParams, k: int, z: int, report: Optional[DegeneracyReport] = None
) -> Eigenvector:
    """
    Single-wavenumber eigenvector for ``lambda(k, z)``.

    The ``|k>|0>`` amplitude is real and positive.

    Raises
    ------
    DomainError
        At ``R = 1``; use :func:`eigenvector_bias_one`.
    DegeneracyError
        If ``k`` belongs to a conjugate pair of a degenerate spectrum.
    """
    if params.R >= 1.0:
        raise DomainError("R = 1 has g01 = 0; use eigenvector_bias_one")
    if report is None:
        report = degeneracy_report(params)
    if report.is_degenerate and k not in report.unique_ks:
        raise DegeneracyError(
            f"k={k} is paired with k'={report.partner(k)}; use eigenvector_pair_degenerate"
        )
    lam = eigenphase(params, k, z)
    grid = _single_k_grid(params.N, k, coin_ratio(params, lam, k))
    return Eigenvector(StateVector.from_grid(grid, "fourier"), k, z, lam)


def pair_weights(params: CoinParams, k: int, kp: int, z: int, gauge: GaugeChoice) -> PairWeights:
    """
    Normalised weights for the orthonormal pair selected by ``gauge``.

    ``s1'`` follows from normalisation, ``s2`` from orthogonality and
    ``omega2 = omega1 + pi``. A weight within 1e-12 of ``s_max`` collapses
    the pair onto the two single-wavenumber states.
    """
    lam = eigenphase(params, k, z)
    gk = g_elements(params, lam, k)
    gkp = g_elements(params, lam, kp)
    nk = abs(gk.g00) ** 2 + abs(gk.g01) ** 2
    nkp = abs(gkp.g00) ** 2 + abs(gkp.g01) ** 2
    s_max = abs(gkp.g01) / np.sqrt(nk)
    s1 = float(gauge.s1)
    if not (GAUGE_MARGIN < s1 <= s_max + GAUGE_MARGIN):
        raise GaugeError(f"s1={s1} outside (0, s_max={s_max}) for pair ({k}, {kp}), z={z}")
    if s1 >= s_max - GAUGE_MARGIN:
        s1 = s_max

    def partner_weight(s):
        return np.sqrt(max(abs(gkp.g01) ** 2 - nk * s * s, 0.0) / nkp)

    s2 = np.sqrt(max(abs(gk.g01) ** 2 / nk - s1 * s1, 0.0))
    omega1 = gauge.omega1
    return PairWeights(
        s1=s1,
        s1p=partner_weight(s1),
        omega1=omega1,
        s2=s2,
        s2p=partner_weight(s2),
        omega2=wrap_angle(omega1 + np.pi),
        s_max=s_max,
    )


def equal_weight_gauge(params: CoinParams, k: int, kp: int, z: int) -> GaugeChoice:
    """Gauge with ``s1' = s1`` and ``omega1 = 0``."""
    lam = eigenphase(params, k, z)
    a = 1.0 + abs(coin_ratio(params, lam, k)) ** 2
    b = 1.0 + abs(coin_ratio(params, lam, kp)) ** 2
    return GaugeChoice(1.0 / np.sqrt(a + b), 0.0)


def eigenvector_pair_degenerate(
    params: CoinParams,
    k: int,
    k_prime: int,
    z: int,
    gauge: Optional[GaugeChoice] = None,
) -> Tuple[Eigenvector, Eigenvector]:
    """
    Orthonormal eigenvectors spanning the eigenspace shared by ``k`` and ``k_prime``.

    Each member is ``s|k>(|0> + r_k|1>) + e^{i omega} s'|k'>(|0> + r_k'|1>)``
    with ``r = -g00/g01``. Without a ``gauge`` the equal-weight choice is used.

    Raises
    ------
    DegeneracyError
        If ``(k, k_prime)`` is not a conjugate pair.
    GaugeError
        If ``gauge.s1`` is outside ``(0, s_max)``.
    """
    if params.R >= 1.0:
        raise DomainError("R = 1 has g01 = 0; use eigenvector_bias_one")
    report = degeneracy_report(params)
    if not report.is_degenerate or k == k_prime or (k + k_prime - report.n) % params.N:
        raise DegeneracyError(f"({k}, {k_prime}) is not a conjugate pair for these parameters")
    if gauge is None:
        gauge = equal_weight_gauge(params, k, k_prime, z)
    w = pair_weights(params, k, k_prime, z, gauge)
    lam = eigenphase(params, k, z)
    rk = coin_ratio(params, lam, k)
    rkp = coin_ratio(params, lam, k_prime)

    def member(s, sp, omega):
        grid = np.zeros((params.N, 2), dtype=np.complex128)
        grid[k] = (s, s * rk)
        grid[k_prime] = np.exp(1j * omega) * sp * np.array([1.0, rkp])
        return StateVector.from_grid(grid, "fourier")

    one = Eigenvector(member(w.s1, w.s1p, w.omega1), k, z, lam, k_prime, 1, gauge, w.s1, w.s1p)
    two = Eigenvector(member(w.s2, w.s2p, w.omega2), k_prime, z, lam, k, 2, gauge, w.s2, w.s2p)
    return one, two


GaugePolicy = Union[
    None,
    GaugeChoice,
    Callable[[CoinParams, int, int, int], GaugeChoice],
]


@dataclass(frozen=True, eq=False)
class EigenBasis:
    """2N orthonormal eigenvectors; pair members are tagged 1 and 2."""

    params: CoinParams
    vectors: Tuple[Eigenvector, ...]
    report: DegeneracyReport

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def matrix(self) -> NDArray[np.complex128]:
        """Columns are the eigenvectors in the position basis."""
        return np.column_stack([v.state.to_position().amplitudes for v in self.vectors])

    def phases(self) -> NDArray[np.float64]:
        return np.array([v.lam for v in self.vectors])

    def find(self, k: int, z: int) -> Eigenvector:
        for v in self.vectors:
            if v.k == k and v.z == z:
                return v
        raise KeyError((k, z))

    def pairs(self) -> List[Tuple[Eigenvector, Eigenvector]]:
        ones = {(v.k, v.z): v for v in self.vectors if v.member == 1}
        return [(ones[(v.partner_k, v.z)], v) for v in self.vectors if v.member == 2]


def full_eigenbasis(
    params: CoinParams,
    gauge: GaugePolicy = None,
    overrides: Optional[Mapping[Tuple[int, int, int], GaugeChoice]] = None,
) -> EigenBasis:
    """
    Assemble a complete orthonormal eigenbasis.

    Parameters
    ----------
    params : CoinParams
    gauge : None, GaugeChoice or callable
        Rule for degenerate pairs. ``None`` selects equal weights with
        ``omega1 = 0``; a callable receives ``(params, k, k', z)``.
    overrides : mapping, optional
        Per-pair gauge keyed by ``(k, k', z)`` with ``k < k'``.
    """
    report = degeneracy_report(params)
    N = params.N
    vectors: List[Eigenvector] = []
    if params.R == 1.0:
        for k in range(N):
            for z in (1, 2):
                vectors.append(eigenvector_bias_one(params, k, z))
        return EigenBasis(params, tuple(vectors), report)

    overrides = dict(overrides or {})
    paired: Dict[int, int] = {}
    for a, b in report.pairs:
        paired[a] = b
    for k in range(N):
        for z in (1, 2):
            if not report.is_degenerate or k in report.unique_ks:
                vectors.append(eigenvector_nondegenerate(params, k, z, report))
            elif k in paired:
                kp = paired[k]
                choice = overrides.get((k, kp, z))
                if choice is None:
                    if callable(gauge):
                        choice = gauge(params, k, kp, z)
                    else:
                        choice = gauge
                vectors.extend(eigenvector_pair_degenerate(params, k, kp, z, choice))
    return EigenBasis(params, tuple(vectors), report)


def symmetry_operator(params: CoinParams, basis: Optional[EigenBasis] = None) -> NDArray[np.complex128]:
    """
    Unitary ``S`` with ``S U S^dagger = U`` that swaps the members of every
    degenerate pair and acts as the identity on unpaired eigenvectors.
    """
    if basis is None:
        basis = full_eigenbasis(params)
    dim = 2 * params.N
    S = np.zeros((dim, dim), dtype=np.complex128)
    for v in basis.vectors:
        if v.member is None:
            u = v.state.to_position().amplitudes
            S += np.outer(u, u.conj())
    for one, two in basis.pairs():
        u1 = one.state.to_position().amplitudes
        u2 = two.state.to_position().amplitudes
        S += np.outer(u2, u1.conj()) + np.outer(u1, u2.conj())
    return S


def protected_coin_ratio(params: CoinParams, k: int, z: int) -> complex:
    """
    Coin ratio ``-g00/g01`` of the eigenvector at an unpaired wavenumber.

    It has unit modulus and does not depend on ``R``.

    Raises
    ------
    NotUniqueError
        If ``k`` is not an unpaired wavenumber of a degenerate spectrum.
    """
    report = degeneracy_report(params)
    if not report.is_degenerate or k not in report.unique_ks:
        raise NotUniqueError(f"k={k} does not carry a unique eigenvalue")
    return coin_ratio(params, eigenphase(params, k, z), k)
