"""
Reduced coin states of eigenvectors and their Bloch-ball coordinates.

Convention: ``sigma_z = diag(1, -1)`` so coin state ``|0>`` is the north
pole, and ``rho = (I + r . sigma) / 2`` with ``rho[c, c'] = sum_x
psi(x, c) conj(psi(x, c'))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from .coin import CoinParams
from .eigensystem import (
    GaugeChoice,
    eigenvector_bias_one,
    equal_weight_gauge,
    full_eigenbasis,
    g_elements,
    pair_weights,
)
from .operator import StateVector
from .phase import wrap_angle
from .spectrum import degeneracy_report, eigenphase

__all__ = [
    "AXIS_TOL",
    "BlochRecord",
    "BlochVector",
    "bloch_vector",
    "eigenstate_bloch",
    "reduced_coin_state",
    "trajectory",
]

# below this transverse length the azimuth is reported as 0 and flagged
AXIS_TOL = 1e-12

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


@dataclass(frozen=True)
class BlochVector:
    rx: float
    ry: float
    rz: float

    @property
    def cartesian(self) -> NDArray[np.float64]:
        return np.array([self.rx, self.ry, self.rz])

    @property
    def r(self) -> float:
        return float(np.sqrt(self.rx**2 + self.ry**2 + self.rz**2))

    @property
    def theta(self) -> float:
        """Polar angle from +z, in [0, pi]."""
        return float(np.arctan2(np.hypot(self.rx, self.ry), self.rz))

    @property
    def phi_defined(self) -> bool:
        return bool(np.hypot(self.rx, self.ry) > AXIS_TOL)

    @property
    def phi(self) -> float:
        """Azimuth in [0, 2*pi); 0 for vectors on the z axis."""
        if not self.phi_defined:
            return 0.0
        return wrap_angle(np.arctan2(self.ry, self.rx))


def reduced_coin_state(psi: StateVector) -> NDArray[np.complex128]:
    """Partial trace over position of ``|psi><psi|``."""
    # the Fourier transform acts on position only, so either basis works
    g = psi.grid
    return g.T @ g.conj()


def bloch_vector(rho: NDArray[np.complex128]) -> BlochVector:
    r = [float(np.real(np.trace(rho @ s))) for s in PAULI]
    return BlochVector(*r)


def eigenstate_bloch(
    params: CoinParams, k: int, z: int, gauge: Optional[GaugeChoice] = None
) -> BlochVector:
    """
    Bloch vector of the eigenvector tagged ``(k, z)`` from the closed form.

    With ``q = g00/g01`` and weights ``s``, ``s'`` on the two wavenumbers of
    the eigenvector::

        Theta = s^2 q(k) + s'^2 q(k')
        rx = -2 Re Theta,  ry = -2 Im Theta
        rz = s^2 (1 - |q(k)|^2) + s'^2 (1 - |q(k')|^2)

    For a conjugate pair ``(k, k')`` with ``k < k'`` the tag ``k`` denotes
    member 1 and ``k'`` member 2 of the gauge-selected pair, matching
    :func:`full_eigenbasis`.
    """
    if params.R == 1.0:
        # diagonal coin: eigenvectors are coin basis states at the poles
        g = eigenvector_bias_one(params, k, z).state.grid
        return BlochVector(0.0, 0.0, float(abs(g[k, 0]) ** 2 - abs(g[k, 1]) ** 2))

    lam = eigenphase(params, k, z)
    report = degeneracy_report(params)
    partner = report.partner(k) if report.is_degenerate else None

    def q(kk):
        g = g_elements(params, lam, kk)
        return g.g00 / g.g01

    if partner is None:
        qk = q(k)
        s2 = 1.0 / (1.0 + abs(qk) ** 2)
        terms = [(s2, qk)]
    else:
        lo, hi = sorted((k, partner))
        if gauge is None:
            gauge = equal_weight_gauge(params, lo, hi, z)
        w = pair_weights(params, lo, hi, z, gauge)
        s, sp = (w.s1, w.s1p) if k == lo else (w.s2, w.s2p)
        terms = [(s * s, q(lo)), (sp * sp, q(hi))]

    theta = sum(w2 * qq for w2, qq in terms)
    rz = sum(w2 * (1.0 - abs(qq) ** 2) for w2, qq in terms)
    return BlochVector(float(-2 * theta.real), float(-2 * theta.imag), float(rz))


@dataclass(frozen=True)
class BlochRecord:
    R: float
    alpha: float
    beta: float
    k: int
    z: int
    bloch: BlochVector
    member: Optional[int] = None

    CSV_COLUMNS = ("R", "alpha", "beta", "k", "z", "rx", "ry", "rz", "r", "theta", "phi")

    def row(self) -> tuple:
        b = self.bloch
        return (self.R, self.alpha, self.beta, self.k, self.z,
                b.rx, b.ry, b.rz, b.r, b.theta, b.phi)

    def as_dict(self) -> dict:
        d = dict(zip(self.CSV_COLUMNS, self.row()))
        d["phi_defined"] = self.bloch.phi_defined
        d["member"] = self.member
        return d


def trajectory(
    sweep: Iterable[CoinParams],
    ks: Optional[Sequence[int]] = None,
    zs: Sequence[int] = (1, 2),
    gauge=None,
) -> List[BlochRecord]:
    """
    Bloch vectors of eigenstates over a parameter sweep.

    Records are ordered by sweep point, then ``z``, then ``k``. Vectors are
    taken from :func:`full_eigenbasis` via the partial trace.
    """
    out = []
    for params in sweep:
        basis = full_eigenbasis(params, gauge)
        kset = range(params.N) if ks is None else ks
        for z in zs:
            for k in kset:
                v = basis.find(k, z)
                out.append(
                    BlochRecord(params.R, params.alpha, params.beta, k, z,
                                bloch_vector(reduced_coin_state(v.state)), v.member)
                )
    return out
