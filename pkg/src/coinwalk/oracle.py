"""
Brute-force verification by dense diagonalization.

Nothing here uses the closed-form spectrum or eigenvectors; the step
operator is realised as an explicit matrix and handed to a general complex
eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from .coin import CoinParams
from .errors import OracleError
from .operator import DENSE_LIMIT, StepOperator, build_dense
from .phase import circle_distance

__all__ = [
    "CLUSTER_RADIUS",
    "MATCH_RADIUS",
    "OracleResult",
    "SpectrumComparison",
    "cluster_phases",
    "compare_spectra",
    "dense_eigendecompose",
]

CLUSTER_RADIUS = 1e-8
MATCH_RADIUS = 1e-8


@dataclass(frozen=True, eq=False)
class OracleResult:
    eigenvalues: NDArray[np.complex128]
    eigenvectors: NDArray[np.complex128]
    residual: float
    clusters: Tuple[Tuple[int, ...], ...]
    matrix: NDArray[np.complex128]

    @property
    def phases(self) -> NDArray[np.float64]:
        return np.angle(self.eigenvalues)

    def cluster_sizes(self) -> List[int]:
        return [len(c) for c in self.clusters]

    def multiplicity(self, lam: float, radius: float = CLUSTER_RADIUS) -> int:
        return int(np.sum(circle_distance(self.phases, lam) < radius))


def cluster_phases(phases: NDArray[np.float64], radius: float = CLUSTER_RADIUS):
    """Greedy grouping of phases lying within ``radius`` of a seed on the circle."""
    unassigned = list(range(len(phases)))
    clusters = []
    while unassigned:
        seed = unassigned[0]
        d = circle_distance(phases[unassigned], phases[seed])
        members = [i for i, di in zip(unassigned, np.atleast_1d(d)) if di < radius]
        clusters.append(tuple(members))
        unassigned = [i for i in unassigned if i not in members]
    return tuple(clusters)


def dense_eigendecompose(params: CoinParams, limit: int = DENSE_LIMIT) -> OracleResult:
    """
    Full eigendecomposition of the dense step operator.

    Eigenvectors within each degenerate cluster are re-orthonormalised.

    Raises
    ------
    OracleError
        If the eigensolver fails or the result violates unitarity.
    """
    U = build_dense(StepOperator.from_params(params), limit)
    try:
        w, V = np.linalg.eig(U)
    except np.linalg.LinAlgError as exc:
        raise OracleError(f"dense eigensolver failed: {exc}") from exc
    clusters = cluster_phases(np.angle(w))
    V = V.copy()
    for c in clusters:
        idx = list(c)
        Q, _ = np.linalg.qr(V[:, idx])
        V[:, idx] = Q
    residual = float(np.max(np.linalg.norm(U @ V - V * w, axis=0)))
    off_circle = float(np.max(np.abs(np.abs(w) - 1.0)))
    if off_circle > 1e-10 or residual > 1e-10:
        raise OracleError(
            f"oracle inconsistent: |lambda| deviation {off_circle:.2e}, residual {residual:.2e}"
        )
    return OracleResult(w, V, residual, clusters, U)


@dataclass
class SpectrumComparison:
    max_mismatch: float
    passed: bool
    offending: List[Tuple[int, int, float]] = field(default_factory=list)
    unmatched: int = 0


def compare_spectra(closed_form: Sequence, oracle: OracleResult,
                    radius: float = MATCH_RADIUS) -> SpectrumComparison:
    """
    Match closed-form phases to oracle eigenvalues on the unit circle.

    ``closed_form`` holds objects with ``k``, ``z`` and ``lam`` attributes.
    Each is paired greedily with its nearest unused oracle eigenvalue; any
    distance above ``radius`` is reported with its ``(k, z)`` label.
    """
    phases = oracle.phases
    free = np.ones(len(phases), dtype=bool)
    worst = 0.0
    offending = []
    for p in closed_form:
        d = np.where(free, circle_distance(phases, p.lam), np.inf)
        j = int(np.argmin(d))
        dist = float(d[j])
        if not np.isfinite(dist):
            offending.append((p.k, p.z, float("inf")))
            continue
        free[j] = False
        worst = max(worst, dist)
        if dist > radius:
            offending.append((p.k, p.z, dist))
    unmatched = int(free.sum())
    passed = not offending and unmatched == 0 and len(closed_form) == len(phases)
    return SpectrumComparison(worst, passed, offending, unmatched)
