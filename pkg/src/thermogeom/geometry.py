"""Statistical distances between density operators.

Root fidelity, the Bures distance and angle it induces, and a pairwise
distinguishability measure over occupation probabilities.  Commuting
(diagonal) pairs take an O(levels) fast path that never expands
multiplicities; the general matrix route exists for dense inputs.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DimMismatch, NotNormalized
from .spectral import (
    DensityOperator,
    DiagonalDensity,
    eigen_segments,
    maximally_mixed,
)

_NORM_TOL = 1e-8


@dataclass(frozen=True)
class GeometrySummary:
    """Distance measures of one state relative to a reference state.

    ``cos_dW`` is the pairwise distinguishability sum; it can exceed 1
    (its maximum is (N-1)/2), so it is stored raw and never fed to arccos.
    """

    root_fidelity: float
    bures_distance: float
    bures_angle: float
    cos_dW: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _sqrt_psd(matrix: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(matrix)
    root = np.sqrt(np.clip(vals, 0.0, None))
    return (vecs * root) @ vecs.conj().T


def _as_matrix(rho: DensityOperator) -> np.ndarray:
    if isinstance(rho, DiagonalDensity):
        return rho.to_dense().matrix.entries
    return rho.matrix.entries


def root_fidelity(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Uhlmann root fidelity F = tr sqrt(sqrt(sigma) rho sqrt(sigma)).

    For a pair of diagonal operators (commuting in a shared basis) this
    reduces to the Bhattacharyya overlap sum of eigenvalue pairs, computed
    over the compressed level refinement.
    """
    if rho.dim != sigma.dim:
        raise DimMismatch(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    if isinstance(rho, DiagonalDensity) and isinstance(sigma, DiagonalDensity):
        total = 0.0
        for count, pa, pb in eigen_segments(rho, sigma):
            if pa > 0.0 and pb > 0.0:
                total += count * math.sqrt(pa * pb)
        return total
    sqrt_sigma = _sqrt_psd(_as_matrix(sigma))
    inner = sqrt_sigma @ _as_matrix(rho) @ sqrt_sigma
    inner = (inner + inner.conj().T) / 2.0
    vals = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
    return float(np.sum(np.sqrt(vals)))


def bures_distance(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Bures distance tr(rho) + tr(sigma) - 2 F(rho, sigma).

    Equals 2 - 2F for normalized states; ranges over [0, 2].
    """
    return rho.trace() + sigma.trace() - 2.0 * root_fidelity(rho, sigma)


def bures_angle(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Bures angle arccos F, in [0, pi/2].

    The fidelity is clamped to [0, 1] first; floating point can push it a
    hair above 1.
    """
    f = root_fidelity(rho, sigma)
    return math.acos(min(max(f, 0.0), 1.0))


def sqrt_prob_total(probs, multiplicities=None) -> float:
    """Sum of square roots of eigenvalue probabilities.

    ``probs`` holds per-eigenvalue probabilities; with ``multiplicities``
    each entry is counted that many times (compressed form).
    """
    p = np.asarray(probs, dtype=float)
    if multiplicities is None:
        total = float(np.sum(p))
        s = float(np.sum(np.sqrt(np.clip(p, 0.0, None))))
    else:
        m = np.asarray(multiplicities, dtype=float)
        total = float(np.sum(m * p))
        s = float(np.sum(m * np.sqrt(np.clip(p, 0.0, None))))
    if abs(total - 1.0) > _NORM_TOL:
        raise NotNormalized(f"probabilities sum to {total!r}, expected 1")
    return s


def cos_dw(probs, multiplicities=None) -> float:
    """Pairwise distinguishability sum_{i<j} sqrt(p_i p_j).

    Computed through the stable O(N) identity ((sum_i sqrt(p_i))^2 - 1)/2
    rather than the O(N^2) double sum.  Bounded by (N-1)/2 with equality
    at the uniform distribution; 0 for a pure state.  Not a true cosine.
    """
    s = sqrt_prob_total(probs, multiplicities)
    return (s * s - 1.0) / 2.0


def summary_vs_maximally_mixed(rho: DensityOperator) -> GeometrySummary:
    """Distances of ``rho`` relative to the uniform state of equal dimension."""
    mixed = maximally_mixed(rho.dim)
    f = root_fidelity(rho, mixed)
    if isinstance(rho, DiagonalDensity):
        cw = cos_dw(rho.level_eigen_probs(), rho.spectrum.multiplicities)
    else:
        cw = cos_dw(np.clip(rho.eigen_probabilities(), 0.0, None))
    return GeometrySummary(
        root_fidelity=f,
        bures_distance=rho.trace() + 1.0 - 2.0 * f,
        bures_angle=math.acos(min(max(f, 0.0), 1.0)),
        cos_dW=cw,
    )


def angle_distinguishability_residual(summary: GeometrySummary, n: int) -> float:
    """Residual of cos^2(bures_angle) = (1 + 2 cos_dW) / n.

    The identity ties the angle relative to the uniform state to the
    pairwise distinguishability of the occupation probabilities; the
    caller asserts the residual against its tolerance.
    """
    lhs = math.cos(summary.bures_angle) ** 2
    rhs = (1.0 + 2.0 * summary.cos_dW) / n
    return abs(lhs - rhs)
