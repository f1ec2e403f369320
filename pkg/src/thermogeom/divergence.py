"""Renyi alpha-divergences, quantum relative entropy, von Neumann entropy.

Two independent Renyi formulas are kept side by side: the power-trace form
for alpha in [0, 1) and the sandwiched form (used for alpha > 1, and
available on its own for cross-checks at alpha = 1/2).  Infinite
divergences are returned as ``math.inf`` rather than raised, so bound
checks against them stay evaluable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphaOne, DimMismatch, SigmaSingular, ThermoGeomError
from .spectral import DensityOperator, DiagonalDensity, eigen_segments

_RANK_TOL = 1e-12


@dataclass(frozen=True)
class DivergenceValue:
    """A divergence of order ``alpha``, in nats; nonnegative for valid pairs."""

    alpha: float
    value: float


def _as_matrix(rho: DensityOperator) -> np.ndarray:
    if isinstance(rho, DiagonalDensity):
        return rho.to_dense().matrix.entries
    return rho.matrix.entries


def _matrix_power(matrix: np.ndarray, exponent: float) -> np.ndarray:
    """PSD matrix power via eigendecomposition, clipping negative rounding."""
    vals, vecs = np.linalg.eigh(matrix)
    vals = np.clip(vals, 0.0, None)
    if exponent < 0 and np.min(vals) <= _RANK_TOL:
        raise SigmaSingular("negative power of a singular operator")
    return (vecs * np.power(vals, exponent)) @ vecs.conj().T


def _check_dims(rho: DensityOperator, sigma: DensityOperator) -> None:
    if rho.dim != sigma.dim:
        raise DimMismatch(f"dimension mismatch: {rho.dim} vs {sigma.dim}")


def _diag_power_trace(rho, sigma, alpha: float) -> float:
    total = 0.0
    for count, pa, pb in eigen_segments(rho, sigma):
        pa = max(pa, 0.0)
        pb = max(pb, 0.0)
        if alpha > 1.0 and pb <= _RANK_TOL:
            raise SigmaSingular("reference state singular for alpha > 1")
        if pa == 0.0 and alpha > 0.0:
            continue
        # 0**0 == 1 by convention, matching identity powers on the dense path
        total += count * pa**alpha * pb ** (1.0 - alpha)
    return total


def renyi_divergence(
    rho: DensityOperator, sigma: DensityOperator, alpha: float
) -> DivergenceValue:
    """Renyi divergence of order ``alpha``.

    For alpha in [0, 1) this is ln tr(rho^alpha sigma^(1-alpha)) / (alpha-1);
    for alpha > 1 the sandwiched form is used, which requires ``sigma`` to
    be full rank.  alpha = 1 is excluded; that limit is
    :func:`relative_entropy`.
    """
    if alpha == 1.0:
        raise AlphaOne("alpha = 1 is the relative-entropy limit")
    if alpha < 0.0:
        raise ThermoGeomError(f"alpha must be nonnegative, got {alpha}")
    _check_dims(rho, sigma)
    if alpha > 1.0:
        return sandwiched_renyi_divergence(rho, sigma, alpha)
    if isinstance(rho, DiagonalDensity) and isinstance(sigma, DiagonalDensity):
        tr = _diag_power_trace(rho, sigma, alpha)
    else:
        a = _matrix_power(_as_matrix(rho), alpha)
        b = _matrix_power(_as_matrix(sigma), 1.0 - alpha)
        tr = float(np.trace(a @ b).real)
    if tr <= 0.0:
        return DivergenceValue(alpha, math.inf)
    return DivergenceValue(alpha, math.log(tr) / (alpha - 1.0))


def sandwiched_renyi_divergence(
    rho: DensityOperator, sigma: DensityOperator, alpha: float
) -> DivergenceValue:
    """Sandwiched Renyi form ln tr((sigma^c rho sigma^c)^alpha) / (alpha-1)
    with c = (1-alpha)/(2 alpha).

    Agrees with :func:`renyi_divergence` whenever the operands commute;
    both are implemented independently so that agreement can be tested
    rather than assumed.
    """
    if alpha == 1.0:
        raise AlphaOne("alpha = 1 is the relative-entropy limit")
    if alpha <= 0.0:
        raise ThermoGeomError(f"alpha must be positive, got {alpha}")
    _check_dims(rho, sigma)
    if isinstance(rho, DiagonalDensity) and isinstance(sigma, DiagonalDensity):
        tr = _diag_power_trace(rho, sigma, alpha)
    else:
        c = (1.0 - alpha) / (2.0 * alpha)
        half = _matrix_power(_as_matrix(sigma), c)
        inner = half @ _as_matrix(rho) @ half
        inner = (inner + inner.conj().T) / 2.0
        vals = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
        tr = float(np.sum(np.power(vals, alpha)))
    if tr <= 0.0:
        return DivergenceValue(alpha, math.inf)
    return DivergenceValue(alpha, math.log(tr) / (alpha - 1.0))


def s_half(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Order-1/2 divergence -2 ln tr(sqrt(rho) sqrt(sigma)).

    The maximal conditional entropy between the two states.  For commuting
    pairs it equals -2 ln F and thus -ln cos^2 of the Bures angle.  A
    vanishing overlap returns ``math.inf``.
    """
    _check_dims(rho, sigma)
    if isinstance(rho, DiagonalDensity) and isinstance(sigma, DiagonalDensity):
        tr = 0.0
        for count, pa, pb in eigen_segments(rho, sigma):
            if pa > 0.0 and pb > 0.0:
                tr += count * math.sqrt(pa * pb)
    else:
        a = _matrix_power(_as_matrix(rho), 0.5)
        b = _matrix_power(_as_matrix(sigma), 0.5)
        tr = float(np.trace(a @ b).real)
    if tr <= 0.0:
        return math.inf
    return -2.0 * math.log(tr)


def relative_entropy(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Quantum relative entropy tr(rho ln rho - rho ln sigma), with
    0 ln 0 := 0.

    Returns ``math.inf`` when the support of ``rho`` leaks outside the
    support of ``sigma``.
    """
    _check_dims(rho, sigma)
    if isinstance(rho, DiagonalDensity) and isinstance(sigma, DiagonalDensity):
        total = 0.0
        for count, pa, pb in eigen_segments(rho, sigma):
            if pa <= 0.0:
                continue
            if pb <= _RANK_TOL:
                return math.inf
            total += count * pa * (math.log(pa) - math.log(pb))
        return total
    rho_m = _as_matrix(rho)
    svals, svecs = np.linalg.eigh(_as_matrix(sigma))
    svals = np.clip(svals, 0.0, None)
    rvals = np.clip(np.linalg.eigvalsh(rho_m), 0.0, None)
    tr_rho_ln_rho = float(np.sum(rvals[rvals > 0.0] * np.log(rvals[rvals > 0.0])))
    occupancy = np.real(np.einsum("ij,jk,ki->i", svecs.conj().T, rho_m, svecs))
    tr_rho_ln_sigma = 0.0
    for occ, val in zip(occupancy, svals):
        if val <= _RANK_TOL:
            if occ > _RANK_TOL:
                return math.inf
            continue
        tr_rho_ln_sigma += occ * math.log(val)
    return tr_rho_ln_rho - tr_rho_ln_sigma


def von_neumann_entropy(rho: DensityOperator) -> float:
    """Von Neumann entropy -tr(rho ln rho), in [0, ln dim]."""
    if isinstance(rho, DiagonalDensity):
        total = 0.0
        for weight, mult in zip(rho.probs, rho.spectrum.multiplicities):
            if weight > 0.0:
                total -= weight * (math.log(weight) - math.log(mult))
        return total
    vals = np.clip(rho.eigen_probabilities(), 0.0, None)
    vals = vals[vals > 0.0]
    return float(-np.sum(vals * np.log(vals)))
