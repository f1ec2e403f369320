"""Thermal ensembles over spectra and their exact identity/bound toolbox.

Conventions: k_B = hbar = 1, so beta = 1/T and all entropies are in nats.
Every partition sum runs in shifted log space (the minimum energy is
subtracted before exponentiating), which keeps beta * E up to several
hundred safe; ln Z and ln Z' are the primary stored quantities and the
plain Z, Z' floats are derived from them.

Besides the usual Z there is an auxiliary partition function
Z' = sum_i m_i exp(-beta E_i / 2) whose square ties the thermal state's
distance from the uniform state to the free energy; all identity
functions below are exact relations between these pieces and are
expected to hold to floating-point accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import logsumexp

from . import divergence, geometry
from .errors import (
    ApproxSingular,
    DimMismatch,
    NonPositiveTemperature,
    TemperatureOrder,
    ThermoGeomError,
)
from .spectral import DiagonalDensity, Spectrum

_APPROX_DEN_TOL = 1e-12


@dataclass(frozen=True)
class ThermalEnsemble:
    """Gibbs ensemble over a spectrum at fixed temperature.

    ``probs[k]`` is the occupation probability of a *single* eigenstate in
    level ``k`` (exp(-beta E_k)/Z), so the level as a whole carries
    ``multiplicities[k] * probs[k]``; those weighted probabilities sum
    to 1.

    Attributes
    ----------
    spectrum : Spectrum
        Energy levels with multiplicities.
    temperature, beta : float
        Temperature and its inverse (k_B = 1).
    ln_z, ln_z_prime : float
        log of Z = sum m exp(-beta E) and Z' = sum m exp(-beta E / 2).
    z, z_prime : float
        exp of the above; may overflow to inf for extreme beta * E, in
        which case the log forms remain exact.
    probs, ln_probs : ndarray
        Per-eigenstate occupation probabilities of each level and their
        logs (computed without underflow).
    internal_energy : float
        U = sum m p E.
    thermal_entropy : float
        S_th = -sum m p ln p.
    """

    spectrum: Spectrum
    temperature: float
    beta: float
    ln_z: float
    ln_z_prime: float
    z: float
    z_prime: float
    probs: np.ndarray
    ln_probs: np.ndarray
    internal_energy: float
    thermal_entropy: float

    @property
    def dim(self) -> int:
        return self.spectrum.total_dim

    def state(self) -> DiagonalDensity:
        """The Gibbs state as a compressed diagonal density operator."""
        return DiagonalDensity(
            self.spectrum, self.probs * self.spectrum.multiplicity_array
        )


@dataclass(frozen=True)
class Potentials:
    """Thermodynamic potentials Omega = -T ln Z and Omega' = -2T ln Z'."""

    omega: float
    omega_prime: float


def make_thermal(spectrum: Spectrum, temperature: float) -> ThermalEnsemble:
    """Build the Gibbs ensemble of ``spectrum`` at ``temperature``.

    Raises
    ------
    NonPositiveTemperature
        If ``temperature <= 0``; the zero-temperature limit is only ever
        approached numerically.
    """
    if temperature <= 0.0:
        raise NonPositiveTemperature(f"temperature must be > 0, got {temperature}")
    beta = 1.0 / temperature
    energies = spectrum.energies
    mult = spectrum.multiplicity_array
    shift = float(energies[0])

    x = -beta * (energies - shift)
    ln_z_shifted = float(logsumexp(x, b=mult))
    ln_z = -beta * shift + ln_z_shifted
    ln_z_prime = -0.5 * beta * shift + float(logsumexp(0.5 * x, b=mult))

    ln_probs = x - ln_z_shifted
    probs = np.exp(ln_probs)
    internal_energy = float(np.sum(mult * probs * energies))
    thermal_entropy = float(-np.sum(mult * probs * ln_probs))

    with np.errstate(over="ignore"):
        z = float(np.exp(ln_z))
        z_prime = float(np.exp(ln_z_prime))
    return ThermalEnsemble(
        spectrum=spectrum,
        temperature=float(temperature),
        beta=beta,
        ln_z=ln_z,
        ln_z_prime=ln_z_prime,
        z=z,
        z_prime=z_prime,
        probs=probs,
        ln_probs=ln_probs,
        internal_energy=internal_energy,
        thermal_entropy=thermal_entropy,
    )


def ln_dim(ens: ThermalEnsemble) -> float:
    """ln N for the ensemble's Hilbert space; exact for huge integer N."""
    return math.log(ens.dim)


def potentials(ens: ThermalEnsemble) -> Potentials:
    return Potentials(
        omega=-ens.temperature * ens.ln_z,
        omega_prime=-2.0 * ens.temperature * ens.ln_z_prime,
    )


def s_half_vs_mixed(ens: ThermalEnsemble) -> float:
    """Order-1/2 divergence of the Gibbs state from the uniform state.

    Computed in log space as ln N + ln Z - 2 ln Z'; must agree with the
    fidelity route -2 ln F on the explicit state.
    """
    return ln_dim(ens) + ens.ln_z - 2.0 * ens.ln_z_prime


def sqrt_prob_sum(ens: ThermalEnsemble) -> float:
    """Sum of square-rooted occupation probabilities over all eigenstates.

    Always >= 1, with equality only in the pure limit; equals
    sqrt(N) exp(-S/2) for S the order-1/2 divergence from the uniform
    state, which the identity suite checks.
    """
    return float(
        np.sum(ens.spectrum.multiplicity_array * np.exp(0.5 * ens.ln_probs))
    )


def z_prime_square_residuals(ens: ThermalEnsemble) -> tuple[float, float]:
    """Relative residuals of the two closed forms of Z'^2.

    Z'^2 equals N Z cos^2(d_B) and Z (1 + 2 cos_dW), with the angle and
    the distinguishability taken relative to the uniform state.  Both
    residuals are scaled by Z'^2 and evaluated in log space.
    """
    summary = geometry.summary_vs_maximally_mixed(ens.state())
    cos_sq_angle = math.cos(summary.bures_angle) ** 2
    # ln(N Z cos^2 d_B) - ln Z'^2 should vanish
    r1 = abs(
        1.0
        - math.exp(
            ln_dim(ens) + ens.ln_z + math.log(cos_sq_angle) - 2.0 * ens.ln_z_prime
        )
    )
    r2 = abs(
        1.0
        - (1.0 + 2.0 * summary.cos_dW) * math.exp(ens.ln_z - 2.0 * ens.ln_z_prime)
    )
    return r1, r2


def free_energy_relation(
    ens1: ThermalEnsemble, ens2: ThermalEnsemble
) -> tuple[float, float, float]:
    """Exact identity tying divergence changes to free-energy changes.

    Returns ``(lhs, rhs, residual)`` where
    lhs = T2 S(rho2 || rho*) - T1 S(rho1 || rho*) and
    rhs = -d(Omega) + d(Omega') + dT ln N.  The two sides are equal up to
    rounding; the residual is their absolute difference.
    """
    if ens1.dim != ens2.dim:
        raise DimMismatch(f"dimension mismatch: {ens1.dim} vs {ens2.dim}")
    if ens2.temperature < ens1.temperature:
        raise TemperatureOrder("expected T2 >= T1")
    lhs = delta_t(
        s_half_vs_mixed(ens2), s_half_vs_mixed(ens1),
        ens2.temperature, ens1.temperature,
    )
    p1, p2 = potentials(ens1), potentials(ens2)
    rhs = (
        -(p2.omega - p1.omega)
        + (p2.omega_prime - p1.omega_prime)
        + (ens2.temperature - ens1.temperature) * ln_dim(ens1)
    )
    return lhs, rhs, abs(lhs - rhs)


def omega_prime_decomposition(ens: ThermalEnsemble) -> float:
    """Residual of the decomposition of Omega' into entropic pieces.

    Omega' = T D(rho||rho*) + U + T S(rho||rho*) - 2 T ln N, where the
    relative entropy of a Gibbs state from the uniform state is
    ln N - S_th.  Exact identity; returns the absolute residual.
    """
    t = ens.temperature
    rel_ent = ln_dim(ens) - ens.thermal_entropy
    rhs = (
        t * rel_ent
        + ens.internal_energy
        + t * s_half_vs_mixed(ens)
        - 2.0 * t * ln_dim(ens)
    )
    return abs(potentials(ens).omega_prime - rhs)


def entropy_bound(ens: ThermalEnsemble) -> tuple[float, float, float]:
    """Geometric upper bound on the thermal entropy.

    Returns ``(thermal_entropy, bound, slack)`` with
    bound = ln N - S(rho||rho*) and slack = bound - thermal_entropy >= 0
    up to rounding.  The bound follows from Jensen's inequality applied to
    the square-rooted occupation sum and saturates at the uniform and
    pure limits.
    """
    bound = ln_dim(ens) - s_half_vs_mixed(ens)
    return ens.thermal_entropy, bound, bound - ens.thermal_entropy


def z_prime_jensen_slack(ens: ThermalEnsemble) -> float:
    """Slack of the Jensen bound 2 T ln Z' >= 2 T S_th - U (>= 0).

    Equivalently Omega' <= U - 2 T S_th, a first-law style constraint on
    the auxiliary potential.  Equality holds exactly when all levels share
    one energy, and in the pure limit.
    """
    t = ens.temperature
    return 2.0 * t * ens.ln_z_prime - (
        2.0 * t * ens.thermal_entropy - ens.internal_energy
    )


def classical_consistency(
    ens1: ThermalEnsemble, ens2: ThermalEnsemble
) -> float:
    """Residual of -d(Omega) + d(U) = T2 S_vN(rho2) - T1 S_vN(rho1).

    The von Neumann entropies are evaluated on the explicit Gibbs states,
    so this closes the loop back to conventional thermodynamics through
    an independent arithmetic path.
    """
    if ens1.dim != ens2.dim:
        raise DimMismatch(f"dimension mismatch: {ens1.dim} vs {ens2.dim}")
    if ens2.temperature < ens1.temperature:
        raise TemperatureOrder("expected T2 >= T1")
    p1, p2 = potentials(ens1), potentials(ens2)
    lhs = -(p2.omega - p1.omega) + (ens2.internal_energy - ens1.internal_energy)
    rhs = delta_t(
        divergence.von_neumann_entropy(ens2.state()),
        divergence.von_neumann_entropy(ens1.state()),
        ens2.temperature,
        ens1.temperature,
    )
    return abs(lhs - rhs)


def geometric_h(ens: ThermalEnsemble, g_const: float = math.pi) -> float:
    """Ingredient h = sqrt(1 + g e^S / N) (S - ln N + 1/2) of the closed
    free-energy approximation, with S the divergence from the uniform state."""
    s = s_half_vs_mixed(ens)
    q = math.exp(s - ln_dim(ens))
    return math.sqrt(1.0 + g_const * q) * (s - ln_dim(ens) + 0.5)


def omega_approx(
    ens: ThermalEnsemble,
    order: Union[int, str],
    g_const: float = math.pi,
) -> float:
    """Approximate free energy from the divergence vs the uniform state.

    ``order`` selects the truncation: 1 and 2 are the printed series
    orders; ``"closed"`` is the square-root resummation with constant
    ``g_const`` (pi by default, the empirically fixed value).

    Raises
    ------
    ApproxSingular
        When an order-1/2 denominator vanishes, which happens as the
        state approaches the uniform one (e^S / N -> 1).
    """
    t = ens.temperature
    s = s_half_vs_mixed(ens)
    lnn = ln_dim(ens)
    q = math.exp(s - lnn)
    if order == 1:
        den = 1.0 - q
        if abs(den) < _APPROX_DEN_TOL:
            raise ApproxSingular("first-order denominator vanished")
        return t * (s - q - lnn + 1.0) / den
    if order == 2:
        den = 1.0 - 2.0 * q + q * q
        if abs(den) < _APPROX_DEN_TOL:
            raise ApproxSingular("second-order denominator vanished")
        return t * (s - 2.0 * q + 0.5 * q * q - lnn + 1.5) / den
    if order == "closed":
        return t * (math.sqrt(1.0 + g_const * q) * (s - lnn + 0.5) + 1.0)
    raise ThermoGeomError(f"order must be 1, 2 or 'closed', got {order!r}")


def delta_t(x2: float, x1: float, t2: float, t1: float) -> float:
    """Temperature-weighted difference T2 x2 - T1 x1 (k_B = 1)."""
    return t2 * x2 - t1 * x1


def occupation_reconstruction_residual(ens: ThermalEnsemble) -> float:
    """Max error of rebuilding occupations from N, Z' and the divergence.

    p_i = N exp(-beta E_i) exp(-S) / Z'^2 must reproduce the stored
    probabilities; evaluated in log space to survive large beta * E.
    """
    ln_rebuilt = (
        ln_dim(ens)
        - ens.beta * ens.spectrum.energies
        - s_half_vs_mixed(ens)
        - 2.0 * ens.ln_z_prime
    )
    return float(np.max(np.abs(np.exp(ln_rebuilt) - ens.probs)))


def ensemble_summary(ens: ThermalEnsemble) -> dict:
    """JSON-ready record of the ensemble's headline quantities."""
    pots = potentials(ens)
    return {
        "N": ens.dim,
        "T": ens.temperature,
        "Z": ens.z,
        "Zprime": ens.z_prime,
        "U": ens.internal_energy,
        "S_th": ens.thermal_entropy,
        "omega": pots.omega,
        "omega_prime": pots.omega_prime,
        "s_half": s_half_vs_mixed(ens),
    }
