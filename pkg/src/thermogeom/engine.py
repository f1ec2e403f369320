"""Ideal quantum Otto cycle, TPM work statistics, and work-distance bounds.

The cycle alternates full thermalization (isochores) with ideal adiabats
that carry eigen-populations across the two Hamiltonians in ascending
energy order.  Work is positive when extracted by the engine.  The
two-point-measurement (TPM) construction provides the work distribution
of a sudden quench, for which the Jarzynski equality holds exactly.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from . import divergence, thermo
from .errors import DimMismatch, NegativeWork, TemperatureOrder
from .models import RabiParams, rabi_hamiltonian
from .spectral import (
    HermitianMatrix,
    Spectrum,
    eigendecompose,
    maximally_mixed,
)

_WORK_MERGE_TOL = 1e-12

SWEEP_CSV_COLUMNS = (
    "g_over_omega",
    "T2",
    "W_net",
    "kappa",
    "zeta",
    "efficiency",
    "eta_c",
)


@dataclass(frozen=True)
class OttoCycleResult:
    """Energetics and distance diagnostics of one ideal Otto cycle.

    ``kappa = (T_hot S_R_hot - T_cold S_R_cold - W_net) / (T_cold ln N)``
    is bounded above by ``zeta = eta_c / (1 - eta_c)`` whenever the cycle
    extracts positive work; both are carried so sweeps can check the
    bound directly.  Corner energies follow the conventional A (cold
    thermal), B (after compression), C (hot thermal), D (after expansion)
    labels.
    """

    w_net: float
    q_hot: float
    q_cold: float
    efficiency: float
    kappa: float
    zeta: float
    s_r_cold: float
    s_r_hot: float
    t_cold: float
    t_hot: float
    energy_a: float
    energy_b: float
    energy_c: float
    energy_d: float
    populations_cold: np.ndarray
    populations_hot: np.ndarray


@dataclass(frozen=True)
class WorkBoundSlacks:
    """Slacks of the work bound and its two Carnot rearrangements (all >= 0)."""

    work_slack: float
    carnot_ratio_slack: float
    carnot_slack: float


@dataclass(frozen=True)
class WorkDistribution:
    """TPM work outcomes ``(w, probability)``, sorted by w, summing to 1."""

    outcomes: tuple[tuple[float, float], ...]

    def total_probability(self) -> float:
        return float(sum(p for _, p in self.outcomes))

    def values(self) -> np.ndarray:
        return np.array([w for w, _ in self.outcomes])

    def probabilities(self) -> np.ndarray:
        return np.array([p for _, p in self.outcomes])


def _thermal_corner(
    eigenvalues: np.ndarray, temperature: float
) -> tuple[thermo.ThermalEnsemble, np.ndarray, float]:
    """Thermal ensemble on a raw eigenvalue array, its expanded populations,
    and its divergence from the uniform state."""
    spectrum = Spectrum.from_eigenvalues(eigenvalues)
    ens = thermo.make_thermal(spectrum, temperature)
    populations = np.repeat(ens.probs, spectrum.multiplicities)
    s_r = divergence.s_half(ens.state(), maximally_mixed(ens.dim))
    return ens, populations, s_r


def otto_cycle(
    h_cold: HermitianMatrix,
    h_hot: HermitianMatrix,
    t_cold: float,
    t_hot: float,
) -> OttoCycleResult:
    """Run one ideal four-stroke Otto cycle between two Hamiltonians.

    Strokes: thermalize under ``h_cold`` at ``t_cold``; carry the
    eigen-populations onto ``h_hot`` in ascending energy order; thermalize
    at ``t_hot``; carry the hot populations back.  Heats are the energy
    gained during each thermalization, so energy conservation
    ``w_net = q_hot + q_cold`` holds by construction.
    """
    if h_cold.dim != h_hot.dim:
        raise DimMismatch(f"dimension mismatch: {h_cold.dim} vs {h_hot.dim}")
    if t_hot < t_cold:
        raise TemperatureOrder("expected t_hot >= t_cold")
    n = h_cold.dim
    evs_cold = np.linalg.eigvalsh(h_cold.entries)
    evs_hot = np.linalg.eigvalsh(h_hot.entries)

    ens_cold, pop_cold, s_r_cold = _thermal_corner(evs_cold, t_cold)
    ens_hot, pop_hot, s_r_hot = _thermal_corner(evs_hot, t_hot)

    energy_a = float(pop_cold @ evs_cold)
    energy_b = float(pop_cold @ evs_hot)
    energy_c = float(pop_hot @ evs_hot)
    energy_d = float(pop_hot @ evs_cold)

    q_hot = energy_c - energy_b
    q_cold = energy_a - energy_d
    w_net = q_hot + q_cold
    eta_c = 1.0 - t_cold / t_hot
    kappa = (
        thermo.delta_t(s_r_hot, s_r_cold, t_hot, t_cold) - w_net
    ) / (t_cold * math.log(n))
    return OttoCycleResult(
        w_net=w_net,
        q_hot=q_hot,
        q_cold=q_cold,
        efficiency=w_net / q_hot if q_hot > 0.0 else math.nan,
        kappa=kappa,
        zeta=eta_c / (1.0 - eta_c),
        s_r_cold=s_r_cold,
        s_r_hot=s_r_hot,
        t_cold=float(t_cold),
        t_hot=float(t_hot),
        energy_a=energy_a,
        energy_b=energy_b,
        energy_c=energy_c,
        energy_d=energy_d,
        populations_cold=pop_cold,
        populations_hot=pop_hot,
    )


def work_bound_check(result: OttoCycleResult, n: int) -> WorkBoundSlacks:
    """Slacks of W >= dT-weighted divergence change minus dT ln N.

    Also evaluates the two Carnot rearrangements (the zeta - kappa gap and
    its T_hot-scaled sibling).  Only meaningful for nonnegative net work.
    """
    if result.w_net < 0.0:
        raise NegativeWork(f"net work is negative: {result.w_net!r}")
    ln_n = math.log(n)
    d_t_s = thermo.delta_t(
        result.s_r_hot, result.s_r_cold, result.t_hot, result.t_cold
    )
    d_t = result.t_hot - result.t_cold
    eta_c = 1.0 - result.t_cold / result.t_hot
    work_slack = result.w_net - (d_t_s - d_t * ln_n)
    carnot_ratio_slack = result.zeta - (d_t_s - result.w_net) / (
        result.t_cold * ln_n
    )
    carnot_slack = eta_c - (d_t_s - result.w_net) / (result.t_hot * ln_n)
    return WorkBoundSlacks(work_slack, carnot_ratio_slack, carnot_slack)


def tpm_work_distribution(
    h_initial: HermitianMatrix,
    h_final: HermitianMatrix,
    temperature: float,
) -> WorkDistribution:
    """Two-point-measurement work distribution of a sudden quench.

    Starting from the Gibbs state of ``h_initial``, measure energy,
    quench to ``h_final``, measure again: outcome ``w = E_f[j] - E_i[i]``
    with probability ``p_i |<f_j|i_i>|^2``.  Outcomes closer than 1e-12
    are merged, which keeps degenerate subspaces basis-independent.
    """
    if h_initial.dim != h_final.dim:
        raise DimMismatch(
            f"dimension mismatch: {h_initial.dim} vs {h_final.dim}"
        )
    evs_i, vecs_i = eigendecompose(h_initial)
    evs_f, vecs_f = eigendecompose(h_final)
    ens = thermo.make_thermal(Spectrum.from_eigenvalues(evs_i), temperature)
    populations = np.repeat(ens.probs, ens.spectrum.multiplicities)

    overlap = np.abs(vecs_f.conj().T @ vecs_i) ** 2  # [final, initial]
    work = evs_f[:, None] - evs_i[None, :]
    probability = overlap * populations[None, :]

    order = np.argsort(work.ravel(), kind="stable")
    w_flat = work.ravel()[order]
    p_flat = probability.ravel()[order]
    outcomes: list[tuple[float, float]] = []
    anchor = w_flat[0]
    acc = 0.0
    for w, p in zip(w_flat, p_flat):
        if w - anchor > _WORK_MERGE_TOL:
            outcomes.append((float(anchor), float(acc)))
            anchor, acc = w, p
        else:
            acc += p
    outcomes.append((float(anchor), float(acc)))
    return WorkDistribution(tuple(outcomes))


def jarzynski_residual(
    dist: WorkDistribution,
    temperature: float,
    ln_z_initial: float,
    ln_z_final: float,
) -> float:
    """|ln <exp(-W/T)> - (ln Z_final - ln Z_initial)|; exact for TPM data."""
    w = dist.values()
    p = dist.probabilities()
    mask = p > 0.0
    lhs = float(logsumexp(np.log(p[mask]) - w[mask] / temperature))
    return abs(lhs - (ln_z_final - ln_z_initial))


def geo_free_change_approx(
    ens1: thermo.ThermalEnsemble,
    ens2: thermo.ThermalEnsemble,
    g_const: float = math.pi,
) -> tuple[float, float]:
    """Approximate free-energy change and Carnot efficiency from distances.

    Returns ``(minus_delta_omega_approx, eta_c_approx)``: the first is
    -dT-weighted h difference minus dT, the second rebuilds the Carnot
    efficiency from the exact free-energy change and the same h values.
    Reporting relations only; neither is an exact identity.
    """
    if ens2.temperature < ens1.temperature:
        raise TemperatureOrder("expected T2 >= T1")
    h1 = thermo.geometric_h(ens1, g_const)
    h2 = thermo.geometric_h(ens2, g_const)
    t1, t2 = ens1.temperature, ens2.temperature
    d_t_h = thermo.delta_t(h2, h1, t2, t1)
    minus_delta_omega = -d_t_h - (t2 - t1)
    delta_omega_exact = thermo.potentials(ens2).omega - thermo.potentials(ens1).omega
    eta_c_approx = (delta_omega_exact - d_t_h) / t2
    return minus_delta_omega, eta_c_approx


def work_distance_sides(
    dist: WorkDistribution,
    ens_cold: thermo.ThermalEnsemble,
    ens_hot: thermo.ThermalEnsemble,
    g_const: float = math.pi,
) -> tuple[float, float]:
    """Both sides of the approximate efficiency/work/distance relation.

    lhs is zeta = eta_c / (1 - eta_c); rhs combines the h-difference with
    the Jarzynski average of the work distribution at the cold
    temperature.  Emitted for inspection only, never asserted.
    """
    t1, t2 = ens_cold.temperature, ens_hot.temperature
    eta_c = 1.0 - t1 / t2
    lhs = eta_c / (1.0 - eta_c)
    d_t_h = thermo.delta_t(
        thermo.geometric_h(ens_hot, g_const),
        thermo.geometric_h(ens_cold, g_const),
        t2,
        t1,
    )
    w = dist.values()
    p = dist.probabilities()
    mask = p > 0.0
    ln_avg = float(logsumexp(np.log(p[mask]) - w[mask] / t1))
    return lhs, -d_t_h / t1 - ln_avg


def rabi_sweep(
    coupling_ratios,
    t_cold: float,
    t_hot_values,
    n_boson: int = 30,
    omega_cold: float = 1.0,
    omega_ratio: float = 2.0,
    epsilon_ratio: float = 0.005,
) -> list[dict]:
    """Otto-cycle sweep of the Rabi engine over coupling ratios.

    Both strokes use the same dimensionless coupling and symmetry-breaking
    ratios, so the hot Hamiltonian is the cold one with every term scaled
    by ``omega_ratio``.  Returns one record per (ratio, T_hot) pair with
    the columns of ``SWEEP_CSV_COLUMNS``.
    """
    omega_hot = omega_ratio * omega_cold
    records = []
    for ratio in coupling_ratios:
        h_cold = rabi_hamiltonian(RabiParams(
            omega=omega_cold,
            coupling=ratio * omega_cold,
            epsilon=epsilon_ratio * omega_cold,
            n_boson=n_boson,
        ))
        h_hot = rabi_hamiltonian(RabiParams(
            omega=omega_hot,
            coupling=ratio * omega_hot,
            epsilon=epsilon_ratio * omega_hot,
            n_boson=n_boson,
        ))
        for t_hot in t_hot_values:
            result = otto_cycle(h_cold, h_hot, t_cold, t_hot)
            records.append({
                "g_over_omega": float(ratio),
                "T2": float(t_hot),
                "W_net": result.w_net,
                "kappa": result.kappa,
                "zeta": result.zeta,
                "efficiency": result.efficiency,
                "eta_c": 1.0 - t_cold / t_hot,
            })
    return records


def write_sweep_csv(records: list[dict], path) -> None:
    """Write sweep records as CSV with the documented column order."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SWEEP_CSV_COLUMNS)
        for record in records:
            writer.writerow([repr(float(record[c])) for c in SWEEP_CSV_COLUMNS])
