"""Bures-geometric toolkit for equilibrium quantum statistical thermodynamics.

Distances between density operators measured relative to the maximally
mixed state, the exact identities and bounds connecting them to partition
functions and free energies, and an ideal quantum Otto engine with
two-point-measurement work statistics.
"""

from .divergence import (
    DivergenceValue,
    relative_entropy,
    renyi_divergence,
    s_half,
    sandwiched_renyi_divergence,
    von_neumann_entropy,
)
from .engine import (
    OttoCycleResult,
    WorkBoundSlacks,
    WorkDistribution,
    geo_free_change_approx,
    jarzynski_residual,
    otto_cycle,
    rabi_sweep,
    tpm_work_distribution,
    work_bound_check,
    work_distance_sides,
)
from .geometry import (
    GeometrySummary,
    angle_distinguishability_residual,
    bures_angle,
    bures_distance,
    cos_dw,
    root_fidelity,
    summary_vs_maximally_mixed,
)
from .models import (
    RabiParams,
    harmonic_spectrum,
    rabi_hamiltonian,
    spin_ensemble_spectrum,
)
from .spectral import (
    DenseDensity,
    DensityOperator,
    DiagonalDensity,
    HermitianMatrix,
    Spectrum,
    eigendecompose,
    maximally_mixed,
    validate_density,
)
from .thermo import (
    Potentials,
    ThermalEnsemble,
    classical_consistency,
    delta_t,
    ensemble_summary,
    entropy_bound,
    free_energy_relation,
    make_thermal,
    omega_approx,
    omega_prime_decomposition,
    potentials,
    s_half_vs_mixed,
    sqrt_prob_sum,
    z_prime_jensen_slack,
    z_prime_square_residuals,
)

__version__ = "0.1.0"

__all__ = [
    "DenseDensity",
    "DensityOperator",
    "DiagonalDensity",
    "DivergenceValue",
    "GeometrySummary",
    "HermitianMatrix",
    "OttoCycleResult",
    "Potentials",
    "RabiParams",
    "Spectrum",
    "ThermalEnsemble",
    "WorkBoundSlacks",
    "WorkDistribution",
    "angle_distinguishability_residual",
    "bures_angle",
    "bures_distance",
    "classical_consistency",
    "cos_dw",
    "delta_t",
    "eigendecompose",
    "ensemble_summary",
    "entropy_bound",
    "free_energy_relation",
    "geo_free_change_approx",
    "harmonic_spectrum",
    "jarzynski_residual",
    "make_thermal",
    "maximally_mixed",
    "omega_approx",
    "omega_prime_decomposition",
    "otto_cycle",
    "potentials",
    "rabi_hamiltonian",
    "rabi_sweep",
    "relative_entropy",
    "renyi_divergence",
    "root_fidelity",
    "s_half",
    "s_half_vs_mixed",
    "sandwiched_renyi_divergence",
    "spin_ensemble_spectrum",
    "sqrt_prob_sum",
    "summary_vs_maximally_mixed",
    "tpm_work_distribution",
    "validate_density",
    "von_neumann_entropy",
    "work_bound_check",
    "work_distance_sides",
    "z_prime_jensen_slack",
    "z_prime_square_residuals",
]
