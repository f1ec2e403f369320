"""Seeded randomized sweeps over the identity and bound suites.

Used by the CLI check commands and the acceptance tests.  Temperatures
are drawn log-uniformly so both deep-cold and near-classical regimes get
exercised; spectra carry random multiplicities so the compressed paths
are hit throughout.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import divergence, geometry, thermo
from .spectral import Spectrum, maximally_mixed

IDENTITY_TOL = 1e-9
BOUND_TOL = -1e-10


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check: extremal statistic vs its tolerance."""

    name: str
    statistic: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class CheckReport:
    kind: str
    seed: int
    samples: int
    results: tuple[CheckResult, ...]
    passed: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "seed": self.seed,
            "samples": self.samples,
            "results": [asdict(r) for r in self.results],
            "passed": self.passed,
        }


def random_spectrum(
    rng: np.random.Generator,
    max_levels: int = 16,
    max_multiplicity: int = 4,
    energy_scale: float = 2.0,
) -> Spectrum:
    """Random strictly-increasing spectrum with random multiplicities.

    Dimension is bounded by max_levels * max_multiplicity (64 by default).
    """
    n_levels = int(rng.integers(1, max_levels + 1))
    energies = np.unique(rng.uniform(-energy_scale, energy_scale, n_levels))
    mults = tuple(
        int(v) for v in rng.integers(1, max_multiplicity + 1, energies.size)
    )
    return Spectrum(energies, mults)


def _temperature_pair(rng, t_range) -> tuple[float, float]:
    lo, hi = np.log(t_range[0]), np.log(t_range[1])
    a, b = np.exp(rng.uniform(lo, hi, 2))
    return (float(a), float(b)) if a <= b else (float(b), float(a))


def identity_suite(
    seed: int,
    samples: int = 1000,
    t_range: tuple[float, float] = (0.01, 100.0),
) -> CheckReport:
    """Max residual of each exact identity over ``samples`` random spectra."""
    rng = np.random.default_rng(seed)
    worst: dict[str, float] = {
        "sqrt_prob_sum": 0.0,
        "angle_distinguishability": 0.0,
        "z_prime_square": 0.0,
        "s_half_log_form": 0.0,
        "free_energy_relation": 0.0,
        "omega_prime_decomposition": 0.0,
        "classical_consistency": 0.0,
        "occupation_reconstruction": 0.0,
    }
    for _ in range(samples):
        spectrum = random_spectrum(rng)
        n = spectrum.total_dim
        t1, t2 = _temperature_pair(rng, t_range)
        ens1 = thermo.make_thermal(spectrum, t1)
        ens2 = thermo.make_thermal(spectrum, t2)
        for ens in (ens1, ens2):
            s = thermo.s_half_vs_mixed(ens)
            worst["sqrt_prob_sum"] = max(
                worst["sqrt_prob_sum"],
                abs(thermo.sqrt_prob_sum(ens) - np.sqrt(n) * np.exp(-s / 2.0)),
            )
            summary = geometry.summary_vs_maximally_mixed(ens.state())
            worst["angle_distinguishability"] = max(
                worst["angle_distinguishability"],
                geometry.angle_distinguishability_residual(summary, n),
            )
            worst["z_prime_square"] = max(
                worst["z_prime_square"],
                max(thermo.z_prime_square_residuals(ens)),
            )
            worst["s_half_log_form"] = max(
                worst["s_half_log_form"],
                abs(s - divergence.s_half(ens.state(), maximally_mixed(n))),
            )
            worst["omega_prime_decomposition"] = max(
                worst["omega_prime_decomposition"],
                thermo.omega_prime_decomposition(ens),
            )
            worst["occupation_reconstruction"] = max(
                worst["occupation_reconstruction"],
                thermo.occupation_reconstruction_residual(ens),
            )
        worst["free_energy_relation"] = max(
            worst["free_energy_relation"],
            thermo.free_energy_relation(ens1, ens2)[2],
        )
        worst["classical_consistency"] = max(
            worst["classical_consistency"],
            thermo.classical_consistency(ens1, ens2),
        )
    results = tuple(
        CheckResult(name, value, IDENTITY_TOL, value <= IDENTITY_TOL)
        for name, value in worst.items()
    )
    return CheckReport(
        kind="identities",
        seed=seed,
        samples=samples,
        results=results,
        passed=all(r.passed for r in results),
    )


def bound_suite(
    seed: int,
    samples: int = 1000,
    t_range: tuple[float, float] = (0.01, 100.0),
) -> CheckReport:
    """Min slack of each inequality over ``samples`` random spectra."""
    rng = np.random.default_rng(seed)
    slack: dict[str, float] = {
        "max_divergence": np.inf,
        "z_prime_jensen": np.inf,
        "entropy_vs_distance": np.inf,
    }
    for _ in range(samples):
        spectrum = random_spectrum(rng)
        t1, t2 = _temperature_pair(rng, t_range)
        for t in (t1, t2):
            ens = thermo.make_thermal(spectrum, t)
            s = thermo.s_half_vs_mixed(ens)
            slack["max_divergence"] = min(
                slack["max_divergence"], thermo.ln_dim(ens) - s
            )
            slack["z_prime_jensen"] = min(
                slack["z_prime_jensen"], thermo.z_prime_jensen_slack(ens)
            )
            slack["entropy_vs_distance"] = min(
                slack["entropy_vs_distance"], thermo.entropy_bound(ens)[2]
            )
    results = tuple(
        CheckResult(name, float(value), BOUND_TOL, value >= BOUND_TOL)
        for name, value in slack.items()
    )
    return CheckReport(
        kind="bounds",
        seed=seed,
        samples=samples,
        results=results,
        passed=all(r.passed for r in results),
    )
