"""Command-line entry point for the bundled experiments and check suites.

Verbs: ``fig1a`` (oscillator free-energy sweep), ``fig1b`` (spin-ensemble
free-energy sweep), ``fig2`` (Rabi Otto-engine coupling sweep),
``check-identities`` and ``check-bounds`` (seeded randomized suites).
Output is data (CSV or JSON), never plots; identical config and seed
produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, fields, replace

from . import checks, engine, geometry, thermo
from .errors import ConfigError
from .models import harmonic_spectrum, spin_ensemble_spectrum
from .spectral import maximally_mixed

_EXPERIMENTS = ("fig1a", "fig1b", "fig2", "identities", "bounds")

FIG1_COLUMNS = (
    "T_f_over_omega",
    "minus_delta_omega_exact",
    "minus_delta_omega_geo",
    "minus_delta_omega_approx",
)


@dataclass(frozen=True)
class ExperimentConfig:
    """All experiment knobs; every field can come from the config file."""

    experiment: str
    out: str | None = None
    format: str = "csv"
    seed: int | None = None
    g_const: float = math.pi
    omega: float = 1.0
    n_levels: int = 100
    n_spins: int = 25
    n_boson: int = 30
    t_initial: float = 0.1
    t_final_min: float = 0.1
    t_final_max: float = 3.0
    t_final_points: int = 59
    t_cold: float = 0.05
    t_hot_values: tuple[float, ...] = (0.2, 0.25)
    omega_ratio: float = 2.0
    epsilon_ratio: float = 0.005
    coupling_min: float = 0.0
    coupling_max: float = 1.5
    coupling_points: int = 61
    samples: int = 1000
    t_min: float = 0.01
    t_max: float = 100.0


def _validate(config: ExperimentConfig) -> ExperimentConfig:
    if config.experiment not in _EXPERIMENTS:
        raise ConfigError(f"unknown experiment {config.experiment!r}")
    if config.format not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {config.format!r}")
    for name in ("omega", "t_initial", "t_final_min", "t_final_max",
                 "t_cold", "t_min", "t_max"):
        if getattr(config, name) <= 0.0:
            raise ConfigError(f"{name} must be positive")
    if any(t <= 0.0 for t in config.t_hot_values) or not config.t_hot_values:
        raise ConfigError("t_hot_values must be a nonempty list of positives")
    if config.t_final_points < 1 or config.coupling_points < 1:
        raise ConfigError("sweep needs at least one point")
    if config.experiment in ("identities", "bounds"):
        if config.seed is None:
            raise ConfigError("check runs require an explicit --seed")
        if config.samples < 1:
            raise ConfigError("samples must be >= 1")
    return config


def load_config(
    experiment: str,
    config_path: str | None = None,
    **overrides,
) -> ExperimentConfig:
    """Defaults, then config-file values, then explicit flag overrides."""
    config = ExperimentConfig(experiment=experiment)
    if config_path is not None:
        with open(config_path) as handle:
            payload = json.load(handle)
        known = {f.name for f in fields(ExperimentConfig)}
        unknown = set(payload) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        payload.pop("experiment", None)
        if "t_hot_values" in payload:
            payload["t_hot_values"] = tuple(payload["t_hot_values"])
        config = replace(config, **payload)
    cleaned = {k: v for k, v in overrides.items() if v is not None}
    if cleaned:
        config = replace(config, **cleaned)
    return _validate(config)


def _linspace(lo: float, hi: float, points: int) -> list[float]:
    if points == 1:
        return [lo]
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


def run_fig1(config: ExperimentConfig) -> dict:
    """Free-energy change columns over a final-temperature grid."""
    if config.experiment == "fig1a":
        spectrum = harmonic_spectrum(config.omega, config.n_levels)
    else:
        spectrum = spin_ensemble_spectrum(config.omega, config.n_spins)
    n = spectrum.total_dim
    ln_n = math.log(n)
    mixed = maximally_mixed(n)

    t_i = config.t_initial * config.omega
    ens_i = thermo.make_thermal(spectrum, t_i)
    omega_i = thermo.potentials(ens_i)
    s_geo_i = -2.0 * math.log(geometry.root_fidelity(ens_i.state(), mixed))

    rows = []
    for ratio in _linspace(config.t_final_min, config.t_final_max,
                           config.t_final_points):
        t_f = ratio * config.omega
        ens_f = thermo.make_thermal(spectrum, t_f)
        omega_f = thermo.potentials(ens_f)
        exact = -(omega_f.omega - omega_i.omega)
        s_geo_f = -2.0 * math.log(geometry.root_fidelity(ens_f.state(), mixed))
        geo = (
            thermo.delta_t(s_geo_f, s_geo_i, t_f, t_i)
            - (omega_f.omega_prime - omega_i.omega_prime)
            - (t_f - t_i) * ln_n
        )
        approx = engine.geo_free_change_approx(ens_i, ens_f, config.g_const)[0]
        rows.append([ratio, exact, geo, approx])
    metadata = {
        "N": n,
        "omega": config.omega,
        "t_initial_over_omega": config.t_initial,
        "g_const": config.g_const,
    }
    if config.experiment == "fig1b":
        metadata["n_spins"] = config.n_spins
    return {
        "experiment": config.experiment,
        "metadata": metadata,
        "columns": list(FIG1_COLUMNS),
        "rows": rows,
    }


def run_fig2(config: ExperimentConfig) -> dict:
    """Rabi Otto-engine sweep, wide format: work and kappa per T_hot."""
    ratios = _linspace(config.coupling_min, config.coupling_max,
                       config.coupling_points)
    records = engine.rabi_sweep(
        ratios,
        t_cold=config.t_cold,
        t_hot_values=config.t_hot_values,
        n_boson=config.n_boson,
        omega_cold=config.omega,
        omega_ratio=config.omega_ratio,
        epsilon_ratio=config.epsilon_ratio,
    )
    columns = ["g_over_omega"]
    for t_hot in config.t_hot_values:
        columns.append(f"W_net_T2_{t_hot:g}")
        columns.append(f"kappa_T2_{t_hot:g}")
    by_ratio: dict[float, list[float]] = {r: [r] for r in ratios}
    for t_hot in config.t_hot_values:
        for record in records:
            if record["T2"] == t_hot:
                by_ratio[record["g_over_omega"]].extend(
                    [record["W_net"], record["kappa"]]
                )
    metadata = {
        "N": 2 * config.n_boson,
        "n_boson": config.n_boson,
        "t_cold": config.t_cold,
        "t_hot_values": list(config.t_hot_values),
        "zeta_values": [t / config.t_cold - 1.0 for t in config.t_hot_values],
        "omega": config.omega,
        "omega_ratio": config.omega_ratio,
        "epsilon_ratio": config.epsilon_ratio,
    }
    return {
        "experiment": "fig2",
        "metadata": metadata,
        "columns": columns,
        "rows": [by_ratio[r] for r in ratios],
    }


def run_checks(config: ExperimentConfig) -> checks.CheckReport:
    if config.experiment == "identities":
        return checks.identity_suite(
            config.seed, config.samples, (config.t_min, config.t_max)
        )
    return checks.bound_suite(
        config.seed, config.samples, (config.t_min, config.t_max)
    )


def _write_table(doc: dict, config: ExperimentConfig) -> str:
    path = config.out or f"{config.experiment}.{config.format}"
    if config.format == "json":
        with open(path, "w", newline="\n") as handle:
            json.dump(doc, handle, indent=2)
            handle.write("\n")
    else:
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(doc["columns"])
            for row in doc["rows"]:
                writer.writerow([repr(float(v)) for v in row])
    return path


def _write_report(report: checks.CheckReport, config: ExperimentConfig) -> str:
    path = config.out or f"check_{config.experiment}.{config.format}"
    if config.format == "json":
        with open(path, "w", newline="\n") as handle:
            json.dump(report.to_dict(), handle, indent=2)
            handle.write("\n")
    else:
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["name", "statistic", "tolerance", "passed"])
            for result in report.results:
                writer.writerow([
                    result.name,
                    repr(float(result.statistic)),
                    repr(float(result.tolerance)),
                    str(result.passed).lower(),
                ])
    return path


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermogeom",
        description="Geometric quantum-thermodynamics datasets and checks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in ("fig1a", "fig1b", "fig2", "check-identities", "check-bounds"):
        p = sub.add_parser(verb)
        p.add_argument("--config", default=None, help="JSON config file")
        p.add_argument("--out", default=None, help="output file path")
        p.add_argument("--format", default=None, choices=("csv", "json"))
        p.add_argument("--seed", default=None, type=int)
        p.add_argument("--g-const", dest="g_const", default=None, type=float)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    experiment = args.verb.replace("check-", "")
    try:
        config = load_config(
            experiment,
            config_path=args.config,
            out=args.out,
            format=args.format,
            seed=args.seed,
            g_const=args.g_const,
        )
        if config.experiment in ("fig1a", "fig1b"):
            path = _write_table(run_fig1(config), config)
        elif config.experiment == "fig2":
            path = _write_table(run_fig2(config), config)
        else:
            report = run_checks(config)
            path = _write_report(report, config)
            print(f"wrote {path}")
            return 0 if report.passed else 1
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
