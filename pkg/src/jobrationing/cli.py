"""Command-line driver.

Exit codes: 0 success, 2 configuration error, 3 domain or solver error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import calibration, dynamics, statics, welfare
from .config import Config, ConfigError, load_config
from .equilibrium import dmp_outcome, invert_productivity, outcome_at, solve_tightness
from .errors import DomainError, InfeasibleTargetError, NoEquilibriumError, UnboundedOptimumError
from .model import ModelParameters, unemployment_rate
from .output import render, render_metadata

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN = 0, 2, 3

PRESETS = ("cardian", "borjasian", "cardo-borjasian", "general")
AXES = ("productivity", "tightness", "migration-factor", "wage-beta")

SWEEP_COLUMNS = [
    "a", "theta", "u", "v", "f", "q", "tau", "L", "P", "w", "pi", "welfare",
    "eps_l_H", "du_dlnH", "unemployed_per_100", "eps_W_m",
]
AXIS_COLUMN = {"migration-factor": "m", "wage-beta": "beta"}
SOLVE_COLUMNS = ["a", "H", "theta", "f", "q", "u", "l", "tau", "L", "P", "R", "v", "w", "pi", "welfare"]
MIGRATE_COLUMNS = ["m", "total_labor_force", "theta", "u", "l", "f", "w", "L", "pi", "welfare", "eps_W_m"]
POLICY_COLUMNS = [
    "theta0", "a", "theta_star", "m_hat", "in_migration", "theta_opt",
    "welfare_baseline", "welfare_opt", "welfare_gain",
]
DYNAMICS_COLUMNS = [
    "t", "L", "steady_state", "deviation", "decay_rate",
    "monthly_decay_fraction", "quarterly_decay_fraction",
]
CALIBRATE_COLUMNS = ["parameter", "value", "rounded"]

# flag name -> config key
OVERRIDES = {
    "a": "state.a", "H": "state.H", "theta": "state.theta", "m": "migration.m",
    "beta": "params.beta", "theta0": "policy.theta0", "axis": "sweep.axis",
    "min": "sweep.min", "max": "sweep.max", "steps": "sweep.steps",
    "L0": "dynamics.L0", "horizon": "dynamics.horizon", "step": "dynamics.step",
    "format": "output.format", "out": "output.path", "precision": "output.precision",
    "preset": "scenario.preset",
}


class Scenario:
    """Parameters and run settings resolved from config plus flags."""

    def __init__(self, config: Config):
        self.config = config
        self.preset = config.get("scenario.preset")
        if self.preset is not None and self.preset not in PRESETS:
            raise ConfigError(f"unknown preset {self.preset!r}; choose from {', '.join(PRESETS)}")
        self.dmp = self.preset == "cardian"
        try:
            self.params = self._build_params()
        except DomainError as exc:
            raise ConfigError(f"invalid parameters: {exc}") from None
        self.format = config.get("output.format", "csv")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"output.format must be csv or json, got {self.format!r}")
        self.precision = config.get("output.precision", 6)
        if not 1 <= self.precision <= 12:
            raise ConfigError(f"output.precision must lie in [1, 12], got {self.precision}")
        self.out = config.get("output.path")

    def _build_params(self) -> ModelParameters:
        explicit = self.config.section("params")
        targets = self.config.section("targets")
        if "lambda" in explicit:
            explicit["lam"] = explicit.pop("lambda")
        if "lambda" in targets:
            targets["lam"] = targets.pop("lambda")
        beta_override = explicit.pop("beta", None)
        if explicit:
            if targets:
                raise ConfigError("give either params.* or targets.*, not both")
            params = calibration.TABLE2_PARAMETERS.replace(**explicit)
        else:
            params = calibration.calibrate(calibration.CalibrationTargets(**targets))
        if self.preset == "borjasian":
            params = params.replace(beta=params.alpha)
        elif self.preset == "general":
            params = params.replace(beta=min(0.15, params.alpha / 2))
        elif self.preset in ("cardo-borjasian", "cardian"):
            params = params.replace(beta=0.0)
        if beta_override is not None:
            params = params.replace(beta=beta_override)
        state = self.config.section("state")
        if "H" in state:
            params = params.replace(H=state["H"])
        if "a" in state:
            params = params.replace(a=state["a"])
        elif "theta" in state and not self.dmp:
            params = params.replace(a=invert_productivity(params, state["theta"]))
        return params

    def require_smooth(self, command):
        if self.dmp:
            raise ConfigError(f"'{command}' is not defined for the cardian preset (linear production)")

    def theta(self) -> float:
        given = self.config.get("state.theta")
        return given if given is not None else solve_tightness(self.params)

    def grid(self):
        lo, hi = self.config.get("sweep.min"), self.config.get("sweep.max")
        steps = self.config.get("sweep.steps")
        if lo is None or hi is None or steps is None:
            raise ConfigError("sweep needs min, max and steps")
        if not lo < hi:
            raise ConfigError(f"sweep.min ({lo}) must be below sweep.max ({hi})")
        if steps < 2:
            raise ConfigError(f"sweep.steps must be at least 2, got {steps}")
        return np.linspace(lo, hi, steps)


def _row(local: ModelParameters, total: ModelParameters, theta: float, m: float) -> dict:
    outcome = outcome_at(total, theta)
    mig = statics.migration_elasticities(total, theta)
    return {
        "a": total.a, "theta": theta, "u": outcome.u, "v": outcome.v, "f": outcome.f,
        "q": outcome.q, "tau": outcome.tau, "L": outcome.L, "P": outcome.P, "w": outcome.w,
        "pi": outcome.pi, "welfare": welfare.local_welfare(local, m, outcome),
        "eps_l_H": mig.eps_l_H, "du_dlnH": mig.semi_u_H,
        "unemployed_per_100": 100.0 * mig.semi_u_H,
        "eps_W_m": welfare.welfare_elasticity(local, m, theta),
    }


def sweep_rows(scenario: Scenario, axis: str):
    """Rows for a sweep plus the number of grid points dropped outside the domain."""
    base = scenario.params
    rows, dropped = [], 0
    if axis == "wage-beta":
        theta_fixed = scenario.theta()
    for x in scenario.grid():
        x = float(x)
        try:
            if axis == "productivity":
                local = base.replace(a=x)
                row = _row(local, local, solve_tightness(local), 1.0)
            elif axis == "tightness":
                local = base.replace(a=invert_productivity(base, x))
                row = _row(local, local, x, 1.0)
            elif axis == "migration-factor":
                total = welfare.with_migration(base, x)
                row = {"m": x, **_row(base, total, solve_tightness(total), x)}
            elif axis == "wage-beta":
                local = base.replace(beta=x)
                local = local.replace(a=invert_productivity(local, theta_fixed))
                row = {"beta": x, **_row(local, local, theta_fixed, 1.0)}
            else:
                raise ConfigError(f"unknown sweep axis {axis!r}; choose from {', '.join(AXES)}")
        except (DomainError, NoEquilibriumError):
            dropped += 1
            continue
        rows.append(row)
    return rows, dropped


def cmd_calibrate(scenario: Scenario):
    params = scenario.params
    rows = calibration.table_report(params)
    theta_star = welfare.efficient_tightness(params)
    target = scenario.config.get("targets.theta_star", 1.0)
    rows.append({"parameter": "theta_star_efficient", "value": theta_star, "rounded": round(theta_star, 2)})
    residual = welfare.efficiency_gap(params, target)
    rows.append({"parameter": "efficiency_residual_at_target", "value": residual, "rounded": round(residual, 2)})
    return rows, CALIBRATE_COLUMNS, None


def cmd_solve(scenario: Scenario):
    p = scenario.params
    outcome = dmp_outcome(p) if scenario.dmp else outcome_at(p, solve_tightness(p))
    local_alpha = 0.0 if scenario.dmp else p.alpha
    row = {"a": p.a, **outcome.as_dict()}
    row["welfare"] = p.H / (1.0 - local_alpha) * outcome.w * outcome.l
    return [row], SOLVE_COLUMNS, None


def cmd_elasticity(scenario: Scenario):
    scenario.require_smooth("elasticity")
    report = statics.elasticity_report(scenario.params, scenario.theta())
    row = report.as_dict()
    return [row], list(row), None


def cmd_sweep(scenario: Scenario):
    scenario.require_smooth("sweep")
    axis = scenario.config.get("sweep.axis", "tightness")
    if axis not in AXES:
        raise ConfigError(f"unknown sweep axis {axis!r}; choose from {', '.join(AXES)}")
    rows, dropped = sweep_rows(scenario, axis)
    if dropped:
        print(f"warning: {dropped} grid point(s) outside the model domain were dropped", file=sys.stderr)
    columns = ([AXIS_COLUMN[axis]] if axis in AXIS_COLUMN else []) + SWEEP_COLUMNS
    theta_star = welfare.efficient_tightness(scenario.params)
    metadata = {
        "axis": axis,
        "theta_star": theta_star,
        "u_star": unemployment_rate(scenario.params, theta_star),
        "rows": len(rows),
        "dropped": dropped,
    }
    return rows, columns, metadata


def cmd_migrate(scenario: Scenario):
    local = scenario.params
    m = scenario.config.get("migration.m", 1.01)
    if m < 1.0:
        raise DomainError(f"migration factor must be at least 1, got {m}")
    rows = []
    for factor in (1.0, m):
        total = welfare.with_migration(local, factor)
        if scenario.dmp:
            outcome = dmp_outcome(total)
            value = local.H * outcome.w * outcome.l
            eps = 0.0
        else:
            outcome = outcome_at(total, solve_tightness(total))
            value = welfare.local_welfare(local, factor, outcome)
            eps = welfare.welfare_elasticity(local, factor, outcome.theta)
        rows.append({
            "m": factor, "total_labor_force": total.H, "theta": outcome.theta, "u": outcome.u,
            "l": outcome.l, "f": outcome.f, "w": outcome.w, "L": outcome.L, "pi": outcome.pi,
            "welfare": value, "eps_W_m": eps,
        })
    return rows, MIGRATE_COLUMNS, None


def _policy_row(params: ModelParameters, theta0: float) -> dict:
    local = params.replace(a=invert_productivity(params, theta0))
    sol = welfare.optimal_migration(local)
    return {
        "theta0": theta0, "a": local.a, "theta_star": sol.efficient_theta, "m_hat": sol.m_hat,
        "in_migration": sol.in_migration, "theta_opt": sol.theta_at_optimum,
        "welfare_baseline": sol.welfare_at_baseline, "welfare_opt": sol.welfare_at_optimum,
        "welfare_gain": sol.welfare_gain,
    }


def cmd_policy(scenario: Scenario):
    scenario.require_smooth("policy")
    params = scenario.params
    if scenario.config.get("sweep.steps") is not None:
        rows = [_policy_row(params, float(t)) for t in scenario.grid()]
    else:
        theta0 = scenario.config.get("policy.theta0")
        if theta0 is None:
            theta0 = solve_tightness(params)
        rows = [_policy_row(params, theta0)]
    return rows, POLICY_COLUMNS, None


def cmd_dynamics(scenario: Scenario):
    p = scenario.params
    theta = dmp_outcome(p).theta if scenario.dmp else scenario.theta()
    L0 = scenario.config.get("dynamics.L0", 0.5 * p.H)
    horizon = scenario.config.get("dynamics.horizon", 4.0)
    step = scenario.config.get("dynamics.step", 0.25)
    path = dynamics.simulate_path(p, theta, L0, horizon, step)
    monthly = dynamics.decayed_fraction(p, theta, dynamics.MONTH)
    quarterly = dynamics.decayed_fraction(p, theta, dynamics.QUARTER)
    rows = [
        {
            "t": float(t), "L": float(L), "steady_state": path.steady_state,
            "deviation": float(L) - path.steady_state, "decay_rate": path.decay_rate,
            "monthly_decay_fraction": monthly, "quarterly_decay_fraction": quarterly,
        }
        for t, L in zip(path.times, path.employment)
    ]
    return rows, DYNAMICS_COLUMNS, None


COMMANDS = {
    "calibrate": (cmd_calibrate, "calibrated parameters at full and table precision"),
    "solve": (cmd_solve, "equilibrium outcome at the configured productivity and labor force"),
    "elasticity": (cmd_elasticity, "comparative statics at a tightness"),
    "sweep": (cmd_sweep, "grid over productivity, tightness, migration factor or wage beta"),
    "migrate": (cmd_migrate, "outcomes before and after a migration factor m"),
    "policy": (cmd_policy, "optimal in-migration from an initial tightness"),
    "dynamics": (cmd_dynamics, "employment path toward balanced flows"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a 'section.key = value' config file")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--precision", type=int, help="decimal places (1-12)")
    common.add_argument("--preset", choices=PRESETS)
    for name in ("a", "H", "theta", "m", "beta", "theta0", "min", "max", "L0", "horizon", "step"):
        common.add_argument(f"--{name}", type=float)
    common.add_argument("--steps", type=int)
    common.add_argument("--axis", choices=AXES)

    parser = argparse.ArgumentParser(
        prog="jobrationing",
        description="Matching model with job rationing: equilibrium, migration and policy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        config = load_config(args.config) if args.config else Config()
        for flag, key in OVERRIDES.items():
            value = getattr(args, flag, None)
            if value is not None:
                config.set(key, value)
        scenario = Scenario(config)
        handler, _ = COMMANDS[args.command]
        rows, columns, metadata = handler(scenario)
        text = render(rows, columns, scenario.format, scenario.precision)
    except (ConfigError, InfeasibleTargetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    except (DomainError, NoEquilibriumError, UnboundedOptimumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    if scenario.out:
        out = Path(scenario.out)
        out.write_text(text, encoding="utf-8", newline="")
        if metadata is not None:
            meta_path = out.with_name(out.name + ".meta.json")
            meta_path.write_text(render_metadata(metadata, scenario.precision), encoding="utf-8")
    else:
        stdout.write(text)
        if metadata is not None:
            sys.stderr.write(render_metadata(metadata, scenario.precision))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
