"""Point elasticities of the equilibrium with respect to labor force and productivity.

All functions take the tightness at which to evaluate. The closed forms come
from differentiating ``L^s(theta, H) = L^d(theta, a, H)`` implicitly.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .equilibrium import DEFAULT_SETTINGS, SolverSettings, invert_productivity, solve_tightness
from .errors import DomainError
from .model import (
    ModelParameters,
    job_finding_rate,
    recruiter_producer_ratio,
    unemployment_rate,
)


def supply_elasticity(params: ModelParameters, theta: float) -> float:
    """d ln L^s / d ln theta = (1 - eta) * u."""
    return (1.0 - params.eta) * unemployment_rate(params, theta)


def demand_elasticity(params: ModelParameters, theta: float) -> float:
    """d ln L^d / d ln theta = -((1 - alpha) / alpha) * eta * tau."""
    alpha = params.alpha
    return -(1.0 - alpha) / alpha * params.eta * recruiter_producer_ratio(params, theta)


def _check_interior(theta: float) -> None:
    if not theta > 0.0:
        raise DomainError(f"elasticities need positive tightness, got {theta}")


def slope_ratio(params: ModelParameters, theta: float) -> float:
    """Ratio of demand to supply elasticity in tightness, ``eps_d / eps_s`` (negative)."""
    # written through tau/u so it stays finite as u -> 0
    alpha, eta = params.alpha, params.eta
    tau = recruiter_producer_ratio(params, theta)
    u = unemployment_rate(params, theta)
    return -(1.0 - alpha) / alpha * eta / (1.0 - eta) * tau / u


def public_employment_multiplier(params: ModelParameters, theta: float) -> float:
    _check_interior(theta)
    return 1.0 / (1.0 - slope_ratio(params, theta))


@dataclass(frozen=True)
class MigrationElasticities:
    eps_theta_H: float
    eps_f_H: float
    semi_u_H: float
    eps_l_H: float


@dataclass(frozen=True)
class ProductivityElasticities:
    eps_theta_a: float
    eps_f_a: float
    semi_u_a: float
    eps_l_a: float
    eps_q_a: float
    eps_tau_a: float


def migration_elasticities(params: ModelParameters, theta: float) -> MigrationElasticities:
    _check_interior(theta)
    muting = 1.0 - params.beta / params.alpha
    eps_s = supply_elasticity(params, theta)
    eps_d = demand_elasticity(params, theta)
    u = unemployment_rate(params, theta)
    multiplier = 1.0 / (1.0 - slope_ratio(params, theta))
    eps_theta = -muting / (eps_s - eps_d)
    return MigrationElasticities(
        eps_theta_H=eps_theta,
        eps_f_H=(1.0 - params.eta) * eps_theta,
        semi_u_H=muting * (1.0 - u) * multiplier,
        eps_l_H=-muting * multiplier,
    )


def migration_induced_unemployment(params: ModelParameters, theta: float) -> float:
    """Local workers pushed into unemployment per 100 arrivals (``100 * du/dlnH``)."""
    return 100.0 * migration_elasticities(params, theta).semi_u_H


def productivity_elasticities(params: ModelParameters, theta: float) -> ProductivityElasticities:
    _check_interior(theta)
    alpha, eta, gamma = params.alpha, params.eta, params.gamma
    eps_s = supply_elasticity(params, theta)
    eps_d = demand_elasticity(params, theta)
    u = unemployment_rate(params, theta)
    tau = recruiter_producer_ratio(params, theta)
    multiplier = 1.0 / (1.0 - slope_ratio(params, theta))
    eps_theta = gamma / (alpha * (eps_s - eps_d))
    return ProductivityElasticities(
        eps_theta_a=eps_theta,
        eps_f_a=(1.0 - eta) * eps_theta,
        semi_u_a=-(gamma / alpha) * (1.0 - u) * multiplier,
        eps_l_a=(gamma / alpha) * multiplier,
        eps_q_a=-eta * eps_theta,
        eps_tau_a=eta * (1.0 + tau) * eps_theta,
    )


@dataclass(frozen=True)
class ElasticityReport:
    theta: float
    eps_s_theta: float
    eps_d_theta: float
    eps_theta_H: float
    eps_f_H: float
    eps_l_H: float
    semi_u_H: float
    eps_theta_a: float
    eps_f_a: float
    eps_l_a: float
    eps_q_a: float
    eps_tau_a: float
    semi_u_a: float
    unemployed_per_100_arrivals: float
    public_employment_multiplier: float

    def as_dict(self) -> dict:
        return asdict(self)


def elasticity_report(params: ModelParameters, theta: float) -> ElasticityReport:
    mig = migration_elasticities(params, theta)
    prod = productivity_elasticities(params, theta)
    return ElasticityReport(
        theta=theta,
        eps_s_theta=supply_elasticity(params, theta),
        eps_d_theta=demand_elasticity(params, theta),
        eps_theta_H=mig.eps_theta_H,
        eps_f_H=mig.eps_f_H,
        eps_l_H=mig.eps_l_H,
        semi_u_H=mig.semi_u_H,
        eps_theta_a=prod.eps_theta_a,
        eps_f_a=prod.eps_f_a,
        eps_l_a=prod.eps_l_a,
        eps_q_a=prod.eps_q_a,
        eps_tau_a=prod.eps_tau_a,
        semi_u_a=prod.semi_u_a,
        unemployed_per_100_arrivals=100.0 * mig.semi_u_H,
        public_employment_multiplier=public_employment_multiplier(params, theta),
    )


def _relative_deviation(analytic: float, numeric: float) -> float:
    scale = max(abs(analytic), abs(numeric))
    if scale < 1e-12:
        return 0.0
    return abs(analytic - numeric) / scale


def check_elasticities_numerically(
    params: ModelParameters,
    theta: float,
    step: float = 1e-5,
    settings: SolverSettings = DEFAULT_SETTINGS,
) -> dict:
    """Compare analytic elasticities with central differences of the re-solved equilibrium.

    Productivity is first set so the equilibrium sits at ``theta``. Returns the
    relative deviation of each checked quantity and their maximum under ``"max"``.
    """
    base = params.replace(a=invert_productivity(params, theta))

    def state(p):
        t = solve_tightness(p, settings)
        u = unemployment_rate(p, t)
        return t, job_finding_rate(p, t), u

    def central(perturb):
        up, down = state(perturb(step)), state(perturb(-step))
        d_ln_theta = (math.log(up[0]) - math.log(down[0])) / (2 * step)
        d_ln_f = (math.log(up[1]) - math.log(down[1])) / (2 * step)
        d_u = (up[2] - down[2]) / (2 * step)
        d_ln_l = (math.log1p(-up[2]) - math.log1p(-down[2])) / (2 * step)
        return d_ln_theta, d_ln_f, d_u, d_ln_l

    by_H = central(lambda h: base.replace(H=base.H * math.exp(h)))
    by_a = central(lambda h: base.replace(a=base.a * math.exp(h)))
    report = elasticity_report(base, theta)

    deviations = {
        "eps_theta_H": _relative_deviation(report.eps_theta_H, by_H[0]),
        "eps_f_H": _relative_deviation(report.eps_f_H, by_H[1]),
        "semi_u_H": _relative_deviation(report.semi_u_H, by_H[2]),
        "eps_l_H": _relative_deviation(report.eps_l_H, by_H[3]),
        "eps_theta_a": _relative_deviation(report.eps_theta_a, by_a[0]),
        "eps_f_a": _relative_deviation(report.eps_f_a, by_a[1]),
        "semi_u_a": _relative_deviation(report.semi_u_a, by_a[2]),
        "eps_l_a": _relative_deviation(report.eps_l_a, by_a[3]),
    }
    deviations["max"] = max(deviations.values())
    return deviations

