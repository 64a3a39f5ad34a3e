"""Equilibrium tightness where labor supply meets labor demand."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import dmp_tightness, labor_demand, labor_supply, wage_norm
from .errors import DomainError, NoEquilibriumError
from .model import (
    MarketOutcome,
    ModelParameters,
    job_finding_rate,
    recruiter_producer_ratio,
    tightness_upper_bound,
    unemployment_rate,
    vacancy_filling_rate,
)
from .roots import BracketError, bisect_increasing


@dataclass(frozen=True)
class SolverSettings:
    theta_lo: float = 1e-9
    theta_hi_fraction: float = 1.0 - 1e-9
    tolerance: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self):
        if not self.theta_lo > 0.0:
            raise DomainError(f"theta_lo must be positive, got {self.theta_lo}")
        if not 0.0 < self.theta_hi_fraction < 1.0:
            raise DomainError(f"theta_hi_fraction must lie in (0, 1), got {self.theta_hi_fraction}")
        if not self.tolerance > 0.0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be at least 1")


DEFAULT_SETTINGS = SolverSettings()


def excess_supply(params: ModelParameters, theta: float) -> float:
    """``ln L^s - ln L^d``; strictly increasing in tightness."""
    return math.log(labor_supply(params, theta)) - math.log(labor_demand(params, theta))


def solve_tightness(params: ModelParameters, settings: SolverSettings = DEFAULT_SETTINGS) -> float:
    theta_hi = tightness_upper_bound(params) * settings.theta_hi_fraction
    if not settings.theta_lo < theta_hi:
        raise NoEquilibriumError(
            f"empty bracket: theta_lo={settings.theta_lo} is not below {theta_hi}"
        )
    try:
        return bisect_increasing(
            lambda theta: excess_supply(params, theta),
            settings.theta_lo,
            theta_hi,
            rtol=settings.tolerance,
            max_iterations=settings.max_iterations,
            geometric=True,
        )
    except BracketError as exc:
        raise NoEquilibriumError(
            f"labor supply and demand do not cross on [{settings.theta_lo}, {theta_hi}]; "
            f"log gaps at the ends: {exc.value_lo:.6g}, {exc.value_hi:.6g}",
            exc.value_lo,
            exc.value_hi,
        ) from exc


def outcome_at(params: ModelParameters, theta: float) -> MarketOutcome:
    """All market quantities at an arbitrary tightness, on the labor supply curve.

    Producers come from the firm's first-order condition at the wage norm, so
    the profit and labor-share identities hold exactly only in equilibrium.
    """
    f = job_finding_rate(params, theta)
    q = vacancy_filling_rate(params, theta)
    u = unemployment_rate(params, theta)
    tau = recruiter_producer_ratio(params, theta)
    L = labor_supply(params, theta)
    P = L / (1.0 + tau)
    w = wage_norm(params)
    pi = params.alpha * params.a * P ** (1.0 - params.alpha)
    return MarketOutcome(
        theta=theta, f=f, q=q, u=u, l=1.0 - u, tau=tau,
        L=L, P=P, R=L - P, v=theta * u, w=w, pi=pi, H=params.H,
    )


def equilibrium_outcome(
    params: ModelParameters, settings: SolverSettings = DEFAULT_SETTINGS
) -> MarketOutcome:
    return outcome_at(params, solve_tightness(params, settings))


def dmp_outcome(params: ModelParameters) -> MarketOutcome:
    """Outcome with linear production: tightness from the job-creation condition,
    zero profits."""
    theta = dmp_tightness(params)
    f = job_finding_rate(params, theta)
    u = unemployment_rate(params, theta)
    tau = recruiter_producer_ratio(params, theta)
    L = labor_supply(params, theta)
    P = L / (1.0 + tau)
    return MarketOutcome(
        theta=theta, f=f, q=vacancy_filling_rate(params, theta), u=u, l=1.0 - u, tau=tau,
        L=L, P=P, R=L - P, v=theta * u, w=wage_norm(params), pi=0.0, H=params.H,
    )


def invert_productivity(params: ModelParameters, target_theta: float) -> float:
    """Productivity at which the equilibrium tightness equals ``target_theta``.

    Closed form: labor demand evaluated at the target is set equal to labor supply.
    """
    theta_max = tightness_upper_bound(params)
    if not 0.0 < target_theta < theta_max:
        raise DomainError(f"target tightness must lie in (0, {theta_max}), got {target_theta}")
    tau = recruiter_producer_ratio(params, target_theta)
    supply = labor_supply(params, target_theta)
    alpha = params.alpha
    a_gamma = (
        (1.0 + tau) ** (1.0 - alpha) * params.omega * supply**alpha
        / ((1.0 - alpha) * params.H**params.beta)
    )
    return a_gamma ** (1.0 / params.gamma)
