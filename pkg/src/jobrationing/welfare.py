"""Local welfare under in-migration and the optimal migration factor.

The local labor force is ``params.H``; with migration factor ``m`` the market
clears at a total labor force of ``m * H`` while welfare counts local labor
income plus all profits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .equilibrium import DEFAULT_SETTINGS, SolverSettings, equilibrium_outcome, solve_tightness
from .errors import DomainError, UnboundedOptimumError
from .model import (
    MarketOutcome,
    ModelParameters,
    recruiter_producer_ratio,
    tightness_upper_bound,
    unemployment_rate,
    vacancy_filling_rate,
)
from .roots import bisect_increasing
from .statics import slope_ratio

M_CAP = 10.0


@dataclass(frozen=True)
class PolicySolution:
    m_hat: float
    theta_at_optimum: float
    welfare_at_optimum: float
    initial_theta: float
    efficient_theta: float
    welfare_at_baseline: float

    @property
    def in_migration(self) -> float:
        return self.m_hat - 1.0

    @property
    def welfare_gain(self) -> float:
        return self.welfare_at_optimum - self.welfare_at_baseline


def with_migration(params: ModelParameters, m: float) -> ModelParameters:
    """Parameters for the market with total labor force ``m * H``."""
    return params.replace(H=params.H * m)


def _welfare_value(params: ModelParameters, m: float, outcome: MarketOutcome) -> float:
    alpha = params.alpha
    return params.H / (1.0 - alpha) * (alpha * m + 1.0 - alpha) * outcome.w * outcome.l


def local_welfare(params: ModelParameters, m: float, outcome: MarketOutcome) -> float:
    """Local labor income plus profits, ``H/(1-alpha) * (alpha*m + 1 - alpha) * w * l``.

    ``outcome`` must be the equilibrium at total labor force ``m * params.H``.
    """
    if not m >= 1.0:
        raise DomainError(f"migration factor must be at least 1, got {m}")
    return _welfare_value(params, m, outcome)


def welfare_elasticity(params: ModelParameters, m: float, theta: float) -> float:
    if not m >= 1.0:
        raise DomainError(f"migration factor must be at least 1, got {m}")
    if not theta > 0.0:
        raise DomainError(f"tightness must be positive, got {theta}")
    alpha, beta = params.alpha, params.beta
    profit_weight = alpha * m / (alpha * m + 1.0 - alpha)
    return profit_weight - beta - (1.0 - beta / alpha) / (1.0 - slope_ratio(params, theta))


def marginal_welfare_elasticity(params: ModelParameters, theta: float) -> float:
    """Welfare elasticity at ``m = 1``; zero exactly at the efficient tightness."""
    if not theta > 0.0:
        raise DomainError(f"tightness must be positive, got {theta}")
    alpha, eta = params.alpha, params.eta
    ratio = eta / (1.0 - eta) * recruiter_producer_ratio(params, theta) / unemployment_rate(params, theta)
    return (alpha - params.beta) * (1.0 - 1.0 / (alpha + (1.0 - alpha) * ratio))


def efficiency_gap(params: ModelParameters, theta: float) -> float:
    """``eta/(1-eta) * tau/u - 1``; strictly increasing, zero at the efficient tightness."""
    eta = params.eta
    return eta / (1.0 - eta) * recruiter_producer_ratio(params, theta) / unemployment_rate(params, theta) - 1.0


def hosios_gap(params: ModelParameters, theta: float) -> float:
    """``kappa/(1-eta) * (lam/q + eta*theta) - 1``, the same condition in job-creation form."""
    q = vacancy_filling_rate(params, theta)
    return params.kappa / (1.0 - params.eta) * (params.lam / q + params.eta * theta) - 1.0


def efficient_tightness(params: ModelParameters) -> float:
    theta_max = tightness_upper_bound(params)
    return bisect_increasing(
        lambda t: efficiency_gap(params, t),
        theta_max * 1e-15,
        theta_max * (1.0 - 1e-12),
        geometric=True,
    )


def optimal_migration(
    params: ModelParameters,
    settings: SolverSettings = DEFAULT_SETTINGS,
    m_cap: float = M_CAP,
) -> PolicySolution:
    """Welfare-maximizing migration factor from a no-migration start."""
    theta_star = efficient_tightness(params)
    baseline = equilibrium_outcome(params, settings)
    welfare_base = local_welfare(params, 1.0, baseline)
    if baseline.theta <= theta_star:
        return PolicySolution(
            m_hat=1.0,
            theta_at_optimum=baseline.theta,
            welfare_at_optimum=welfare_base,
            initial_theta=baseline.theta,
            efficient_theta=theta_star,
            welfare_at_baseline=welfare_base,
        )

    def elasticity_along_path(m):
        theta = solve_tightness(with_migration(params, m), settings)
        return welfare_elasticity(params, m, theta)

    # bisect on the negated elasticity, which rises through zero at the optimum
    def negated_elasticity(m):
        return -elasticity_along_path(m)

    step = 0.01
    m_hi = 1.0 + step
    while negated_elasticity(m_hi) < 0.0:
        if m_hi >= m_cap:
            raise UnboundedOptimumError(
                f"welfare still rising at m = {m_hi} (initial tightness {baseline.theta:.6g}, "
                f"efficient tightness {theta_star:.6g})",
                m_max=m_hi,
                elasticity_at_cap=elasticity_along_path(m_hi),
            )
        step *= 2.0
        m_hi = min(1.0 + step, m_cap)

    m_hat = bisect_increasing(negated_elasticity, 1.0, m_hi, rtol=1e-12)
    optimum = equilibrium_outcome(with_migration(params, m_hat), settings)
    return PolicySolution(
        m_hat=m_hat,
        theta_at_optimum=optimum.theta,
        welfare_at_optimum=local_welfare(params, m_hat, optimum),
        initial_theta=baseline.theta,
        efficient_theta=theta_star,
        welfare_at_baseline=welfare_base,
    )


def welfare_curve(
    params: ModelParameters, m_grid, settings: SolverSettings = DEFAULT_SETTINGS
) -> list[tuple[float, float]]:
    """``(m, welfare)`` pairs, re-solving the equilibrium at each ``m * H``."""
    curve = []
    for m in m_grid:
        m = float(m)
        outcome = equilibrium_outcome(with_migration(params, m), settings)
        curve.append((m, local_welfare(params, m, outcome)))
    return curve


def welfare_elasticity_numerically(
    params: ModelParameters,
    m: float,
    step: float = 1e-5,
    settings: SolverSettings = DEFAULT_SETTINGS,
) -> float:
    """Central difference of ln welfare in ln m, re-solving the equilibrium each time."""

    def log_welfare(log_m):
        mm = m * math.exp(log_m)
        outcome = equilibrium_outcome(with_migration(params, mm), settings)
        return math.log(_welfare_value(params, mm, outcome))

    return (log_welfare(step) - log_welfare(-step)) / (2.0 * step)
