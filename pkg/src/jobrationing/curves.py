"""Wage norm, labor supply and labor demand."""

from __future__ import annotations

import math

from .errors import DomainError, NoEquilibriumError
from .model import (
    ModelParameters,
    job_finding_rate,
    recruiter_producer_ratio,
    tightness_upper_bound,
)
from .roots import BracketError, bisect_increasing


def wage_norm(params: ModelParameters) -> float:
    """Real wage ``omega * a**(1 - gamma) * H**(-beta)``.

    ``H`` is the total labor force, migrants included.
    """
    return params.omega * params.a ** (1.0 - params.gamma) * params.H ** (-params.beta)


def labor_supply(params: ModelParameters, theta: float) -> float:
    f = job_finding_rate(params, theta)
    return params.H * f / (params.lam + f)


def labor_demand(params: ModelParameters, theta: float) -> float:
    if not theta > 0.0:
        raise DomainError(f"labor demand needs positive tightness, got {theta}")
    tau = recruiter_producer_ratio(params, theta)
    alpha = params.alpha
    numerator = (1.0 - alpha) * params.a**params.gamma * params.H**params.beta
    denominator = (1.0 + tau) ** (1.0 - alpha) * params.omega
    return (numerator / denominator) ** (1.0 / alpha)


def producers_from_focs(params: ModelParameters, theta: float, w: float) -> float:
    """Producers at which the marginal product equals ``(1 + tau) * w``."""
    if not theta > 0.0:
        raise DomainError(f"producers need positive tightness, got {theta}")
    if not w > 0.0:
        raise DomainError(f"wage must be positive, got {w}")
    tau = recruiter_producer_ratio(params, theta)
    return ((1.0 - params.alpha) * params.a / ((1.0 + tau) * w)) ** (1.0 / params.alpha)


def dmp_tightness(params: ModelParameters, wage: float | None = None) -> float:
    """Tightness under linear production, where ``(1 + tau(theta)) * w = a``.

    ``params.alpha`` is ignored. The wage defaults to the wage norm; with
    ``beta > 0`` it then depends on ``H``.
    """
    w = wage_norm(params) if wage is None else wage
    if not w > 0.0:
        raise DomainError(f"wage must be positive, got {w}")
    if w >= params.a:
        raise NoEquilibriumError(
            f"wage {w} is not below productivity {params.a}: no hiring is profitable"
        )
    target = math.log(params.a / w)
    theta_max = tightness_upper_bound(params)

    def gap(theta):
        return math.log1p(recruiter_producer_ratio(params, theta)) - target

    try:
        return bisect_increasing(gap, theta_max * 1e-30, theta_max * (1.0 - 1e-12), geometric=True)
    except BracketError as exc:
        raise NoEquilibriumError(str(exc), exc.value_lo, exc.value_hi) from exc
