"""Employment law of motion at fixed tightness.

The ODE ``dL/dt = f(theta) (H - L) - lam L`` is linear with constant
coefficients, so paths are evaluated in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import labor_supply
from .errors import DomainError
from .model import ModelParameters, job_finding_rate

QUARTER = 1.0
MONTH = 1.0 / 3.0


@dataclass(frozen=True)
class FlowPath:
    times: np.ndarray
    employment: np.ndarray
    steady_state: float
    decay_rate: float


def employment_derivative(params: ModelParameters, theta: float, L: float) -> float:
    if not 0.0 <= L <= params.H:
        raise DomainError(f"employment must lie in [0, {params.H}], got {L}")
    return job_finding_rate(params, theta) * (params.H - L) - params.lam * L


def convergence_rate(params: ModelParameters, theta: float) -> float:
    """Exponential decay rate of deviations from balanced flows, per quarter."""
    return params.lam + job_finding_rate(params, theta)


def decayed_fraction(params: ModelParameters, theta: float, horizon: float) -> float:
    """Share of an initial deviation gone after ``horizon`` quarters."""
    return -math.expm1(-convergence_rate(params, theta) * horizon)


def simulate_path(
    params: ModelParameters, theta: float, L0: float, horizon: float, step: float
) -> FlowPath:
    if not step > 0.0 or not horizon > 0.0:
        raise DomainError("horizon and step must be positive")
    if not 0.0 <= L0 <= params.H:
        raise DomainError(f"initial employment must lie in [0, {params.H}], got {L0}")
    n = int(math.floor(horizon / step + 1e-9))
    times = np.arange(n + 1) * step
    steady = labor_supply(params, theta)
    rate = convergence_rate(params, theta)
    employment = steady + (L0 - steady) * np.exp(-rate * times)
    return FlowPath(times=times, employment=employment, steady_state=steady, decay_rate=rate)
