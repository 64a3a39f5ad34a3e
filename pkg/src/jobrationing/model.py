"""Matching-market primitives.

Parameter block, matching rates, unemployment, the recruiter-producer ratio
and the Beveridge curve. All rates are quarterly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class ModelParameters:
    """Structural parameters plus the exogenous state (productivity ``a``, labor force ``H``).

    ``lam`` is the job-separation rate (``lambda`` is reserved in Python).
    """

    alpha: float = 0.35
    eta: float = 0.48
    mu: float = 2.16
    kappa: float = 1.0
    lam: float = 0.097
    gamma: float = 0.3
    beta: float = 0.0
    omega: float = 0.64
    a: float = 1.0
    H: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "eta", "mu", "kappa", "lam", "gamma", "beta", "omega", "a", "H"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0.0 < self.eta < 1.0:
            raise DomainError(f"eta must lie in (0, 1), got {self.eta}")
        if not 0.0 < self.gamma <= 1.0:
            raise DomainError(f"gamma must lie in (0, 1], got {self.gamma}")
        # beta == alpha is the fully flexible (Borjasian) limit and is allowed
        if not 0.0 <= self.beta <= self.alpha:
            raise DomainError(f"beta must lie in [0, alpha], got {self.beta}")
        for name in ("mu", "kappa", "lam", "omega", "a", "H"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be strictly positive, got {getattr(self, name)}")
        if self.lam * self.kappa >= self.mu:
            raise DomainError(
                f"lam*kappa = {self.lam * self.kappa} must be below mu = {self.mu}; "
                "recruiting would absorb the whole workforce"
            )

    def replace(self, **changes) -> "ModelParameters":
        return replace(self, **changes)


@dataclass(frozen=True)
class MarketOutcome:
    """Everything implied by a tightness value at given parameters."""

    theta: float
    f: float
    q: float
    u: float
    l: float
    tau: float
    L: float
    P: float
    R: float
    v: float
    w: float
    pi: float
    H: float

    def as_dict(self) -> dict:
        return {
            "theta": self.theta, "f": self.f, "q": self.q, "u": self.u, "l": self.l,
            "tau": self.tau, "L": self.L, "P": self.P, "R": self.R, "v": self.v,
            "w": self.w, "pi": self.pi, "H": self.H,
        }


def _check_theta(theta: float) -> None:
    if not theta >= 0.0:  # also rejects NaN
        raise DomainError(f"tightness must be non-negative, got {theta}")


def job_finding_rate(params: ModelParameters, theta: float) -> float:
    _check_theta(theta)
    if theta == 0.0:
        return 0.0
    return params.mu * theta ** (1.0 - params.eta)


def vacancy_filling_rate(params: ModelParameters, theta: float) -> float:
    if not theta > 0.0:
        raise DomainError(f"vacancy-filling rate needs positive tightness, got {theta}")
    return params.mu * theta ** (-params.eta)


def unemployment_rate(params: ModelParameters, theta: float) -> float:
    f = job_finding_rate(params, theta)
    return params.lam / (params.lam + f)


def tightness_upper_bound(params: ModelParameters) -> float:
    """Tightness at which the vacancy-filling rate falls to ``lam * kappa``.

    Past this point every worker would be a recruiter.
    """
    return (params.mu / (params.lam * params.kappa)) ** (1.0 / params.eta)


def recruiter_producer_ratio(params: ModelParameters, theta: float) -> float:
    _check_theta(theta)
    if theta == 0.0:
        return 0.0
    theta_max = tightness_upper_bound(params)
    if theta >= theta_max:
        raise DomainError(
            f"tightness {theta} is at or above the bound {theta_max}: all workers are recruiters"
        )
    cost = params.lam * params.kappa
    gap = vacancy_filling_rate(params, theta) - cost
    if gap <= 0.0:
        raise DomainError(f"tightness {theta} is at the recruiting bound {theta_max}")
    return cost / gap


def beveridge_vacancy(params: ModelParameters, u: float) -> float:
    """Vacancy rate on the balanced-flow Beveridge curve at unemployment rate ``u``."""
    if not 0.0 < u < 1.0:
        raise DomainError(f"unemployment rate must lie in (0, 1), got {u}")
    eta = params.eta
    return ((params.lam / params.mu) * (1.0 - u) / u**eta) ** (1.0 / (1.0 - eta))


def beveridge_elasticity(eta: float, u: float) -> float:
    if not 0.0 < u < 1.0:
        raise DomainError(f"unemployment rate must lie in (0, 1), got {u}")
    if not 0.0 < eta < 1.0:
        raise DomainError(f"eta must lie in (0, 1), got {eta}")
    return (eta + u / (1.0 - u)) / (1.0 - eta)
