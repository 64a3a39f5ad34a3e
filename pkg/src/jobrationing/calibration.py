"""Invert empirical targets into model parameters.

Computation always uses unrounded values; rounding to the published table's
two decimals happens only in :func:`table_report`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleTargetError
from .model import ModelParameters


@dataclass(frozen=True)
class CalibrationTargets:
    labor_share: float = 0.65
    beveridge_elasticity: float = 1.0
    u_star: float = 0.043
    theta_star: float = 1.0
    lam: float = 0.097
    kappa: float = 1.0
    gamma: float = 0.3
    beta: float = 0.0
    a_normalization: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.labor_share < 1.0:
            raise InfeasibleTargetError(f"labor share must lie in (0, 1), got {self.labor_share}")
        if not 0.0 < self.u_star < 1.0:
            raise InfeasibleTargetError(f"u_star must lie in (0, 1), got {self.u_star}")
        for name in ("beveridge_elasticity", "theta_star", "lam", "kappa", "gamma", "a_normalization"):
            if not getattr(self, name) > 0.0:
                raise InfeasibleTargetError(f"{name} must be positive, got {getattr(self, name)}")
        if self.beta < 0.0:
            raise InfeasibleTargetError(f"beta must be non-negative, got {self.beta}")


# Rounded values as published; useful for checking against the figures.
TABLE2_PARAMETERS = ModelParameters(
    alpha=0.35, eta=0.48, mu=2.16, kappa=1.0, lam=0.097,
    gamma=0.3, beta=0.0, omega=0.64, a=1.0, H=1.0,
)


def calibrate_alpha(labor_share: float) -> float:
    """Decreasing-returns parameter from the labor share.

    A labor share of 1 gives 0, which only makes sense with linear production
    (see :func:`jobrationing.curves.dmp_tightness`).
    """
    if not 0.0 < labor_share <= 1.0:
        raise InfeasibleTargetError(f"labor share must lie in (0, 1], got {labor_share}")
    return 1.0 - labor_share


def calibrate_eta(beveridge_elasticity: float, u_star: float) -> float:
    ratio = u_star / (1.0 - u_star)
    if not beveridge_elasticity > ratio:
        raise InfeasibleTargetError(
            f"Beveridge elasticity {beveridge_elasticity} must exceed u/(1-u) = {ratio}"
        )
    return (beveridge_elasticity - ratio) / (1.0 + beveridge_elasticity)


def calibrate_mu(lam: float, theta_star: float, u_star: float, eta: float) -> float:
    return lam / theta_star ** (1.0 - eta) * (1.0 - u_star) / u_star


def calibrate_omega(
    alpha: float,
    eta: float,
    mu: float,
    *,
    u_star: float,
    theta_star: float,
    lam: float,
    kappa: float,
    gamma: float,
    a: float = 1.0,
) -> float:
    """Wage level that puts the equilibrium at ``theta_star`` when productivity is ``a``."""
    q_star = mu * theta_star ** (-eta)
    cost = kappa * lam
    if not q_star > cost:
        raise InfeasibleTargetError(
            f"vacancy-filling rate {q_star} at theta* does not exceed lam*kappa = {cost}"
        )
    wedge = 1.0 + cost / (q_star - cost)
    return (1.0 - alpha) * a**gamma / (1.0 - u_star) ** alpha * wedge ** (alpha - 1.0)


def calibrate(targets: CalibrationTargets = CalibrationTargets()) -> ModelParameters:
    alpha = calibrate_alpha(targets.labor_share)
    eta = calibrate_eta(targets.beveridge_elasticity, targets.u_star)
    mu = calibrate_mu(targets.lam, targets.theta_star, targets.u_star, eta)
    omega = calibrate_omega(
        alpha, eta, mu,
        u_star=targets.u_star, theta_star=targets.theta_star, lam=targets.lam,
        kappa=targets.kappa, gamma=targets.gamma, a=targets.a_normalization,
    )
    if targets.beta > alpha:
        raise InfeasibleTargetError(f"beta = {targets.beta} exceeds alpha = {alpha}")
    return ModelParameters(
        alpha=alpha, eta=eta, mu=mu, kappa=targets.kappa, lam=targets.lam,
        gamma=targets.gamma, beta=targets.beta, omega=omega,
        a=targets.a_normalization, H=1.0,
    )


TABLE_FIELDS = ("gamma", "beta", "kappa", "lam", "alpha", "eta", "mu", "omega")


def table_report(params: ModelParameters, digits: int = 2) -> list[dict]:
    """One row per parameter with the full value and the value at table precision."""
    rows = []
    for name in TABLE_FIELDS:
        value = getattr(params, name)
        # separation rate is published with three decimals
        shown = 3 if name == "lam" else digits
        rows.append({"parameter": name, "value": value, "rounded": round(value, shown)})
    return rows
