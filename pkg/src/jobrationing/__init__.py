"""Matching model of the labor market with job rationing.

Solves for equilibrium tightness under migration and productivity shocks,
computes comparative statics and welfare, and calibrates to US targets.
"""

from .calibration import TABLE2_PARAMETERS, CalibrationTargets, calibrate
from .curves import dmp_tightness, labor_demand, labor_supply, producers_from_focs, wage_norm
from .dynamics import FlowPath, convergence_rate, employment_derivative, simulate_path
from .equilibrium import (
    SolverSettings,
    equilibrium_outcome,
    invert_productivity,
    solve_tightness,
)
from .errors import DomainError, InfeasibleTargetError, NoEquilibriumError, UnboundedOptimumError
from .model import (
    MarketOutcome,
    ModelParameters,
    beveridge_elasticity,
    beveridge_vacancy,
    job_finding_rate,
    recruiter_producer_ratio,
    tightness_upper_bound,
    unemployment_rate,
    vacancy_filling_rate,
)
from .statics import (
    ElasticityReport,
    check_elasticities_numerically,
    elasticity_report,
    migration_elasticities,
    migration_induced_unemployment,
    productivity_elasticities,
    public_employment_multiplier,
)
from .welfare import (
    PolicySolution,
    efficient_tightness,
    local_welfare,
    marginal_welfare_elasticity,
    optimal_migration,
    welfare_curve,
    welfare_elasticity,
)

__version__ = "0.1.0"
