class DomainError(ValueError):
    """An argument lies outside the region where the model is defined."""


class NoEquilibriumError(RuntimeError):
    """The excess-supply function does not change sign on the search bracket."""

    def __init__(self, message, gap_lo=None, gap_hi=None):
        super().__init__(message)
        self.gap_lo = gap_lo
        self.gap_hi = gap_hi


class InfeasibleTargetError(ValueError):
    """Calibration targets cannot be met by any admissible parameter value."""


class UnboundedOptimumError(RuntimeError):
    """The welfare elasticity stays positive up to the migration cap."""

    def __init__(self, message, m_max=None, elasticity_at_cap=None):
        super().__init__(message)
        self.m_max = m_max
        self.elasticity_at_cap = elasticity_at_cap
