import math

import numpy as np
import pytest

from jobrationing import (
    DomainError,
    UnboundedOptimumError,
    efficient_tightness,
    equilibrium_outcome,
    invert_productivity,
    local_welfare,
    marginal_welfare_elasticity,
    optimal_migration,
    tightness_upper_bound,
    unemployment_rate,
    recruiter_producer_ratio,
    welfare_curve,
    welfare_elasticity,
)
from jobrationing.welfare import efficiency_gap, hosios_gap, welfare_elasticity_numerically, with_migration


def at_tightness(params, theta):
    return params.replace(a=invert_productivity(params, theta))


class TestLocalWelfare:
    def test_baseline_is_income_plus_profits(self, table2):
        o = equilibrium_outcome(table2)
        income = o.w * o.L
        assert local_welfare(table2, 1.0, o) == pytest.approx(income + o.pi, rel=1e-12)

    def test_value_at_unit_tightness(self, table2):
        from jobrationing.equilibrium import outcome_at

        assert local_welfare(table2, 1.0, outcome_at(table2, 1.0)) == pytest.approx(
            0.94229917180736853, rel=1e-12
        )

    def test_increasing_in_m_holding_outcome(self, table2):
        o = equilibrium_outcome(table2)
        values = [local_welfare(table2, m, o) for m in (1.0, 1.1, 1.5, 3.0)]
        assert np.all(np.diff(values) > 0)

    def test_m_below_one(self, table2):
        with pytest.raises(DomainError):
            local_welfare(table2, 0.99, equilibrium_outcome(table2))


class TestElasticity:
    def test_zero_at_efficient_point(self, table2):
        assert welfare_elasticity(table2, 1.0, efficient_tightness(table2)) == pytest.approx(0.0, abs=1e-12)

    def test_limits(self, table2):
        bound = tightness_upper_bound(table2)
        assert welfare_elasticity(table2, 1.0, bound * (1 - 1e-9)) == pytest.approx(0.35, abs=1e-4)
        assert welfare_elasticity(table2, 1.0, 1e-9) == pytest.approx(-0.65, abs=1e-4)

    def test_marginal_matches_general_form(self, table2):
        for beta in (0.0, 0.1, 0.2):
            p = table2.replace(beta=beta)
            for theta in (0.3, 1.0, 3.0):
                assert marginal_welfare_elasticity(p, theta) == pytest.approx(
                    welfare_elasticity(p, 1.0, theta), rel=1e-12, abs=1e-15
                )

    def test_marginal_frozen_values(self, table2):
        assert marginal_welfare_elasticity(table2, 1.0) == pytest.approx(0.0022335942203491872, rel=1e-9)
        assert marginal_welfare_elasticity(table2, 0.5) == pytest.approx(-0.16474986072751987, rel=1e-9)
        assert marginal_welfare_elasticity(table2, 2.0) == pytest.approx(0.14045368424218058, rel=1e-9)

    def test_scaling_with_beta(self, table2):
        base = marginal_welfare_elasticity(table2, 2.0)
        scaled = marginal_welfare_elasticity(table2.replace(beta=0.15), 2.0)
        assert scaled == pytest.approx(0.080259248138388901, rel=1e-9)
        assert scaled == pytest.approx(base * 0.2 / 0.35, rel=1e-12)

    @pytest.mark.parametrize("beta", [0.0, 0.1, 0.15])
    def test_sign_pattern(self, table2, beta):
        p = table2.replace(beta=beta)
        theta_star = efficient_tightness(p)
        grid = np.geomspace(1e-3, tightness_upper_bound(p) * 0.999, 1000)
        values = np.array([marginal_welfare_elasticity(p, t) for t in grid])
        assert np.all(np.diff(values) > 0)
        assert np.all(values[grid < theta_star] < 0)
        assert np.all(values[grid > theta_star] > 0)
        assert abs(marginal_welfare_elasticity(p, theta_star)) < 1e-6

    @pytest.mark.parametrize("m", [1.0, 1.01, 1.05])
    @pytest.mark.parametrize("theta", [0.5, 1.0, 1.5])
    def test_matches_finite_differences(self, table2, m, theta):
        p = at_tightness(table2, theta)
        theta_m = equilibrium_outcome(with_migration(p, m)).theta
        analytic = welfare_elasticity(p, m, theta_m)
        numeric = welfare_elasticity_numerically(p, m)
        assert abs(analytic - numeric) <= 1e-3 * max(abs(analytic), abs(numeric))


class TestEfficiency:
    def test_rounded_parameters(self, table2):
        assert efficient_tightness(table2) == pytest.approx(0.99021670030434045, rel=1e-10)

    def test_calibrated(self, calibrated):
        assert efficient_tightness(calibrated) == pytest.approx(1.0, abs=1e-6)

    def test_both_forms(self, table2):
        theta_star = efficient_tightness(table2)
        assert abs(efficiency_gap(table2, theta_star)) < 1e-8
        assert abs(hosios_gap(table2, theta_star)) < 1e-8
        eta = table2.eta
        tau = recruiter_producer_ratio(table2, theta_star)
        u = unemployment_rate(table2, theta_star)
        assert eta * tau == pytest.approx((1 - eta) * u, rel=1e-9)


class TestOptimalMigration:
    def test_slack_start(self, calibrated):
        for theta0 in (0.8, 0.9, 1.0):
            sol = optimal_migration(at_tightness(calibrated, theta0))
            assert sol.m_hat == 1.0
            assert sol.welfare_gain == 0.0

    def test_tight_start(self, calibrated):
        sol = optimal_migration(at_tightness(calibrated, 1.2))
        assert sol.m_hat == pytest.approx(1.012775, abs=1e-5)
        assert sol.theta_at_optimum == pytest.approx(0.98738, abs=1e-4)
        assert sol.theta_at_optimum < sol.efficient_theta
        assert sol.welfare_gain > 0

    def test_first_order_condition(self, calibrated):
        p = at_tightness(calibrated, 1.4)
        sol = optimal_migration(p)
        assert welfare_elasticity(p, sol.m_hat, sol.theta_at_optimum) == pytest.approx(0.0, abs=1e-9)

    def test_grid_oracle(self, calibrated):
        p = at_tightness(calibrated, 1.4)
        sol = optimal_migration(p)
        grid = np.linspace(1.0, 1.1, 2001)
        curve = welfare_curve(p, grid)
        best = grid[int(np.argmax([w for _, w in curve]))]
        assert abs(best - sol.m_hat) <= grid[1] - grid[0]

    def test_welfare_decreasing_when_slack(self, calibrated):
        p = at_tightness(calibrated, 0.7)
        (_, w0), (_, w1) = welfare_curve(p, [1.0, 1.001])
        assert w1 < w0

    def test_cap(self, calibrated):
        p = at_tightness(calibrated, 30.0)
        with pytest.raises(UnboundedOptimumError):
            optimal_migration(p, m_cap=1.01)
