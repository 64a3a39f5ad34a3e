import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jobrationing import (
    DomainError,
    ModelParameters,
    beveridge_elasticity,
    beveridge_vacancy,
    job_finding_rate,
    recruiter_producer_ratio,
    tightness_upper_bound,
    unemployment_rate,
    vacancy_filling_rate,
)


def log_derivative(fn, theta, rel=1e-6):
    h = rel
    return (math.log(fn(theta * math.exp(h))) - math.log(fn(theta * math.exp(-h)))) / (2 * h)


class TestParameters:
    def test_defaults_are_valid(self):
        ModelParameters()

    @pytest.mark.parametrize(
        "changes",
        [
            {"alpha": 0.0}, {"alpha": 1.0}, {"eta": 0.0}, {"eta": 1.0}, {"gamma": 0.0},
            {"gamma": 1.2}, {"beta": -0.1}, {"beta": 0.4}, {"mu": 0.0}, {"kappa": -1.0},
            {"lam": 0.0}, {"omega": 0.0}, {"a": 0.0}, {"H": -1.0}, {"mu": 0.05},
            {"a": float("nan")},
        ],
    )
    def test_invalid_rejected(self, changes):
        with pytest.raises(DomainError):
            ModelParameters(**changes)

    def test_beta_equal_alpha_allowed(self):
        assert ModelParameters(beta=0.35).beta == 0.35


class TestMatchingRates:
    def test_job_finding_examples(self, table2):
        assert job_finding_rate(table2, 1.0) == pytest.approx(2.16, rel=1e-15)
        assert job_finding_rate(table2, 0.0) == 0.0
        assert job_finding_rate(table2, 0.5) == pytest.approx(1.5063231596584379, rel=1e-12)

    def test_job_finding_log_oracle(self, table2):
        theta = 0.5
        via_logs = math.exp(math.log(table2.mu) + (1 - table2.eta) * math.log(theta))
        assert job_finding_rate(table2, theta) == pytest.approx(via_logs, rel=1e-14)

    def test_negative_theta(self, table2):
        with pytest.raises(DomainError):
            job_finding_rate(table2, -0.1)

    def test_vacancy_filling_examples(self, table2):
        assert vacancy_filling_rate(table2, 1.0) == pytest.approx(2.16)
        assert vacancy_filling_rate(table2, 2.0) == pytest.approx(1.5486716678570936, rel=1e-12)
        assert vacancy_filling_rate(table2, 0.5) == pytest.approx(3.0126463193168757, rel=1e-12)

    @pytest.mark.parametrize("theta", [0.0, -1.0])
    def test_vacancy_filling_needs_positive(self, table2, theta):
        with pytest.raises(DomainError):
            vacancy_filling_rate(table2, theta)

    @given(st.floats(min_value=1e-6, max_value=600.0))
    def test_f_equals_theta_q(self, theta):
        p = ModelParameters()
        assert job_finding_rate(p, theta) == pytest.approx(theta * vacancy_filling_rate(p, theta), rel=1e-12)


class TestUnemployment:
    def test_zero_tightness(self, table2):
        assert unemployment_rate(table2, 0.0) == 1.0

    @pytest.mark.parametrize(
        "theta, expected", [(1.0, 0.0430), (0.5, 0.0605), (1.5, 0.0351), (0.25, 0.0845)]
    )
    def test_published_anchors(self, table2, theta, expected):
        assert unemployment_rate(table2, theta) == pytest.approx(expected, abs=0.001)


class TestRecruiterProducerRatio:
    def test_examples(self, table2):
        assert recruiter_producer_ratio(table2, 0.0) == 0.0
        assert recruiter_producer_ratio(table2, 1.0) == pytest.approx(0.097 / (2.16 - 0.097), rel=1e-12)
        assert recruiter_producer_ratio(table2, 0.5) == pytest.approx(0.03326878138728661, rel=1e-12)

    def test_bound_raises(self, table2):
        bound = tightness_upper_bound(table2)
        with pytest.raises(DomainError):
            recruiter_producer_ratio(table2, bound)
        with pytest.raises(DomainError):
            recruiter_producer_ratio(table2, 2 * bound)

    def test_diverges_near_bound(self, table2):
        bound = tightness_upper_bound(table2)
        assert recruiter_producer_ratio(table2, bound * (1 - 1e-9)) > 1e8


class TestUpperBound:
    def test_table2(self, table2):
        assert tightness_upper_bound(table2) == pytest.approx(642.2008388478464, rel=1e-12)

    def test_unit_when_mu_equals_cost(self):
        p = ModelParameters(mu=0.2, lam=0.1, kappa=2.0 - 1e-12)
        assert tightness_upper_bound(p) == pytest.approx(1.0, rel=1e-9)

    def test_square(self):
        p = ModelParameters(mu=0.194, lam=0.097, kappa=1.0, eta=0.5)
        assert tightness_upper_bound(p) == pytest.approx(4.0, rel=1e-12)


class TestBeveridge:
    def test_equal_at_efficient_point(self, table2):
        assert beveridge_vacancy(table2, 0.043) == pytest.approx(0.043, abs=0.001)

    def test_slack_point(self, table2):
        u = unemployment_rate(table2, 0.5)
        assert u == pytest.approx(0.0605, abs=1e-4)
        assert beveridge_vacancy(table2, u) == pytest.approx(0.5 * u, rel=1e-12)
        assert beveridge_vacancy(table2, u) == pytest.approx(0.0302, abs=1e-4)

    @pytest.mark.parametrize("theta", [0.25, 1.0, 2.0])
    def test_round_trip(self, table2, theta):
        u = unemployment_rate(table2, theta)
        assert beveridge_vacancy(table2, u) == pytest.approx(theta * u, rel=1e-12)

    @pytest.mark.parametrize("u", [0.0, 1.0, -0.2])
    def test_domain(self, table2, u):
        with pytest.raises(DomainError):
            beveridge_vacancy(table2, u)

    def test_elasticity_examples(self):
        assert beveridge_elasticity(0.48, 0.043) == pytest.approx(1.0095, abs=5e-5)
        assert beveridge_elasticity(0.5, 1e-12) == pytest.approx(1.0, abs=1e-9)
        assert beveridge_elasticity(0.477534, 0.043) == pytest.approx(1.0, abs=1e-5)

    @pytest.mark.parametrize("theta", [0.2, 0.7, 1.0, 1.8])
    def test_elasticity_matches_curve_slope(self, table2, theta):
        h = 1e-6
        lo, hi = theta * math.exp(-h), theta * math.exp(h)
        u_lo, u_hi = unemployment_rate(table2, lo), unemployment_rate(table2, hi)
        v_lo, v_hi = lo * u_lo, hi * u_hi
        slope = -(math.log(v_hi) - math.log(v_lo)) / (math.log(u_hi) - math.log(u_lo))
        u = unemployment_rate(table2, theta)
        assert beveridge_elasticity(table2.eta, u) == pytest.approx(slope, rel=1e-3)


class TestMonotonicityAndElasticities:
    def test_grid_monotonicity(self, table2):
        grid = np.linspace(1e-3, tightness_upper_bound(table2) * 0.999, 1000)
        f = [job_finding_rate(table2, t) for t in grid]
        q = [vacancy_filling_rate(table2, t) for t in grid]
        u = [unemployment_rate(table2, t) for t in grid]
        tau = [recruiter_producer_ratio(table2, t) for t in grid]
        assert np.all(np.diff(f) > 0)
        assert np.all(np.diff(q) < 0)
        assert np.all(np.diff(u) < 0)
        assert np.all(np.diff(tau) > 0)

    @pytest.mark.parametrize("theta", [0.1, 0.5, 1.0, 2.0, 10.0])
    def test_log_derivatives(self, table2, theta):
        eta = table2.eta
        u = unemployment_rate(table2, theta)
        tau = recruiter_producer_ratio(table2, theta)
        assert log_derivative(lambda t: job_finding_rate(table2, t), theta) == pytest.approx(1 - eta, rel=1e-4)
        assert log_derivative(lambda t: vacancy_filling_rate(table2, t), theta) == pytest.approx(-eta, rel=1e-4)
        assert log_derivative(
            lambda t: 1 + recruiter_producer_ratio(table2, t), theta
        ) == pytest.approx(eta * tau, rel=1e-4)
        assert log_derivative(lambda t: unemployment_rate(table2, t), theta) == pytest.approx(
            -(1 - eta) * (1 - u), rel=1e-4
        )
