# This code is part of RQPhase.
#
# (C) Copyright 2024 RQPhase developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

from rqphase.estimators.estimator import MeanEstimator, TuningPolicy, estimator_from_name
from rqphase.exceptions import InvalidArgumentError, InvalidConfigurationError
from rqphase.gaussian.states import SingleOutlier
from rqphase.robustness.breakdown import DEFAULT_THETA_TOL, BreakdownRule, calibrate_theta_tol, \
    finite_breakdown_point, mean_theta_after_replacement
from rqphase.robustness.efficiency import relative_efficiency
from rqphase.robustness.eps_curve import EpsCurve, EpsCurvePoint, epsilon_curve, epsilon_curves
from rqphase.robustness.replication import Target, replicate_targets, run_replications, sample_size_sweep, \
    simulate_runs
from tests.shared_utils import ALPHA_SINGLE, BASE_SEED, KAPPA0, TRUE_PHASE, Z0, distributed_outlier_scenario, \
    single_outlier_scenario

ESTIMATORS = ("mean", "median", "bisquare", "gamma")


@pytest.fixture(scope="module")
def single_outlier_stats():
    """500 replications of the single-outlier scenario at n = 5000 for the four estimators."""
    scenario = single_outlier_scenario(n=5000)
    return {name: replicate_targets(scenario, estimator_from_name(name), 500, BASE_SEED) for name in ESTIMATORS}


class TestReplications:

    def test_phase_truth_recovery(self, single_outlier_stats):
        for name in ("gamma", "bisquare"):
            assert abs(single_outlier_stats[name][Target.THETA].mean_estimate - TRUE_PHASE) <= 0.005

    def test_mean_and_median_are_biased(self, single_outlier_stats):
        assert abs(single_outlier_stats["mean"][Target.THETA].bias) > 0.002
        # The median's phase error partly cancels between quadratures; its amplitude bias does not.
        assert abs(single_outlier_stats["median"][Target.ALPHA_R].bias) > 0.003
        assert abs(single_outlier_stats["median"][Target.ALPHA_I].bias) > 0.003

    def test_mean_follows_the_mixture_mean(self, single_outlier_stats):
        assert single_outlier_stats["mean"][Target.ALPHA_R].mean_estimate == pytest.approx(10.05, abs=0.01)
        assert abs(single_outlier_stats["gamma"][Target.ALPHA_R].bias) < 0.01

    def test_mse_ordering(self, single_outlier_stats):
        mse = {name: stats[Target.THETA].mse for name, stats in single_outlier_stats.items()}
        assert mse["gamma"] < mse["mean"]
        assert mse["bisquare"] < mse["mean"]

    def test_mse_decomposition(self, single_outlier_stats):
        for stats in single_outlier_stats.values():
            for target_stats in stats.values():
                assert target_stats.mse >= target_stats.bias ** 2
                assert target_stats.mse == pytest.approx(target_stats.bias ** 2 + target_stats.variance,
                                                         rel=1e-9, abs=1e-15)

    def test_iterations(self, single_outlier_stats):
        assert single_outlier_stats["mean"][Target.ALPHA_R].mean_iterations == 0
        gamma = single_outlier_stats["gamma"]
        assert gamma[Target.THETA].mean_iterations == pytest.approx(
            gamma[Target.ALPHA_R].mean_iterations + gamma[Target.ALPHA_I].mean_iterations)

    def test_unbiased_without_contamination(self):
        stats = run_replications(single_outlier_scenario(n=5000, epsilon=0.0), MeanEstimator(), Target.THETA, 500,
                                 BASE_SEED)
        assert abs(stats.bias) < 0.005
        assert stats.runs == 500 and stats.epsilon == 0.0

    @pytest.mark.parametrize("epsilon", [0.01, 0.1, 0.2])
    def test_mixture_mean_bias_law(self, epsilon):
        stats = run_replications(single_outlier_scenario(n=5000, epsilon=epsilon), MeanEstimator(), Target.ALPHA_R,
                                 200, BASE_SEED)
        monte_carlo_sigma = stats.sd / math.sqrt(stats.runs)
        assert abs(stats.mean_estimate - (10 + 5 * epsilon)) <= 3 * monte_carlo_sigma

    def test_distributed_outlier_ordering(self):
        scenario = distributed_outlier_scenario(n=5000)
        mse = {name: run_replications(scenario, estimator_from_name(name), Target.THETA, 400, BASE_SEED).mse
               for name in ESTIMATORS}
        assert max(mse["gamma"], mse["bisquare"]) < min(mse["mean"], mse["median"])

    def test_deterministic_and_process_independent(self):
        scenario = single_outlier_scenario(n=500)
        kind = estimator_from_name("gamma")
        serial = simulate_runs(scenario, kind, 6, 99, num_processes=1)
        assert serial == simulate_runs(scenario, kind, 6, 99, num_processes=1)
        assert serial == simulate_runs(scenario, kind, 6, 99, num_processes=2)

    def test_sample_size_sweep(self):
        kinds = [estimator_from_name(name) for name in ("mean", "gamma")]
        stats = sample_size_sweep([200, 400], single_outlier_scenario(), kinds, 3, BASE_SEED, (Target.THETA,))
        assert [(s.estimator, s.n) for s in stats] == [("mean", 200), ("mean", 400), ("gamma", 200), ("gamma", 400)]

    def test_invalid_runs(self):
        with pytest.raises(InvalidArgumentError):
            run_replications(single_outlier_scenario(n=100), MeanEstimator(), Target.THETA, 0, BASE_SEED)


class TestEpsilonCurve:

    def test_gamma_stays_near_the_truth(self):
        grid = [0.0, 0.1, 0.2, 0.3]
        curve = epsilon_curve(grid, 5000, estimator_from_name("gamma"), 20, BASE_SEED, single_outlier_scenario())
        assert curve.epsilons.tolist() == grid
        assert curve.departure(TRUE_PHASE, 0.05) is None

    def test_bisquare_stays_near_the_truth_for_moderate_contamination(self):
        curve = epsilon_curve([0.0, 0.1, 0.2], 5000, estimator_from_name("bisquare"), 20, BASE_SEED,
                              single_outlier_scenario())
        assert np.all(np.abs(curve.estimates - TRUE_PHASE) < 0.05)

    def test_mean_curve_is_linear_in_epsilon(self):
        grid = [0.0, 0.1, 0.2, 0.3]
        curves = epsilon_curves(grid, 5000, MeanEstimator(), 50, BASE_SEED, single_outlier_scenario())
        for point in curves[Target.ALPHA_R].points:
            assert point.mean_estimate == pytest.approx(10 + 5 * point.epsilon, abs=0.04)
        thetas = curves[Target.THETA].estimates
        assert np.all(np.diff(thetas) > 0)
        assert thetas[0] == pytest.approx(TRUE_PHASE, abs=0.005)
        assert thetas[-1] < math.atan(1.0)

    def test_zero_epsilon_matches_replications(self):
        scenario = single_outlier_scenario(n=1000)
        kind = estimator_from_name("bisquare")
        curve = epsilon_curve([0.0, 0.1], 1000, kind, 10, 5, scenario)
        stats = run_replications(scenario.with_epsilon(0.0), kind, Target.THETA, 10, 5)
        assert curve.points[0].mean_estimate == stats.mean_estimate
        assert curve.points[0].mse == stats.mse

    @pytest.mark.parametrize("grid", [[], [0.1, 0.1], [0.2, 0.1], [0.0, 1.0]])
    def test_invalid_grid(self, grid):
        with pytest.raises(InvalidArgumentError):
            epsilon_curve(grid, 100, MeanEstimator(), 2, BASE_SEED, single_outlier_scenario())

    def test_points_must_increase(self):
        point = EpsCurvePoint(0.1, 0.4, 0.0, 0.0, 0.0, 0.0)
        with pytest.raises(InvalidArgumentError):
            EpsCurve("mean", Target.THETA, 100, 1, (point, point))


class TestIterationEconomy:
    """Mean IRLS iteration counts stay small before breakdown."""

    @pytest.mark.parametrize("target", [Target.ALPHA_R, Target.ALPHA_I])
    def test_iteration_counts(self, target):
        for name in ("bisquare", "gamma"):
            curve = epsilon_curve([0.0, 0.1, 0.25], 5000, estimator_from_name(name), 20, BASE_SEED,
                                  single_outlier_scenario(), target)
            assert all(1 <= p.mean_iterations <= 18 for p in curve.points)


class TestFiniteBreakdownPoint:

    @pytest.fixture(scope="class")
    def fbp(self):
        scenario = single_outlier_scenario(n=5000)
        return {name: finite_breakdown_point(scenario, estimator_from_name(name), step=250,
                                             replacement=(1000.0, 0.1), seed=BASE_SEED)
                for name in ESTIMATORS}

    def test_base_dataset_never_breaks_down(self, fbp):
        for result in fbp.values():
            assert result.sweep[0].m == 0
            assert not result.sweep[0].fired

    def test_mean(self, fbp):
        assert abs(fbp["mean"].fbp - 0.30) <= 0.10 + 1e-9

    def test_gamma_and_median(self, fbp):
        for name in ("gamma", "median"):
            assert abs(fbp[name].fbp - 0.55) <= 0.10 + 1e-9

    def test_bisquare_holds_until_the_outliers_are_near_half(self, fbp):
        assert fbp["mean"].fbp < fbp["bisquare"].fbp
        assert 0.45 - 1e-9 <= fbp["bisquare"].fbp <= 0.50 + 1e-9

    def test_first_hit_scan(self, fbp):
        for result in fbp.values():
            assert not result.no_breakdown
            assert result.sweep[-1].fired
            assert not any(point.fired for point in result.sweep[:-1])
            assert result.m_star == result.first_hit - result.step
            assert result.fbp == result.m_star / result.n
            assert 0 <= result.fbp < 1

    def test_full_sweep(self):
        scenario = single_outlier_scenario(n=1000)
        result = finite_breakdown_point(scenario, MeanEstimator(), step=100, seed=3, full_sweep=True)
        assert [point.m for point in result.sweep] == list(range(0, 1001, 100))
        assert result.m_star == result.first_hit - 100

    def test_no_breakdown(self):
        rule = BreakdownRule(theta_target=0.0, theta_tol=1e-9, magnitude_bound=1e9)
        result = finite_breakdown_point(single_outlier_scenario(n=500), MeanEstimator(), rule, step=250,
                                        replacement=(20.0, 0.1), seed=1)
        assert result.no_breakdown
        assert result.m_star == 500

    def test_invalid_step(self):
        with pytest.raises(InvalidArgumentError):
            finite_breakdown_point(single_outlier_scenario(n=100), MeanEstimator(), step=0)

    def test_rule(self):
        rule = BreakdownRule.for_amplitude(ALPHA_SINGLE)
        assert rule.magnitude_bound == pytest.approx(100 * math.sqrt(116))
        assert rule.fires(math.atan(1.0) + 0.001, 500.0, 500.0)
        assert rule.fires(0.1, 2000.0, 1.0)
        assert not rule.fires(TRUE_PHASE, 10.0, 4.0)
        assert BreakdownRule().magnitude_bound == math.inf
        assert not BreakdownRule().fires(TRUE_PHASE, 1e9, 4e8)
        with pytest.raises(InvalidConfigurationError):
            BreakdownRule(theta_tol=0.0)


class TestThetaTolCalibration:

    def test_default_lies_in_the_calibrated_interval(self):
        low, high = calibrate_theta_tol(ALPHA_SINGLE, SingleOutlier(Z0, KAPPA0), 0.01, 1000.0, 250, 5000, 0.3)
        assert low < DEFAULT_THETA_TOL < high

    def test_mean_phase_approaches_arctan_one(self):
        thetas = mean_theta_after_replacement(ALPHA_SINGLE, SingleOutlier(Z0, KAPPA0), 0.01, 1000.0,
                                              np.linspace(0, 0.9, 10))
        assert thetas[0] == pytest.approx(math.atan(4.11 / 10.05))
        assert np.all(np.diff(thetas) > 0)
        assert thetas[-1] < math.atan(1.0)


class TestRelativeEfficiency:

    def test_mean_against_itself(self):
        assert relative_efficiency(MeanEstimator(), 200, 50, BASE_SEED) == pytest.approx(1.0)

    def test_bisquare(self):
        assert relative_efficiency(estimator_from_name("bisquare"), 500, 1000, BASE_SEED) == \
               pytest.approx(0.95, abs=0.10)

    def test_median(self):
        assert relative_efficiency(estimator_from_name("median"), 500, 1000, BASE_SEED) == \
               pytest.approx(2 / math.pi, abs=0.10)

    def test_gamma_tuned_for_efficiency(self):
        gamma = estimator_from_name("gamma", TuningPolicy(gamma_exponent=0.2))
        assert relative_efficiency(gamma, 500, 1000, BASE_SEED) == pytest.approx(0.96, abs=0.05)
