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
from scipy.integrate import quad
from scipy.stats import kstest

from rqphase.exceptions import DomainError
from rqphase.gaussian.homodyne import beta_from_kappa, contaminated_cdf, contaminated_pdf, homodyne_mean, \
    homodyne_sigma, kappa_from_beta, mixture_mean, outlier_distribution
from rqphase.gaussian.states import ComplexAmplitude, ContaminatedModel, DistributedOutlier, GaussianShiftState, \
    SingleOutlier, as_amplitude
from rqphase.sampling.sampler import draw_outcomes, make_rng
from tests.shared_utils import ALPHA_SINGLE, TRUE_PHASE, distributed_outlier_scenario, single_outlier_scenario


class TestThermalParameters:
    """kappa and the inverse temperature beta are two views of the same thermal state."""

    @pytest.mark.parametrize("beta", [0.05, 0.5, 1.0, 3.0])
    def test_round_trip(self, beta):
        kappa = kappa_from_beta(beta)
        assert 2 * kappa ** 2 * math.expm1(beta) == pytest.approx(1.0)
        assert beta_from_kappa(kappa) == pytest.approx(beta)

    def test_inverse_to_machine_precision(self):
        for beta in np.geomspace(0.01, 50.0, 30):
            assert beta_from_kappa(kappa_from_beta(beta)) == pytest.approx(beta, rel=1e-12)
        for kappa in np.geomspace(0.01, 10.0, 30):
            assert kappa_from_beta(beta_from_kappa(kappa)) == pytest.approx(kappa, rel=1e-12)

    def test_from_beta(self):
        state = GaussianShiftState.from_beta(ALPHA_SINGLE, 1.0)
        assert state.kappa == pytest.approx(kappa_from_beta(1.0))
        assert state.beta == pytest.approx(1.0)
        assert not state.is_coherent

    @pytest.mark.parametrize("beta", [0.0, -1.0])
    def test_beta_domain(self, beta):
        with pytest.raises(DomainError):
            kappa_from_beta(beta)

    def test_kappa_domain(self):
        with pytest.raises(DomainError):
            beta_from_kappa(0.0)
        with pytest.raises(DomainError):
            GaussianShiftState(ALPHA_SINGLE, -0.1)


class TestHomodyneStatistics:

    def test_quadrature_means(self):
        assert homodyne_mean(ALPHA_SINGLE, 0.0) == pytest.approx(10.0)
        assert homodyne_mean(ALPHA_SINGLE, np.pi / 2) == pytest.approx(4.0)
        assert homodyne_mean(ALPHA_SINGLE, np.pi) == pytest.approx(-10.0)

    def test_mean_is_linear_in_the_center(self):
        phis = np.linspace(0.0, 2 * np.pi, 25)
        z1, z2 = ComplexAmplitude(10.0, 4.0), ComplexAmplitude(-3.0, 15.0)
        combined = homodyne_mean(2.5 * z1 + (-0.5) * z2, phis)
        expected = 2.5 * homodyne_mean(z1, phis) - 0.5 * homodyne_mean(z2, phis)
        assert np.allclose(combined, expected, rtol=0, atol=1e-12)

    def test_sigma(self):
        assert homodyne_sigma(0.0) == 0.5
        assert homodyne_sigma(0.1) == pytest.approx(math.sqrt(0.26))
        mean, sd = GaussianShiftState(ALPHA_SINGLE).homodyne_distribution(0.0)
        assert (mean, sd) == pytest.approx((10.0, 0.5))

    def test_single_outlier_distribution(self):
        model = single_outlier_scenario().model
        assert outlier_distribution(model, 0.0) == pytest.approx((15.0, math.sqrt(0.26)))

    def test_distributed_outlier_distribution(self):
        model = distributed_outlier_scenario().model
        mean, sd = outlier_distribution(model, 0.0)
        assert mean == pytest.approx(0.1)
        assert sd == pytest.approx(math.sqrt(0.01 + 0.01 + 0.25))

    def test_narrow_distributed_outlier_is_a_single_outlier(self):
        single = ContaminatedModel(ALPHA_SINGLE, 0.1, SingleOutlier(ComplexAmplitude(15.0, 15.0), 0.1))
        narrow = ContaminatedModel(ALPHA_SINGLE, 0.1, DistributedOutlier(15.0, 1e-8, 15.0, 1e-8, 0.1))
        xs = np.linspace(0.0, 20.0, 1000)
        for phi in (0.0, np.pi / 2):
            difference = np.abs(contaminated_pdf(single, phi, xs) - contaminated_pdf(narrow, phi, xs))
            assert np.max(difference) <= 1e-5

    def test_mixture_mean(self):
        model = single_outlier_scenario(epsilon=0.2).model
        assert mixture_mean(model, 0.0) == pytest.approx(10.0 + 5 * 0.2)
        assert mixture_mean(model, np.pi / 2) == pytest.approx(4.0 + 11 * 0.2)


class TestContaminatedModel:

    @pytest.mark.parametrize("epsilon", [-0.1, 1.0, 1.2])
    def test_epsilon_domain(self, epsilon):
        with pytest.raises(DomainError):
            ContaminatedModel(ALPHA_SINGLE, epsilon, SingleOutlier(ComplexAmplitude(15, 15)))

    def test_true_phase(self):
        assert single_outlier_scenario().model.true_phase == pytest.approx(0.3805063771)
        assert distributed_outlier_scenario().model.true_phase == pytest.approx(-TRUE_PHASE)

    def test_amplitude_helpers(self):
        assert as_amplitude([1, 2]) == ComplexAmplitude(1.0, 2.0)
        assert as_amplitude(3 - 1j) == ComplexAmplitude(3.0, -1.0)
        assert complex(ALPHA_SINGLE) == 10 + 4j
        assert ALPHA_SINGLE.magnitude == pytest.approx(math.sqrt(116))
        with pytest.raises(DomainError):
            ComplexAmplitude(math.nan, 0.0)

    def test_describe(self):
        text = distributed_outlier_scenario().model.outliers.describe()
        assert text == "α_R ~ N(0.1, 0.1), α_I ~ N(0.1, 0.1), κ0 = 0.1"

    @pytest.mark.parametrize("scenario, phi", [
        (single_outlier_scenario(epsilon=0.01), 0.0),
        (single_outlier_scenario(epsilon=0.3), np.pi / 2),
        (distributed_outlier_scenario(epsilon=0.2), 0.0),
        (distributed_outlier_scenario(epsilon=0.0), np.pi / 2),
    ])
    def test_density_normalization(self, scenario, phi):
        model = scenario.model
        total, _ = quad(lambda x: contaminated_pdf(model, phi, x), -30, 50, points=[-4, 0.1, 4, 10, 15],
                        limit=500, epsabs=1e-12, epsrel=1e-12)
        assert total == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("scenario, phi", [
        (single_outlier_scenario(epsilon=0.01), 0.0),
        (single_outlier_scenario(epsilon=0.25), np.pi / 2),
        (distributed_outlier_scenario(epsilon=0.2), 0.0),
    ])
    def test_sampler_matches_cdf(self, scenario, phi):
        """Kolmogorov-Smirnov distance between 10^5 simulated outcomes and the mixture CDF."""
        model = scenario.model
        xs, _ = draw_outcomes(model, np.full(100_000, phi), make_rng(7))
        statistic = kstest(xs, lambda x: contaminated_cdf(model, phi, x)).statistic
        assert statistic <= 0.01

    def test_cdf_limits(self):
        model = single_outlier_scenario(epsilon=0.1).model
        assert contaminated_cdf(model, 0.0, -100.0) == pytest.approx(0.0)
        assert contaminated_cdf(model, 0.0, 100.0) == pytest.approx(1.0)
