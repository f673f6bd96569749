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

"""
Location estimators of one homodyne split.

Every estimator maps a sample to an EstimateResult. The closed forms (mean,
median) report zero iterations; M-estimators tune their psi-function on the
sample with the TuningPolicy and solve the M-equation by IRLS.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from rqphase.estimators import scale
from rqphase.estimators.irls import EstimateResult, IrlsConfig, irls_solve
from rqphase.estimators.psi import BasePsi, BisquarePsi, GammaPsi, MleNormalPsi
from rqphase.exceptions import InvalidConfigurationError

PSI_NAMES = ("bisquare", "gamma", "mle")
ESTIMATOR_NAMES = ("mean", "median") + PSI_NAMES


@dataclass(frozen=True)
class TuningPolicy:
    """
    How psi-functions are tuned on a sample.

    Attributes:
        bisquare_c_factor (float): bisquare cutoff c = bisquare_c_factor * sigma_hat.
        gamma_exponent (float): power gamma of the gamma psi-function; 0.2 gives 95% efficiency.
        gamma_sigma_source (str): plug-in scale sigma_hat, the MADN of the sample.
    """
    bisquare_c_factor: float = 4.68
    gamma_exponent: float = 0.5
    gamma_sigma_source: str = "madn"

    def __post_init__(self):
        if not (self.bisquare_c_factor > 0 and self.gamma_exponent > 0):
            raise InvalidConfigurationError("bisquare_c_factor and gamma_exponent must be > 0.")
        if self.gamma_sigma_source != "madn":
            raise InvalidConfigurationError(f"Unsupported sigma source {self.gamma_sigma_source!r}.")


class BaseEstimator(ABC):
    """The base class of location estimators."""

    label = "estimator"

    @abstractmethod
    def estimate(self, xs) -> EstimateResult:
        pass

    def __repr__(self):
        return f"<{self.__class__.__name__}({self.label})>"


class MeanEstimator(BaseEstimator):
    """The sample mean, which is the MLE for an uncontaminated coherent state."""

    label = "mean"

    def estimate(self, xs) -> EstimateResult:
        return EstimateResult(scale.mean(xs), 0, True)


class MedianEstimator(BaseEstimator):
    label = "median"

    def estimate(self, xs) -> EstimateResult:
        return EstimateResult(scale.median(xs), 0, True)


@dataclass(frozen=True, repr=False)
class MEstimator(BaseEstimator):
    """
    A location M-estimator.

    Attributes:
        psi_name (str): "bisquare", "gamma" or "mle".
        tuning (TuningPolicy): how the psi-function is tuned on each sample.
        irls (IrlsConfig): stopping rule of the iteration.
    """
    psi_name: str
    tuning: TuningPolicy = field(default_factory=TuningPolicy)
    irls: IrlsConfig = field(default_factory=IrlsConfig)

    def __post_init__(self):
        if self.psi_name not in PSI_NAMES:
            raise InvalidConfigurationError(f"Unknown psi-function {self.psi_name!r}, choose from {PSI_NAMES}.")

    @property
    def label(self) -> str:
        return self.psi_name

    def tune(self, xs) -> BasePsi:
        """Build the psi-function for this sample; sigma_hat is computed once and held fixed."""
        if self.psi_name == "mle":
            return MleNormalPsi()
        sigma_hat = scale.robust_sigma(xs)
        if self.psi_name == "bisquare":
            return BisquarePsi(self.tuning.bisquare_c_factor * sigma_hat)
        return GammaPsi(self.tuning.gamma_exponent, sigma_hat)

    def estimate(self, xs) -> EstimateResult:
        xs = np.asarray(xs, dtype=float)
        return irls_solve(xs, self.tune(xs), self.irls)


EstimatorKind = BaseEstimator


def estimator_from_name(name: str, tuning: TuningPolicy = None, irls: IrlsConfig = None) -> BaseEstimator:
    name = name.strip().lower()
    if name == "mean":
        return MeanEstimator()
    if name == "median":
        return MedianEstimator()
    if name in PSI_NAMES:
        return MEstimator(name, tuning or TuningPolicy(), irls or IrlsConfig())
    raise InvalidConfigurationError(f"Unknown estimator {name!r}, choose from {ESTIMATOR_NAMES}.")
