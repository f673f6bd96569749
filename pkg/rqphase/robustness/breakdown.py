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
Finite breakdown point by data replacement.

One base dataset is simulated; for m = 0, step, 2 step, ... m records are
replaced by artificial outliers and the phase is re-estimated. The first m at
which the estimate leaves the parameter space ends the sweep, and the previous
m is the reported m*.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from rqphase.estimators.amplitude import estimate_phase
from rqphase.estimators.estimator import BaseEstimator
from rqphase.exceptions import InvalidArgumentError, InvalidConfigurationError, UndefinedPhaseError
from rqphase.gaussian.homodyne import mixture_mean
from rqphase.gaussian.states import ComplexAmplitude, ContaminatedModel, OutlierSpec, as_amplitude
from rqphase.sampling.dataset import HALF_PI, ScenarioConfig
from rqphase.sampling.sampler import generate_dataset, make_rng, replace_with_outliers

THETA_TARGET = math.atan(1.0)
DEFAULT_THETA_TOL = 0.006
DEFAULT_MAGNITUDE_FACTOR = 100.0


@dataclass(frozen=True)
class BreakdownRule:
    """
    When an estimate counts as outside the parameter space.

    The rule fires when |theta - theta_target| <= theta_tol, when either amplitude
    estimate exceeds magnitude_bound in absolute value, or when the phase is undefined.
    The constructor leaves magnitude_bound unbounded; `for_amplitude` applies the default
    bound of magnitude_factor * |alpha| and is what experiments use.
    """
    theta_target: float = THETA_TARGET
    theta_tol: float = DEFAULT_THETA_TOL
    magnitude_bound: float = math.inf

    def __post_init__(self):
        if not self.theta_tol > 0:
            raise InvalidConfigurationError(f"theta_tol must be > 0, got {self.theta_tol}.")
        if not self.magnitude_bound > 0:
            raise InvalidConfigurationError(f"magnitude_bound must be > 0, got {self.magnitude_bound}.")

    @classmethod
    def for_amplitude(cls, alpha: ComplexAmplitude, theta_tol: float = DEFAULT_THETA_TOL,
                      magnitude_factor: float = DEFAULT_MAGNITUDE_FACTOR) -> "BreakdownRule":
        return cls(THETA_TARGET, theta_tol, magnitude_factor * as_amplitude(alpha).magnitude)

    def fires(self, theta: Optional[float], alpha_r: float, alpha_i: float) -> bool:
        if theta is None or not all(map(math.isfinite, (theta, alpha_r, alpha_i))):
            return True
        if max(abs(alpha_r), abs(alpha_i)) > self.magnitude_bound:
            return True
        return abs(theta - self.theta_target) <= self.theta_tol


@dataclass(frozen=True)
class SweepPoint:
    m: int
    theta: float
    fired: bool


@dataclass(frozen=True)
class FbpResult:
    """
    Outcome of a breakdown sweep.

    Attributes:
        m_star (int): the last replacement count before the rule fired, or n when it never fired.
        fbp (float): m_star / n.
        no_breakdown (bool): the rule never fired up to m = n.
        sweep (tuple): the evaluated (m, theta, fired) points in sweep order.
    """
    estimator: str
    n: int
    step: int
    m_star: int
    fbp: float
    rule: BreakdownRule
    no_breakdown: bool = False
    sweep: Tuple[SweepPoint, ...] = field(default_factory=tuple)

    @property
    def first_hit(self) -> Optional[int]:
        for point in self.sweep:
            if point.fired:
                return point.m
        return None


def _evaluate(dataset, kind: BaseEstimator, rule: BreakdownRule) -> Tuple[float, bool]:
    try:
        theta, alpha_r, alpha_i = estimate_phase(dataset, kind)
    except UndefinedPhaseError:
        return math.nan, True
    return theta, rule.fires(theta, alpha_r.value, alpha_i.value)


def finite_breakdown_point(scenario: ScenarioConfig, kind: BaseEstimator, rule: BreakdownRule = None,
                           step: int = 250, replacement: Tuple[float, float] = (1000.0, 0.1), seed: int = 0,
                           full_sweep: bool = False, stratify_by_phase: bool = True) -> FbpResult:
    """
    Sweep the replacement count and report the finite breakdown point.

    The replacement draw for count m uses the random stream seeded with (seed, m), so the
    sweep at a given m does not depend on which other counts were evaluated. With
    `full_sweep` the sweep continues to m = n after the first hit, for plotting.
    """
    if not (isinstance(step, (int, np.integer)) and step >= 1):
        raise InvalidArgumentError(f"step must be a positive integer, got {step}.")
    if rule is None:
        rule = BreakdownRule.for_amplitude(scenario.model.alpha)
    replacement_mean, replacement_sd = replacement

    base = generate_dataset(scenario, seed)
    sweep = []
    first_hit = None
    for m in range(0, base.n + 1, step):
        replaced = replace_with_outliers(base, m, replacement_mean, replacement_sd, make_rng([seed, m]),
                                         stratify_by_phase=stratify_by_phase)
        theta, fired = _evaluate(replaced, kind, rule)
        sweep.append(SweepPoint(m, theta, fired))
        if fired and first_hit is None:
            first_hit = m
            if not full_sweep:
                break

    if first_hit is None:
        m_star = base.n
    else:
        m_star = max(first_hit - step, 0)
    return FbpResult(kind.label, base.n, step, m_star, m_star / base.n, rule, first_hit is None, tuple(sweep))


def mean_theta_after_replacement(alpha, outliers: OutlierSpec, epsilon: float, replacement_mean: float,
                                 fraction) -> np.ndarray:
    """Closed-form large-n phase estimate of the sample mean after a fraction of the data is replaced."""
    model = ContaminatedModel(as_amplitude(alpha), epsilon, outliers)
    fraction = np.asarray(fraction, dtype=float)
    real = (1 - fraction) * mixture_mean(model, 0.0) + fraction * replacement_mean
    imag = (1 - fraction) * mixture_mean(model, HALF_PI) + fraction * replacement_mean
    return np.arctan(imag / real)


def calibrate_theta_tol(alpha, outliers: OutlierSpec, epsilon: float, replacement_mean: float = 1000.0,
                        step: int = 250, n: int = 5000, target_fraction: float = 0.3) -> Tuple[float, float]:
    """
    The interval [low, high) of theta_tol for which the sample mean breaks down right after
    `target_fraction`, i.e. its FBP equals target_fraction in the large-n limit.
    """
    m_target = int(round(target_fraction * n))
    if not 0 <= m_target < n or m_target % step:
        raise InvalidArgumentError(f"target_fraction * n = {m_target} must be a multiple of step = {step} below n.")
    thetas = mean_theta_after_replacement(alpha, outliers, epsilon, replacement_mean,
                                          [m_target / n, (m_target + step) / n])
    distances = np.abs(thetas - THETA_TARGET)
    low, high = float(distances[1]), float(distances[0])
    if not low < high:
        raise InvalidArgumentError("The sample mean does not approach arctan(1) monotonically on this grid.")
    return low, high
