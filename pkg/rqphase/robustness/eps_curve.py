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
The epsilon-curve: an estimator's behaviour as a function of the contamination
parameter at a fixed sample size.

Every point reuses the same base seed, so neighbouring points share their
random numbers and the curve is smooth in epsilon.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from rqphase.estimators.estimator import BaseEstimator
from rqphase.exceptions import InvalidArgumentError
from rqphase.robustness.replication import ReplicationStats, Target, replicate_targets
from rqphase.sampling.dataset import ScenarioConfig


@dataclass(frozen=True)
class EpsCurvePoint:
    epsilon: float
    mean_estimate: float
    sd: float
    bias: float
    mse: float
    mean_iterations: float

    @classmethod
    def from_stats(cls, stats: ReplicationStats) -> "EpsCurvePoint":
        return cls(stats.epsilon, stats.mean_estimate, stats.sd, stats.bias, stats.mse, stats.mean_iterations)


@dataclass(frozen=True)
class EpsCurve:
    estimator: str
    target: Target
    n: int
    runs: int
    points: Tuple[EpsCurvePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if np.any(np.diff(self.epsilons) <= 0):
            raise InvalidArgumentError("The epsilons of an epsilon-curve must be strictly increasing.")

    @property
    def epsilons(self) -> np.ndarray:
        return np.array([p.epsilon for p in self.points])

    @property
    def estimates(self) -> np.ndarray:
        return np.array([p.mean_estimate for p in self.points])

    def departure(self, truth: float, tolerance: float):
        """The first epsilon whose mean estimate is farther than `tolerance` from `truth`, else None."""
        for point in self.points:
            if abs(point.mean_estimate - truth) > tolerance:
                return point.epsilon
        return None


def check_eps_grid(eps_grid: Sequence[float]) -> np.ndarray:
    grid = np.asarray(eps_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise InvalidArgumentError("eps_grid must be a non-empty list of contamination parameters.")
    if np.any(grid < 0) or np.any(grid >= 1):
        raise InvalidArgumentError(f"Every epsilon must lie in [0, 1), got {grid.tolist()}.")
    if np.any(np.diff(grid) <= 0):
        raise InvalidArgumentError(f"eps_grid must be strictly increasing, got {grid.tolist()}.")
    return grid


def epsilon_curves(eps_grid: Sequence[float], n: int, kind: BaseEstimator, runs: int, base_seed: int,
                   scenario: ScenarioConfig, num_processes: int = 1) -> dict:
    """One EpsCurve per target, all computed from the same replications."""
    grid = check_eps_grid(eps_grid)
    per_eps = [replicate_targets(scenario.with_n(n).with_epsilon(float(eps)), kind, runs, base_seed, num_processes)
               for eps in grid]
    return {target: EpsCurve(kind.label, target, n, runs,
                             tuple(EpsCurvePoint.from_stats(stats[target]) for stats in per_eps))
            for target in Target}


def epsilon_curve(eps_grid: Sequence[float], n: int, kind: BaseEstimator, runs: int, base_seed: int,
                  scenario: ScenarioConfig, target: Target = Target.THETA, num_processes: int = 1) -> EpsCurve:
    return epsilon_curves(eps_grid, n, kind, runs, base_seed, scenario, num_processes)[Target(target)]
