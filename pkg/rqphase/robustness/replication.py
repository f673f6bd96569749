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
Monte Carlo replication of an estimation experiment.

Replication r simulates a dataset with seed base_seed + r, estimates both
amplitude components and the phase, and the per-run results are reduced in
run order into bias, MSE and mean iteration counts.
"""

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Dict, Iterable, List, Sequence

import numpy as np

from rqphase.estimators.amplitude import estimate_phase
from rqphase.estimators.estimator import BaseEstimator
from rqphase.exceptions import InvalidArgumentError
from rqphase.gaussian.states import ContaminatedModel
from rqphase.parallelmanager.parallel_replications import parallel_process_replications
from rqphase.sampling.dataset import ScenarioConfig
from rqphase.sampling.sampler import generate_dataset, replication_seed


class Target(str, Enum):
    """The estimated quantity."""
    ALPHA_R = "alpha_r"
    ALPHA_I = "alpha_i"
    THETA = "theta"

    def true_value(self, model: ContaminatedModel) -> float:
        if self is Target.ALPHA_R:
            return model.alpha.re
        if self is Target.ALPHA_I:
            return model.alpha.im
        return model.true_phase


@dataclass(frozen=True)
class ReplicationRun:
    """Estimates of one replication. Phase iterations are those of both quadratures together."""
    seed: int
    alpha_r: float
    alpha_i: float
    theta: float
    iterations_r: int
    iterations_i: int

    def value(self, target: Target) -> float:
        return getattr(self, Target(target).value)

    def iterations(self, target: Target) -> int:
        target = Target(target)
        if target is Target.ALPHA_R:
            return self.iterations_r
        if target is Target.ALPHA_I:
            return self.iterations_i
        return self.iterations_r + self.iterations_i


@dataclass(frozen=True)
class ReplicationStats:
    """
    Summary of `runs` replications for one (estimator, target, n, epsilon).

    `sd` is the population standard deviation of the estimates, so that
    mse = bias**2 + sd**2 up to rounding.
    """
    estimator: str
    target: Target
    n: int
    epsilon: float
    runs: int
    true_value: float
    mean_estimate: float
    bias: float
    mse: float
    sd: float
    mean_iterations: float

    @property
    def variance(self) -> float:
        return self.sd ** 2

    def to_dict(self) -> dict:
        row = asdict(self)
        row["target"] = Target(self.target).value
        return row


def _replicate_one(task) -> ReplicationRun:
    scenario, kind, seed = task
    dataset = generate_dataset(scenario, seed)
    theta, alpha_r, alpha_i = estimate_phase(dataset, kind)
    return ReplicationRun(seed, alpha_r.value, alpha_i.value, theta, alpha_r.iterations, alpha_i.iterations)


def simulate_runs(scenario: ScenarioConfig, kind: BaseEstimator, runs: int, base_seed: int,
                  num_processes: int = 1) -> List[ReplicationRun]:
    if not (isinstance(runs, (int, np.integer)) and runs >= 1):
        raise InvalidArgumentError(f"runs must be a positive integer, got {runs}.")
    tasks = [(scenario, kind, replication_seed(base_seed, r)) for r in range(runs)]
    return parallel_process_replications(_replicate_one, tasks, num_processes)


def summarize_runs(results: Sequence[ReplicationRun], scenario: ScenarioConfig, kind: BaseEstimator,
                   target: Target) -> ReplicationStats:
    target = Target(target)
    estimates = np.array([run.value(target) for run in results])
    iterations = np.array([run.iterations(target) for run in results], dtype=float)
    truth = target.true_value(scenario.model)
    errors = estimates - truth
    return ReplicationStats(estimator=kind.label, target=target, n=scenario.n, epsilon=scenario.model.epsilon,
                            runs=len(results), true_value=truth, mean_estimate=float(np.mean(estimates)),
                            bias=float(np.mean(errors)), mse=float(np.mean(errors ** 2)),
                            sd=float(np.std(estimates)), mean_iterations=float(np.mean(iterations)))


def replicate_targets(scenario: ScenarioConfig, kind: BaseEstimator, runs: int, base_seed: int,
                      num_processes: int = 1) -> Dict[Target, ReplicationStats]:
    """Statistics of all three targets from one pass over the replications."""
    results = simulate_runs(scenario, kind, runs, base_seed, num_processes)
    return {target: summarize_runs(results, scenario, kind, target) for target in Target}


def run_replications(scenario: ScenarioConfig, kind: BaseEstimator, target: Target, runs: int, base_seed: int,
                     num_processes: int = 1) -> ReplicationStats:
    results = simulate_runs(scenario, kind, runs, base_seed, num_processes)
    return summarize_runs(results, scenario, kind, target)


def sample_size_sweep(sizes: Iterable[int], scenario: ScenarioConfig, kinds: Sequence[BaseEstimator], runs: int,
                      base_seed: int, targets: Sequence[Target] = tuple(Target),
                      num_processes: int = 1) -> List[ReplicationStats]:
    """Replication statistics versus the sample size, ordered by estimator, then target, then n."""
    sizes = list(sizes)
    if not sizes:
        raise InvalidArgumentError("sample_size_sweep needs at least one sample size.")
    stats = []
    for kind in kinds:
        by_size = [replicate_targets(scenario.with_n(n), kind, runs, base_seed, num_processes) for n in sizes]
        for target in targets:
            stats.extend(per_target[Target(target)] for per_target in by_size)
    return stats
