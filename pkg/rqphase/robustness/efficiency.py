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


from typing import Tuple

import numpy as np

from rqphase.estimators.estimator import BaseEstimator, MeanEstimator
from rqphase.exceptions import InvalidArgumentError
from rqphase.gaussian.homodyne import COHERENT_SIGMA
from rqphase.parallelmanager.parallel_replications import parallel_process_replications
from rqphase.sampling.sampler import make_rng, replication_seed


def _paired_estimates(task) -> Tuple[float, float]:
    kind, n, center, seed = task
    xs = make_rng(seed).normal(center, COHERENT_SIGMA, size=n)
    return MeanEstimator().estimate(xs).value, kind.estimate(xs).value


def relative_efficiency(kind: BaseEstimator, n: int, runs: int, seed: int, center: float = 0.0,
                        num_processes: int = 1) -> float:
    """
    Monte Carlo relative efficiency var(sample mean) / var(kind) on uncontaminated homodyne data.

    Both estimators see the same samples, which removes most of the Monte Carlo noise of the ratio.
    """
    if n < 2 or runs < 2:
        raise InvalidArgumentError(f"relative_efficiency needs n >= 2 and runs >= 2, got n={n}, runs={runs}.")
    tasks = [(kind, n, center, replication_seed(seed, r)) for r in range(runs)]
    estimates = np.array(parallel_process_replications(_paired_estimates, tasks, num_processes))
    return float(np.var(estimates[:, 0], ddof=1) / np.var(estimates[:, 1], ddof=1))
