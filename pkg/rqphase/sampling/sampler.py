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
Seeded generation of homodyne datasets from contaminated models.

All randomness goes through numpy Generators (PCG64). Replication r of an
experiment with base seed s uses seed s + r, so every figure is reproducible
bit for bit.
"""

from typing import Tuple

import numpy as np

from rqphase.exceptions import InvalidArgumentError, InvalidConfigurationError, UnsupportedAngleError
from rqphase.gaussian.homodyne import COHERENT_SIGMA, homodyne_mean, outlier_distribution
from rqphase.gaussian.states import ContaminatedModel
from rqphase.sampling.dataset import HALF_PI, Dataset, MeasurementRecord, PhiRule, ScenarioConfig, Source

ANGLE_ATOL = 1e-9


def make_rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def replication_seed(base_seed: int, replication: int) -> int:
    return int(base_seed) + int(replication)


def draw_measurement(model: ContaminatedModel, phi: float, rng: np.random.Generator) -> MeasurementRecord:
    """Draw one homodyne outcome at angle phi from the contaminated model."""
    if rng.random() < model.epsilon:
        mean, sd = outlier_distribution(model, phi)
        return MeasurementRecord(phi, float(rng.normal(mean, sd)), Source.OUTLIER)
    return MeasurementRecord(phi, float(rng.normal(homodyne_mean(model.alpha, phi), COHERENT_SIGMA)), Source.IDEAL)


def draw_outcomes(model: ContaminatedModel, phis: np.ndarray,
                  rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised draw of one outcome per angle in `phis`; returns (x, source)."""
    phis = np.asarray(phis, dtype=float)
    is_outlier = rng.random(phis.size) < model.epsilon
    noise = rng.standard_normal(phis.size)

    ideal_mean = homodyne_mean(model.alpha, phis)
    outlier_mean, outlier_sd = outlier_distribution(model, phis)
    x = np.where(is_outlier, outlier_mean + outlier_sd * noise, ideal_mean + COHERENT_SIGMA * noise)
    source = np.where(is_outlier, int(Source.OUTLIER), int(Source.IDEAL))
    return x, source


def draw_angles(n: int, phi_rule: PhiRule, rng: np.random.Generator) -> np.ndarray:
    if phi_rule is PhiRule.BERNOULLI_HALF:
        return np.where(rng.random(n) < 0.5, 0.0, HALF_PI)
    raise InvalidConfigurationError(f"Unsupported angle rule {phi_rule!r}.")


def generate_dataset(config: ScenarioConfig, seed: int) -> Dataset:
    """Simulate `config.n` shots; identical seeds give identical datasets."""
    if config.n < 1:
        raise InvalidConfigurationError(f"The sample size n must be >= 1, got {config.n}.")
    rng = make_rng(seed)
    phis = draw_angles(config.n, config.phi_rule, rng)
    x, source = draw_outcomes(config.model, phis, rng)
    return Dataset(phi=phis, x=x, source=source, seed=seed)


def _stratified_choice(dataset: Dataset, m: int, rng: np.random.Generator) -> np.ndarray:
    """Choose m indices so that every angle group loses the same share of its records (up to rounding)."""
    groups = [np.flatnonzero(dataset.phi == phi) for phi in np.unique(dataset.phi)]
    quotas = [m * g.size / dataset.n for g in groups]
    counts = [int(np.floor(q)) for q in quotas]
    # Largest remainder rounding, ties broken by group order.
    by_remainder = sorted(range(len(groups)), key=lambda i: counts[i] - quotas[i])
    for i in by_remainder[:m - sum(counts)]:
        counts[i] += 1
    return np.concatenate([rng.choice(g, size=k, replace=False) for g, k in zip(groups, counts)])


def replace_with_outliers(dataset: Dataset, m: int, replacement_mean: float, replacement_sd: float,
                          rng: np.random.Generator, stratify_by_phase: bool = False) -> Dataset:
    """
    Overwrite the outcomes of m randomly chosen records with N(replacement_mean, replacement_sd) draws.

    The records are chosen uniformly without replacement; with `stratify_by_phase` the m records are
    shared out over the angle groups in proportion to their sizes and drawn uniformly inside each group.
    The angle of every record is preserved and the replaced records are tagged as outliers.
    """
    if not 0 <= m <= dataset.n:
        raise InvalidArgumentError(f"m must lie in [0, n] = [0, {dataset.n}], got {m}.")
    if m == 0:
        return dataset
    if stratify_by_phase:
        indices = _stratified_choice(dataset, m, rng)
    else:
        indices = rng.choice(dataset.n, size=m, replace=False)
    x = dataset.x.copy()
    source = dataset.source.copy()
    x[indices] = rng.normal(replacement_mean, replacement_sd, size=m)
    source[indices] = int(Source.OUTLIER)
    return Dataset(phi=dataset.phi, x=x, source=source, seed=dataset.seed)


def split_by_phase(dataset: Dataset) -> Tuple[np.ndarray, np.ndarray]:
    """Partition outcomes into those measured at phi = 0 and at phi = pi/2, keeping order."""
    at_zero = np.isclose(dataset.phi, 0.0, rtol=0, atol=ANGLE_ATOL)
    at_half_pi = np.isclose(dataset.phi, HALF_PI, rtol=0, atol=ANGLE_ATOL)
    unsupported = ~(at_zero | at_half_pi)
    if unsupported.any():
        bad = dataset.phi[unsupported][0]
        raise UnsupportedAngleError(f"Only phi in {{0, pi/2}} can be split, found phi = {bad}.")
    return dataset.x[at_zero], dataset.x[at_half_pi]
