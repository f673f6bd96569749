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

"""Homodyne measurement records, datasets and simulation scenarios."""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterable, List

import numpy as np

from rqphase.exceptions import InvalidConfigurationError
from rqphase.gaussian.states import ContaminatedModel

HALF_PI = np.pi / 2


class Source(IntEnum):
    """Which branch of the mixture produced an outcome. Diagnostic only."""
    IDEAL = 0
    OUTLIER = 1


class PhiRule(str, Enum):
    """How the quadrature angle of each shot is chosen."""
    BERNOULLI_HALF = "bernoulli_half"  # fair coin between 0 and pi/2 per shot


@dataclass(frozen=True)
class MeasurementRecord:
    phi: float
    x: float
    source: Source = Source.IDEAL


def _frozen(values, dtype) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    An ordered homodyne dataset held column-wise.

    Attributes:
        phi (np.ndarray): quadrature angle of each shot.
        x (np.ndarray): homodyne outcome of each shot.
        source (np.ndarray): Source tag of each shot, never read by estimators.
        seed (int): seed the dataset was generated from, kept for provenance.
    """
    phi: np.ndarray
    x: np.ndarray
    source: np.ndarray
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phi", _frozen(self.phi, float))
        object.__setattr__(self, "x", _frozen(self.x, float))
        object.__setattr__(self, "source", _frozen(self.source, np.int8))
        if not (self.phi.shape == self.x.shape == self.source.shape) or self.phi.ndim != 1:
            raise ValueError("phi, x and source must be one-dimensional arrays of equal length.")

    @classmethod
    def from_records(cls, records: Iterable[MeasurementRecord], seed: int = 0) -> "Dataset":
        records = list(records)
        return cls(phi=[r.phi for r in records], x=[r.x for r in records],
                   source=[int(r.source) for r in records], seed=seed)

    @property
    def records(self) -> List[MeasurementRecord]:
        return [MeasurementRecord(float(p), float(v), Source(int(s)))
                for p, v, s in zip(self.phi, self.x, self.source)]

    @property
    def n(self) -> int:
        return int(self.x.size)

    def __len__(self):
        return self.n

    def outlier_count(self) -> int:
        return int(np.count_nonzero(self.source == Source.OUTLIER))

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return (self.seed == other.seed and np.array_equal(self.phi, other.phi)
                and np.array_equal(self.x, other.x) and np.array_equal(self.source, other.source))

    def __repr__(self):
        return f"<Dataset(n={self.n}, seed={self.seed}, outliers={self.outlier_count()})>"


@dataclass(frozen=True)
class ScenarioConfig:
    """Sample size, contaminated model and angle rule of one simulated experiment."""
    n: int
    model: ContaminatedModel
    phi_rule: PhiRule = field(default=PhiRule.BERNOULLI_HALF)

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise InvalidConfigurationError(f"The sample size n must be a positive integer, got {self.n}.")

    def with_n(self, n: int) -> "ScenarioConfig":
        return ScenarioConfig(n, self.model, self.phi_rule)

    def with_epsilon(self, epsilon: float) -> "ScenarioConfig":
        return ScenarioConfig(self.n, self.model.with_epsilon(epsilon), self.phi_rule)
