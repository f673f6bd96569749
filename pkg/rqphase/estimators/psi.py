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
psi-functions of the location M-estimators.

A psi-function defines the M-equation sum_i psi(x_i - mu) = 0. The iterative
solver only needs the weight W(r) = psi(r) / r, so every psi-function provides
both, with W(0) set to its analytic limit.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Union

import numpy as np

from rqphase.exceptions import DomainError

ArrayLike = Union[float, np.ndarray]


def _return(value: np.ndarray, like) -> ArrayLike:
    return float(value) if np.ndim(like) == 0 else value


class BasePsi(ABC):
    """
    The base class of psi-functions. Subclasses implement the weight W(r) = psi(r) / r;
    psi(r) = r W(r) follows.
    """

    name = "psi"
    # True when W(r) does not depend on r; one reweighting step then reaches the fixed point.
    constant_weight = False

    @abstractmethod
    def weight(self, r: ArrayLike) -> ArrayLike:
        pass

    def psi(self, r: ArrayLike) -> ArrayLike:
        r_array = np.asarray(r, dtype=float)
        return _return(r_array * np.asarray(self.weight(r_array)), r)


@dataclass(frozen=True)
class BisquarePsi(BasePsi):
    """Tukey's bisquare: psi(r) = r (1 - (r/c)^2)^2 for |r| <= c and 0 beyond."""
    c: float
    name = "bisquare"

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError(f"The bisquare cutoff c must be > 0, got {self.c}.")

    def weight(self, r: ArrayLike) -> ArrayLike:
        u = np.asarray(r, dtype=float) / self.c
        w = np.where(np.abs(u) <= 1, (1 - u ** 2) ** 2, 0.0)
        return _return(w, r)


@dataclass(frozen=True)
class GammaPsi(BasePsi):
    """
    psi(r) = [N(0, sigma)(r)]^gamma * r, derived from the gamma divergence.

    It decays exponentially, so far outliers get practically no weight.
    """
    gamma: float
    sigma: float
    name = "gamma"

    def __post_init__(self):
        if not (self.gamma > 0 and self.sigma > 0):
            raise DomainError(f"gamma and sigma must be > 0, got gamma={self.gamma}, sigma={self.sigma}.")

    @property
    def weight_at_zero(self) -> float:
        return (2 * math.pi * self.sigma ** 2) ** (-self.gamma / 2)

    def weight(self, r: ArrayLike) -> ArrayLike:
        r_array = np.asarray(r, dtype=float)
        w = self.weight_at_zero * np.exp(-self.gamma * r_array ** 2 / (2 * self.sigma ** 2))
        return _return(w, r)


@dataclass(frozen=True)
class MleNormalPsi(BasePsi):
    """The normal location score psi(r) = r; its M-estimator is the sample mean."""
    name = "mle"
    constant_weight = True

    def weight(self, r: ArrayLike) -> ArrayLike:
        return _return(np.ones_like(np.asarray(r, dtype=float)), r)


PsiKind = BasePsi


def psi(kind: BasePsi, r: ArrayLike) -> ArrayLike:
    return kind.psi(r)


def weight(kind: BasePsi, r: ArrayLike) -> ArrayLike:
    return kind.weight(r)
