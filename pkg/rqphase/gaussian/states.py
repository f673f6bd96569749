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

"""Value types describing the ideal coherent state, the outlier states and their mixture."""

import math
from dataclasses import dataclass
from typing import Union

from rqphase.exceptions import DomainError


@dataclass(frozen=True)
class ComplexAmplitude:
    """A phase-space displacement alpha = re + i*im (dimensionless quadrature units)."""
    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError(f"Amplitude components must be finite, got ({self.re}, {self.im}).")

    @classmethod
    def from_complex(cls, value: Union[complex, float]) -> "ComplexAmplitude":
        value = complex(value)
        return cls(value.real, value.imag)

    def __complex__(self):
        return complex(self.re, self.im)

    def __add__(self, other: "ComplexAmplitude") -> "ComplexAmplitude":
        return ComplexAmplitude(self.re + other.re, self.im + other.im)

    def __mul__(self, scale: float) -> "ComplexAmplitude":
        return ComplexAmplitude(scale * self.re, scale * self.im)

    __rmul__ = __mul__

    @property
    def magnitude(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def phase(self) -> float:
        """arctan(im / re), the phase parametrisation used by the estimators."""
        return math.atan(self.im / self.re)


def as_amplitude(value) -> ComplexAmplitude:
    if isinstance(value, ComplexAmplitude):
        return value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return ComplexAmplitude(float(value[0]), float(value[1]))
    return ComplexAmplitude.from_complex(value)


@dataclass(frozen=True)
class GaussianShiftState:
    """A thermal state of dispersion kappa displaced to `center`.

    kappa = 0 is the coherent state |center>. The inverse temperature beta of the
    thermal state is tied to kappa through 2 kappa^2 = 1 / (e^beta - 1).
    """
    center: ComplexAmplitude
    kappa: float = 0.0

    def __post_init__(self):
        if not self.kappa >= 0:
            raise DomainError(f"kappa must be >= 0, got {self.kappa}.")

    @classmethod
    def from_beta(cls, center: ComplexAmplitude, beta: float) -> "GaussianShiftState":
        from rqphase.gaussian.homodyne import kappa_from_beta
        return cls(as_amplitude(center), kappa_from_beta(beta))

    @property
    def beta(self) -> float:
        from rqphase.gaussian.homodyne import beta_from_kappa
        return beta_from_kappa(self.kappa)

    @property
    def is_coherent(self) -> bool:
        return self.kappa == 0

    def homodyne_distribution(self, phi: float):
        """Mean and standard deviation of the homodyne outcome at angle phi."""
        from rqphase.gaussian.homodyne import homodyne_mean, homodyne_sigma
        return homodyne_mean(self.center, phi), homodyne_sigma(self.kappa)


@dataclass(frozen=True)
class SingleOutlier:
    """Every outlier is the Gaussian shift state with center z0 and dispersion kappa0."""
    z0: ComplexAmplitude
    kappa0: float = 0.0

    def __post_init__(self):
        if not self.kappa0 >= 0:
            raise DomainError(f"kappa0 must be >= 0, got {self.kappa0}.")

    @property
    def state(self) -> GaussianShiftState:
        return GaussianShiftState(self.z0, self.kappa0)

    def describe(self) -> str:
        return f"z0 = {self.z0.re:g}{self.z0.im:+g}i, κ0 = {self.kappa0:g}"


@dataclass(frozen=True)
class DistributedOutlier:
    """Outlier centers drawn as Re z ~ N(mu1, sigma1), Im z ~ N(mu2, sigma2), dispersion kappa0."""
    mu1: float
    sigma1: float
    mu2: float
    sigma2: float
    kappa0: float = 0.0

    def __post_init__(self):
        if not (self.sigma1 > 0 and self.sigma2 > 0):
            raise DomainError(f"sigma1 and sigma2 must be > 0, got {self.sigma1}, {self.sigma2}.")
        if not self.kappa0 >= 0:
            raise DomainError(f"kappa0 must be >= 0, got {self.kappa0}.")

    def describe(self) -> str:
        return (f"α_R ~ N({self.mu1:g}, {self.sigma1:g}), α_I ~ N({self.mu2:g}, {self.sigma2:g}), "
                f"κ0 = {self.kappa0:g}")


OutlierSpec = Union[SingleOutlier, DistributedOutlier]


@dataclass(frozen=True)
class ContaminatedModel:
    """The state (1 - epsilon) |alpha><alpha| + epsilon * (outlier states)."""
    alpha: ComplexAmplitude
    epsilon: float
    outliers: OutlierSpec

    def __post_init__(self):
        if not 0 <= self.epsilon < 1:
            raise DomainError(f"epsilon must lie in [0, 1), got {self.epsilon}.")
        if not isinstance(self.outliers, (SingleOutlier, DistributedOutlier)):
            raise TypeError("outliers must be a SingleOutlier or a DistributedOutlier.")

    @property
    def true_phase(self) -> float:
        return self.alpha.phase

    def with_epsilon(self, epsilon: float) -> "ContaminatedModel":
        return ContaminatedModel(self.alpha, epsilon, self.outliers)

    def describe(self) -> str:
        return (f"α = {self.alpha.re:g}{self.alpha.im:+g}i, ε = {self.epsilon:g}, "
                f"outliers: {self.outliers.describe()}")
