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
Homodyne statistics of Gaussian shift states and of the contaminated model.

The outcome of a homodyne measurement at angle phi on a Gaussian shift state with
center z and dispersion kappa is normal with mean Re(z e^{-i phi}) and standard
deviation sqrt(kappa^2 + 1/4). Distributed outliers are folded in with the normal
convolution formula, so every density here is a finite mixture of two normals.
"""

import math
from typing import Tuple, Union

import numpy as np
from scipy.stats import norm

from rqphase.exceptions import DomainError
from rqphase.gaussian.states import ContaminatedModel, DistributedOutlier, SingleOutlier, as_amplitude

ArrayLike = Union[float, np.ndarray]

COHERENT_SIGMA = 0.5


def kappa_from_beta(beta: float) -> float:
    """kappa = sqrt(1 / (2 (e^beta - 1))) for a thermal state at inverse temperature beta."""
    if not beta > 0:
        raise DomainError(f"beta must be > 0, got {beta}; the infinite-temperature state is not supported.")
    return math.sqrt(0.5 / math.expm1(beta))


def beta_from_kappa(kappa: float) -> float:
    """beta = ln(1 + 1 / (2 kappa^2)); exact inverse of kappa_from_beta."""
    if not kappa > 0:
        raise DomainError(f"kappa must be > 0, got {kappa}; kappa = 0 corresponds to beta = +inf.")
    return math.log1p(0.5 / kappa ** 2)


def homodyne_mean(z, phi: ArrayLike) -> ArrayLike:
    """Re(z e^{-i phi}) = Re z cos(phi) + Im z sin(phi)."""
    z = as_amplitude(z)
    return z.re * np.cos(phi) + z.im * np.sin(phi)


def homodyne_sigma(kappa: float) -> float:
    """Standard deviation sqrt(kappa^2 + 1/4) of a homodyne outcome."""
    if not kappa >= 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}.")
    return math.sqrt(kappa ** 2 + 0.25)


def outlier_distribution(model: ContaminatedModel, phi: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """Mean and standard deviation of the outlier component at angle phi."""
    outliers = model.outliers
    if isinstance(outliers, SingleOutlier):
        mean = homodyne_mean(outliers.z0, phi)
        sd = homodyne_sigma(outliers.kappa0) + 0 * np.asarray(phi, dtype=float)
    elif isinstance(outliers, DistributedOutlier):
        cos_phi, sin_phi = np.cos(phi), np.sin(phi)
        mean = outliers.mu1 * cos_phi + outliers.mu2 * sin_phi
        sd = np.sqrt((outliers.sigma1 * cos_phi) ** 2 + (outliers.sigma2 * sin_phi) ** 2
                     + outliers.kappa0 ** 2 + 0.25)
    else:
        raise TypeError(f"Unknown outlier specification {outliers!r}.")
    if np.ndim(phi) == 0:
        return float(mean), float(sd)
    return mean, sd


def mixture_mean(model: ContaminatedModel, phi: ArrayLike) -> ArrayLike:
    """Expected homodyne outcome under the contaminated model."""
    outlier_mean, _ = outlier_distribution(model, phi)
    return (1 - model.epsilon) * homodyne_mean(model.alpha, phi) + model.epsilon * outlier_mean


def contaminated_pdf(model: ContaminatedModel, phi: float, x: ArrayLike) -> ArrayLike:
    """(1 - eps) N(Re(alpha e^{-i phi}), 1/2)(x) + eps q(x | phi)."""
    outlier_mean, outlier_sd = outlier_distribution(model, phi)
    ideal = norm.pdf(x, loc=homodyne_mean(model.alpha, phi), scale=COHERENT_SIGMA)
    if model.epsilon == 0:
        return ideal
    return (1 - model.epsilon) * ideal + model.epsilon * norm.pdf(x, loc=outlier_mean, scale=outlier_sd)


def contaminated_cdf(model: ContaminatedModel, phi: float, x: ArrayLike) -> ArrayLike:
    """Cumulative distribution function matching contaminated_pdf."""
    outlier_mean, outlier_sd = outlier_distribution(model, phi)
    ideal = norm.cdf(x, loc=homodyne_mean(model.alpha, phi), scale=COHERENT_SIGMA)
    if model.epsilon == 0:
        return ideal
    return (1 - model.epsilon) * ideal + model.epsilon * norm.cdf(x, loc=outlier_mean, scale=outlier_sd)
