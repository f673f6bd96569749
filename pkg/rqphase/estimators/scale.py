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

"""Closed-form location and robust scale statistics."""

import warnings

import numpy as np

from rqphase.exceptions import EmptyDataError

# Half of a standard normal sample lies within 0.675 of its center.
MADN_CONSTANT = 0.675
SIGMA_FLOOR = 1e-12


def _as_sample(xs) -> np.ndarray:
    xs = np.asarray(xs, dtype=float).ravel()
    if xs.size == 0:
        raise EmptyDataError("Cannot compute a statistic of an empty sample.")
    return xs


def mean(xs) -> float:
    return float(np.mean(_as_sample(xs)))


def median(xs) -> float:
    """Middle order statistic; the average of the two central values for even lengths."""
    return float(np.median(_as_sample(xs)))


def mad(xs) -> float:
    """Median absolute deviation from the median."""
    xs = _as_sample(xs)
    return float(np.median(np.abs(xs - np.median(xs))))


def madn(xs) -> float:
    """MAD / 0.675, a consistent estimate of the standard deviation for normal data."""
    return mad(xs) / MADN_CONSTANT


def robust_sigma(xs) -> float:
    """MADN clamped away from zero so that tuned psi-functions stay well defined."""
    sigma = madn(xs)
    if sigma < SIGMA_FLOOR:
        warnings.warn(f"MADN of the sample is {sigma:g}; clamping the scale to {SIGMA_FLOOR:g}. "
                      "Samples with (almost) all values equal are pathological for M-estimation.")
        return SIGMA_FLOOR
    return sigma
