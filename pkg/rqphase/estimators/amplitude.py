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


import math
from typing import Tuple

from rqphase.estimators.estimator import BaseEstimator
from rqphase.estimators.irls import EstimateResult
from rqphase.exceptions import InsufficientDataError, UndefinedPhaseError
from rqphase.sampling.dataset import Dataset
from rqphase.sampling.sampler import split_by_phase


def estimate_amplitude(dataset: Dataset, kind: BaseEstimator) -> Tuple[EstimateResult, EstimateResult]:
    """Estimate Re(alpha) from the phi = 0 outcomes and Im(alpha) from the phi = pi/2 outcomes."""
    xs_real, xs_imag = split_by_phase(dataset)
    if xs_real.size == 0 or xs_imag.size == 0:
        raise InsufficientDataError(f"Both quadratures need data, got {xs_real.size} outcomes at phi = 0 "
                                    f"and {xs_imag.size} at phi = pi/2.")
    return kind.estimate(xs_real), kind.estimate(xs_imag)


def phase_from_amplitude(alpha_r: float, alpha_i: float) -> float:
    """theta = arctan(alpha_i / alpha_r), in (-pi/2, pi/2)."""
    if alpha_r == 0:
        raise UndefinedPhaseError("The phase is undefined for alpha_r = 0.")
    return math.atan(alpha_i / alpha_r)


def estimate_phase(dataset: Dataset, kind: BaseEstimator) -> Tuple[float, EstimateResult, EstimateResult]:
    alpha_r, alpha_i = estimate_amplitude(dataset, kind)
    return phase_from_amplitude(alpha_r.value, alpha_i.value), alpha_r, alpha_i
