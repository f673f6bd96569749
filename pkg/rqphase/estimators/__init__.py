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


from .scale import mean, median, mad, madn, robust_sigma
from .psi import BasePsi, BisquarePsi, GammaPsi, MleNormalPsi, PsiKind, psi, weight
from .irls import IrlsConfig, EstimateResult, irls_solve, m_equation_residual, grid_root
from .estimator import TuningPolicy, BaseEstimator, MeanEstimator, MedianEstimator, MEstimator, \
    EstimatorKind, estimator_from_name
from .amplitude import estimate_amplitude, phase_from_amplitude, estimate_phase
