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


from .states import ComplexAmplitude, GaussianShiftState, SingleOutlier, DistributedOutlier, \
    ContaminatedModel, as_amplitude
from .homodyne import kappa_from_beta, beta_from_kappa, homodyne_mean, homodyne_sigma, \
    outlier_distribution, mixture_mean, contaminated_pdf, contaminated_cdf
