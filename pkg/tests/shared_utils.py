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

"""Here are some helpers commonly used in tests"""

import math
import os

from rqphase.config.get_config import load_config
from rqphase.gaussian.states import ComplexAmplitude, ContaminatedModel, DistributedOutlier, SingleOutlier
from rqphase.sampling.dataset import ScenarioConfig

# Test unified parameter settings, those of the single and distributed outlier presets.
ALPHA_SINGLE = ComplexAmplitude(10.0, 4.0)
Z0 = ComplexAmplitude(15.0, 15.0)
KAPPA0 = 0.1
ALPHA_DISTRIBUTED = ComplexAmplitude(10.0, -4.0)
TRUE_PHASE = math.atan(0.4)  # 0.3805...
BASE_SEED = 20210301

PACKAGED_CONFIG = os.path.join(os.path.dirname(__file__), os.pardir, "rqphase", "config", "config.ini")


def single_outlier_scenario(n: int = 5000, epsilon: float = 0.01) -> ScenarioConfig:
    return ScenarioConfig(n, ContaminatedModel(ALPHA_SINGLE, epsilon, SingleOutlier(Z0, KAPPA0)))


def distributed_outlier_scenario(n: int = 5000, epsilon: float = 0.01) -> ScenarioConfig:
    outliers = DistributedOutlier(mu1=0.1, sigma1=0.1, mu2=0.1, sigma2=0.1, kappa0=KAPPA0)
    return ScenarioConfig(n, ContaminatedModel(ALPHA_DISTRIBUTED, epsilon, outliers))


def default_settings() -> dict:
    """The packaged config.ini, independent of any user configuration file."""
    return load_config(os.path.abspath(PACKAGED_CONFIG))
