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


from .dataset import Source, PhiRule, MeasurementRecord, Dataset, ScenarioConfig
from .sampler import make_rng, replication_seed, draw_measurement, draw_outcomes, generate_dataset, \
    replace_with_outliers, split_by_phase
from .dataset_io import write_dataset_csv, read_dataset_csv
