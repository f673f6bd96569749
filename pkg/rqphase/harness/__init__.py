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


from .experiment_config import Experiment, ExperimentConfig, parse_config, read_config_file, resolve_seed
from .presets import FIGURE_IDS, FigurePreset, figure_preset, load_scenario, scenario_from_preset
from .reproduce import ReproduceResult, build_report, run_reproduce
from .cli import build_parser, main
