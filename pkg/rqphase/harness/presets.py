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
Scenario and figure presets.

Every constant of a reproduced figure or table lives in
`rqphase/config/scenario_presets.ini`; this module turns those entries into
scenario objects.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from rqphase.config.get_config import load_presets
from rqphase.exceptions import InvalidConfigurationError, UnknownFigureError
from rqphase.gaussian.states import ContaminatedModel, DistributedOutlier, OutlierSpec, SingleOutlier, as_amplitude
from rqphase.robustness.replication import Target
from rqphase.sampling.dataset import ScenarioConfig

FIGURE_IDS = ("fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "table1", "table2")
FIGURE_KINDS = ("sample_size", "fbp", "eps_curve", "iterations")
DEFAULT_N = 5000


def outliers_from_preset(preset: dict) -> OutlierSpec:
    kind = preset.get("outlier", "single")
    if kind == "single":
        return SingleOutlier(as_amplitude(preset["z0"]), float(preset.get("kappa0", 0.0)))
    if kind == "distributed":
        return DistributedOutlier(float(preset["mu1"]), float(preset["sigma1"]), float(preset["mu2"]),
                                  float(preset["sigma2"]), float(preset.get("kappa0", 0.0)))
    raise InvalidConfigurationError(f"Unknown outlier kind {kind!r}, choose 'single' or 'distributed'.")


def scenario_from_preset(preset: dict, n: int = DEFAULT_N) -> ScenarioConfig:
    model = ContaminatedModel(as_amplitude(preset["alpha"]), float(preset["epsilon"]), outliers_from_preset(preset))
    return ScenarioConfig(n, model)


def load_scenario(name: str, n: int = DEFAULT_N, presets: dict = None) -> ScenarioConfig:
    presets = presets if presets is not None else load_presets()
    if name not in presets or "alpha" not in presets[name]:
        raise InvalidConfigurationError(f"No scenario preset named {name!r}.")
    return scenario_from_preset(presets[name], n)


@dataclass(frozen=True)
class FigurePreset:
    """The experiment behind one reproduced figure or table."""
    figure_id: str
    kind: str
    scenario_name: str
    scenario: ScenarioConfig
    estimators: Tuple[str, ...]
    targets: Tuple[Target, ...] = (Target.THETA,)
    runs: Optional[int] = None
    sample_sizes: Tuple[int, ...] = ()
    step: int = 250
    replacement_mean: float = 1000.0
    replacement_sd: float = 0.1

    @property
    def n(self) -> int:
        return self.scenario.n

    def describe(self) -> str:
        return self.scenario.model.outliers.describe()


def figure_preset(figure_id: str, presets: dict = None) -> FigurePreset:
    figure_id = str(figure_id).strip().lower()
    if figure_id not in FIGURE_IDS:
        raise UnknownFigureError(f"Unknown figure id {figure_id!r}, choose from {', '.join(FIGURE_IDS)}.")
    presets = presets if presets is not None else load_presets()
    entry = presets[figure_id]
    if entry["kind"] not in FIGURE_KINDS:
        raise InvalidConfigurationError(f"Preset {figure_id} has unknown kind {entry['kind']!r}.")
    sample_sizes = tuple(int(n) for n in entry.get("sample_sizes", ()))
    n = int(entry.get("n", max(sample_sizes, default=DEFAULT_N)))
    return FigurePreset(
        figure_id=figure_id,
        kind=entry["kind"],
        scenario_name=entry["scenario"],
        scenario=load_scenario(entry["scenario"], n, presets),
        estimators=tuple(entry["estimators"]),
        targets=tuple(Target(t) for t in entry.get("targets", ["theta"])),
        runs=entry.get("runs"),
        sample_sizes=sample_sizes,
        step=int(entry.get("step", 250)),
        replacement_mean=float(entry.get("replacement_mean", 1000.0)),
        replacement_sd=float(entry.get("replacement_sd", 0.1)),
    )
