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

"""Regeneration of the data behind every figure and table as CSV reports."""

import os
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from rqphase.estimators.estimator import TuningPolicy, estimator_from_name
from rqphase.estimators.irls import IrlsConfig
from rqphase.harness.presets import FigurePreset, figure_preset
from rqphase.results.report_io import Report, eps_curve_report, fbp_report, iterations_report, stats_report, \
    write_report_csv
from rqphase.robustness.breakdown import BreakdownRule, finite_breakdown_point
from rqphase.robustness.eps_curve import epsilon_curves
from rqphase.robustness.replication import sample_size_sweep

DEFAULT_EPS_GRID = tuple(round(0.025 * k, 3) for k in range(15))


@dataclass
class ReproduceResult:
    figure_id: str
    preset: FigurePreset
    report: Report
    paths: List[str] = field(default_factory=list)

    @property
    def description(self) -> str:
        return self.preset.describe()


def build_report(preset: FigurePreset, base_seed: int, runs: int = None, eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
                 tuning: TuningPolicy = None, irls: IrlsConfig = None, rule: BreakdownRule = None,
                 num_processes: int = 1) -> Report:
    kinds = [estimator_from_name(name, tuning, irls) for name in preset.estimators]
    runs = runs if runs is not None else preset.runs
    scenario = preset.scenario

    if preset.kind == "sample_size":
        stats = sample_size_sweep(preset.sample_sizes, scenario, kinds, runs, base_seed, preset.targets,
                                  num_processes)
        return stats_report(stats)

    if preset.kind == "fbp":
        rule = rule if rule is not None else BreakdownRule.for_amplitude(scenario.model.alpha)
        results = [finite_breakdown_point(scenario, kind, rule, preset.step,
                                          (preset.replacement_mean, preset.replacement_sd), base_seed,
                                          full_sweep=True)
                   for kind in kinds]
        return fbp_report(results)

    curves = []
    for kind in kinds:
        per_target = epsilon_curves(eps_grid, preset.n, kind, runs, base_seed, scenario, num_processes)
        curves.extend(per_target[target] for target in preset.targets)
    if preset.kind == "iterations":
        return iterations_report(curves)
    truths = {target.value: target.true_value(scenario.model) for target in preset.targets}
    return eps_curve_report(curves, truths)


def run_reproduce(figure_id: str, out_dir: str, base_seed: int, runs: int = None,
                  eps_grid: Sequence[float] = DEFAULT_EPS_GRID, tuning: TuningPolicy = None,
                  irls: IrlsConfig = None, theta_tol: float = None, num_processes: int = 1,
                  presets: Dict = None) -> ReproduceResult:
    """
    Recompute one figure or table and write `<out_dir>/<figure_id>.csv`.

    Raises:
        UnknownFigureError: when figure_id is not a known figure or table id.
    """
    preset = figure_preset(figure_id, presets)
    rule = None
    if theta_tol is not None:
        rule = BreakdownRule.for_amplitude(preset.scenario.model.alpha, theta_tol)
    report = build_report(preset, base_seed, runs, eps_grid, tuning, irls, rule, num_processes)
    os.makedirs(out_dir, exist_ok=True)
    path = write_report_csv(report, os.path.join(out_dir, f"{preset.figure_id}.csv"))
    return ReproduceResult(preset.figure_id, preset, report, [path])
