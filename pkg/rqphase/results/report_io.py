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
CSV and JSON serialisation of experiment reports.

A Report is a header plus rows keyed by column name. Floats are written with
`repr`, so reading a report back and writing it again reproduces the file byte
for byte. Empty cells stand for missing values.
"""

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from rqphase.robustness.breakdown import FbpResult
from rqphase.robustness.eps_curve import EpsCurve
from rqphase.robustness.replication import ReplicationStats, Target

STATS_COLUMNS = ("estimator", "target", "n", "epsilon", "runs", "true_value", "mean_estimate", "sd", "bias", "mse",
                 "mean_iterations")
FBP_COLUMNS = ("estimator", "n", "step", "m", "theta", "fired", "m_star", "fbp")


@dataclass
class Report:
    columns: Tuple[str, ...]
    rows: List[Dict] = field(default_factory=list)

    def column(self, name: str) -> list:
        return [row.get(name) for row in self.rows]

    def __len__(self):
        return len(self.rows)


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def parse_cell(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def write_report_csv(report: Report, path: str) -> str:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow([format_cell(row.get(name)) for name in report.columns])
    return path


def read_report_csv(path: str) -> Report:
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        try:
            columns = tuple(next(reader))
        except StopIteration:
            raise ValueError(f"{path} is empty, a report needs a header row.")
        rows = []
        for line_no, cells in enumerate(reader, start=2):
            if len(cells) != len(columns):
                raise ValueError(f"{path}:{line_no}: expected {len(columns)} cells, found {len(cells)}.")
            rows.append({name: parse_cell(cell) for name, cell in zip(columns, cells)})
    return Report(columns, rows)


def stats_report(stats: Sequence[ReplicationStats]) -> Report:
    rows = [s.to_dict() for s in stats]
    return Report(STATS_COLUMNS, [{name: row[name] for name in STATS_COLUMNS} for row in rows])


def eps_curve_report(curves: Sequence[EpsCurve], truths: Optional[Dict[str, float]] = None) -> Report:
    """Long format: one row per (estimator, epsilon). `truths` maps a target name to its true value."""
    truths = truths or {}
    rows = []
    for curve in curves:
        target = Target(curve.target).value
        for p in curve.points:
            rows.append({"estimator": curve.estimator, "target": target, "n": curve.n, "epsilon": p.epsilon,
                         "runs": curve.runs, "true_value": truths.get(target), "mean_estimate": p.mean_estimate,
                         "sd": p.sd, "bias": p.bias, "mse": p.mse, "mean_iterations": p.mean_iterations})
    return Report(STATS_COLUMNS, rows)


def iterations_report(curves: Sequence[EpsCurve]) -> Report:
    """Wide format: one row per estimator, one column of mean iteration counts per epsilon."""
    if not curves:
        return Report(("estimator", "target"))
    epsilons = [float(e) for e in curves[0].epsilons]
    eps_columns = [f"eps={eps:g}" for eps in epsilons]
    rows = []
    for curve in curves:
        if [float(e) for e in curve.epsilons] != epsilons:
            raise ValueError("All curves of an iterations report must share the same epsilon grid.")
        row = {"estimator": curve.estimator, "target": Target(curve.target).value}
        row.update({column: p.mean_iterations for column, p in zip(eps_columns, curve.points)})
        rows.append(row)
    return Report(("estimator", "target", *eps_columns), rows)


def fbp_report(results: Sequence[FbpResult]) -> Report:
    rows = []
    for result in results:
        for point in result.sweep:
            rows.append({"estimator": result.estimator, "n": result.n, "step": result.step, "m": point.m,
                         "theta": None if math.isnan(point.theta) else point.theta, "fired": point.fired,
                         "m_star": result.m_star, "fbp": result.fbp})
    return Report(FBP_COLUMNS, rows)


def write_summary_json(path: str, seed: int, config: dict, wall_time: float, scenario: str = "",
                       outputs: Sequence[str] = (), extra: dict = None) -> str:
    summary = {"seed": seed, "config": config, "wall_time_s": round(wall_time, 3), "scenario": scenario,
               "outputs": list(outputs)}
    if extra:
        summary.update(extra)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(summary, f, ensure_ascii=False, indent=2, sort_keys=True, default=str)
        f.write("\n")
    return path
