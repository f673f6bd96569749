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
Command line entry point.

    rqphase [--config FILE] [--seed N] [--out DIR] [--runs N] <command>

Commands: simulate, estimate, replicate, eps-curve, fbp, efficiency and
reproduce <id>. Exit status is 0 on success, 1 when the configuration or the
arguments are invalid and 2 when an experiment fails while running.
"""

import argparse
import dataclasses
import json
import os
import sys
import time
from typing import List, Optional

from rich.console import Console
from rich.markup import escape

from rqphase.config.get_config import load_config
from rqphase.estimators.amplitude import estimate_phase
from rqphase.harness.experiment_config import Experiment, ExperimentConfig, parse_config, resolve_seed
from rqphase.harness.presets import FIGURE_IDS, figure_preset
from rqphase.harness.reproduce import run_reproduce
from rqphase.results.report_io import Report, eps_curve_report, fbp_report, stats_report, write_report_csv, \
    write_summary_json
from rqphase.results.report_table import draw_rich_table
from rqphase.robustness.breakdown import finite_breakdown_point
from rqphase.robustness.efficiency import relative_efficiency
from rqphase.robustness.eps_curve import epsilon_curve
from rqphase.robustness.replication import sample_size_sweep
from rqphase.sampling.dataset_io import read_dataset_csv, write_dataset_csv
from rqphase.sampling.sampler import generate_dataset
from rqphase.version import __version__

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FAILED = 2


class UsageError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """Report usage errors through the exit status of `main` instead of exiting from argparse."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="rqphase",
                             description="Robust M-estimation of coherent-state amplitude and phase.")
    parser.add_argument("--config", help="experiment file (flat key = value text)")
    parser.add_argument("--seed", type=int, help="base seed, overrides the experiment file")
    parser.add_argument("--out", help="output directory, overrides output_path")
    parser.add_argument("--runs", type=int, help="number of replications, overrides the experiment file")
    parser.add_argument("--num-processes", type=int, dest="num_processes", help="worker processes")
    parser.add_argument("--quiet", action="store_true", help="do not print report tables")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    commands = parser.add_subparsers(dest="command", metavar="command", parser_class=_ArgumentParser)
    commands.required = True
    commands.add_parser("simulate", help="simulate one dataset and write it as CSV")
    estimate = commands.add_parser("estimate", help="estimate amplitude and phase of a dataset CSV")
    estimate.add_argument("dataset", nargs="?", help="dataset CSV, overrides dataset_path")
    commands.add_parser("replicate", help="bias and MSE versus the sample size")
    commands.add_parser("eps-curve", help="estimates versus the contamination parameter")
    commands.add_parser("fbp", help="finite breakdown point by data replacement")
    commands.add_parser("efficiency", help="Monte Carlo relative efficiency on clean data")
    reproduce = commands.add_parser("reproduce", help="recompute one figure or table")
    reproduce.add_argument("figure_id", choices=FIGURE_IDS)
    return parser


class Session:
    """Everything one invocation needs once its arguments and configuration are validated."""

    def __init__(self, args: argparse.Namespace, config: ExperimentConfig, settings: dict, seed: int,
                 console: Console):
        self.args = args
        self.config = config
        self.settings = settings
        self.seed = seed
        self.console = console
        self.out_dir = args.out or config.output_path or "."
        self.num_processes = args.num_processes or config.num_processes
        self.outputs = []

    def runs(self, settings_key: str) -> int:
        if self.args.runs is not None:
            return self.args.runs
        if self.config.runs is not None:
            return self.config.runs
        return int(self.settings["Harness"][settings_key])

    def path(self, file_name: str) -> str:
        os.makedirs(self.out_dir, exist_ok=True)
        return os.path.join(self.out_dir, file_name)

    def write_report(self, report: Report, name: str, title: str) -> None:
        self.outputs.append(write_report_csv(report, self.path(f"{name}.csv")))
        if not self.args.quiet:
            draw_rich_table(report, title=title, console=self.console)


def _simulate(session: Session) -> str:
    dataset = generate_dataset(session.config.scenario, session.seed)
    session.outputs.append(write_dataset_csv(dataset, session.path("dataset.csv")))
    return "simulate"


def _estimate(session: Session) -> str:
    path = session.args.dataset or session.config.dataset_path
    if not path:
        raise UsageError("estimate needs a dataset CSV, pass it as an argument or set dataset_path.")
    dataset = read_dataset_csv(path)
    estimates = {}
    for kind in session.config.estimator_kinds():
        theta, alpha_r, alpha_i = estimate_phase(dataset, kind)
        estimates[kind.label] = {"theta": theta, "alpha_r": alpha_r.to_dict(), "alpha_i": alpha_i.to_dict()}
    out = session.path("estimates.json")
    with open(out, "w", encoding="utf-8") as f:
        json.dump({"dataset": path, "n": dataset.n, "estimates": estimates}, f, indent=2)
        f.write("\n")
    session.outputs.append(out)
    if not session.args.quiet:
        for label, values in estimates.items():
            session.console.print(f"{label:>9}: theta = {values['theta']:.6f}, "
                                  f"alpha = {values['alpha_r']['value']:.6f} {values['alpha_i']['value']:+.6f}i")
    return "estimate"


def _replicate(session: Session) -> str:
    config = session.config
    stats = sample_size_sweep(config.sample_sizes, config.scenario, config.estimator_kinds(),
                              session.runs("runs_replicate"), session.seed, (config.target,), session.num_processes)
    session.write_report(stats_report(stats), "replicate", f"Replications of {config.target.value}")
    return "replicate"


def _eps_curve(session: Session) -> str:
    config = session.config
    runs = session.runs("runs_eps_curve")
    curves = [epsilon_curve(config.eps_grid, config.scenario.n, kind, runs, session.seed, config.scenario,
                            config.target, session.num_processes)
              for kind in config.estimator_kinds()]
    truths = {config.target.value: config.target.true_value(config.scenario.model)}
    session.write_report(eps_curve_report(curves, truths), "eps_curve", f"ε-curve of {config.target.value}")
    return "eps_curve"


def _fbp(session: Session) -> str:
    config = session.config
    rule = config.breakdown_rule()
    results = [finite_breakdown_point(config.scenario, kind, rule, config.fbp_step,
                                      (config.replacement_mean, config.replacement_sd), session.seed)
               for kind in config.estimator_kinds()]
    session.write_report(fbp_report(results), "fbp", "Finite breakdown point sweep")
    if not session.args.quiet:
        for result in results:
            flag = " (no breakdown)" if result.no_breakdown else ""
            session.console.print(f"{result.estimator:>9}: m* = {result.m_star}, FBP = {result.fbp:.3f}{flag}")
    return "fbp"


def _efficiency(session: Session) -> str:
    config = session.config
    runs = session.runs("runs_efficiency")
    rows = [{"estimator": kind.label, "n": config.scenario.n, "runs": runs,
             "efficiency": relative_efficiency(kind, config.scenario.n, runs, session.seed,
                                               num_processes=session.num_processes)}
            for kind in config.estimator_kinds()]
    session.write_report(Report(("estimator", "n", "runs", "efficiency"), rows), "efficiency",
                         "Relative efficiency on clean data")
    return "efficiency"


def _reproduce(session: Session) -> str:
    config = session.config
    figure_id = session.args.figure_id
    runs = session.args.runs if session.args.runs is not None else config.runs
    result = run_reproduce(figure_id, session.out_dir, session.seed, runs, config.eps_grid, config.tuning,
                           config.irls, config.theta_tol, session.num_processes)
    session.outputs.extend(result.paths)
    if not session.args.quiet:
        draw_rich_table(result.report, title=f"{figure_id}: {result.description}", console=session.console)
    return figure_id


HANDLERS = {
    "simulate": _simulate, "estimate": _estimate, "replicate": _replicate, "eps-curve": _eps_curve,
    "fbp": _fbp, "efficiency": _efficiency, "reproduce": _reproduce,
}


def prepare(argv: Optional[List[str]], console: Console) -> Session:
    """Parse arguments and the experiment file; every failure here is a validation error."""
    args = build_parser().parse_args(argv)
    settings = load_config()
    text = ""
    if args.config:
        with open(args.config, encoding="utf-8") as f:
            text = f.read()
    config = parse_config(text, settings)
    if args.command == "reproduce" and config.figure != args.figure_id:
        config = parse_config(text + f"\nfigure = {args.figure_id}\n", settings) if config.figure is None \
            else dataclasses.replace(config, figure=args.figure_id)
    config = dataclasses.replace(config, experiment=Experiment.from_name(args.command))
    if args.runs is not None and args.runs < 1:
        raise UsageError(f"--runs must be >= 1, got {args.runs}.")
    if args.num_processes is not None and args.num_processes < 1:
        raise UsageError(f"--num-processes must be >= 1, got {args.num_processes}.")
    seed = resolve_seed(args.seed, config.base_seed, settings)
    return Session(args, config, settings, seed, console)


def main(argv: Optional[List[str]] = None, console: Console = None) -> int:
    console = console or Console(stderr=True)
    try:
        session = prepare(argv, console)
    except (ValueError, OSError) as e:
        console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return EXIT_INVALID

    start = time.perf_counter()
    try:
        name = HANDLERS[session.args.command](session)
    except UsageError as e:
        console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return EXIT_INVALID
    except Exception as e:
        console.print(f"[red]{session.args.command} failed:[/red] {type(e).__name__}: {escape(str(e))}",
                      highlight=False)
        return EXIT_FAILED
    wall_time = time.perf_counter() - start

    description = session.config.scenario.model.outliers.describe()
    if session.args.command == "reproduce":
        description = figure_preset(session.args.figure_id).describe()
    summary = write_summary_json(session.path(f"{name}_summary.json"), session.seed, session.config.echo(),
                                 wall_time, description, session.outputs)
    if not session.args.quiet:
        console.print(f"seed {session.seed}, {wall_time:.1f} s, wrote {', '.join(session.outputs + [summary])}",
                      highlight=False)
    return EXIT_OK


def main_entry():
    sys.exit(main())
