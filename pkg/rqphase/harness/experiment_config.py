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
Experiment configuration files.

An experiment file is flat `key = value` text, optionally under an
`[experiment]` header, with `#` or `;` comments. Values are JSON when they
parse as JSON and plain strings otherwise. Every key is optional; missing keys
take their defaults from the scenario presets and from `config.ini`.

Example::

    experiment = eps_curve
    epsilon = 0.01
    estimators = ["gamma", "bisquare"]
    eps_start = 0.0
    eps_stop = 0.35
    eps_step = 0.025
"""

import configparser
import math
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from rqphase.config.config_to_dict import parse_value
from rqphase.config.get_config import load_config, load_presets
from rqphase.estimators.estimator import ESTIMATOR_NAMES, BaseEstimator, TuningPolicy, estimator_from_name
from rqphase.estimators.irls import IrlsConfig
from rqphase.exceptions import ConfigValidationError, DomainError, InvalidConfigurationError
from rqphase.gaussian.states import ComplexAmplitude, ContaminatedModel
from rqphase.harness.presets import FIGURE_IDS, figure_preset, outliers_from_preset
from rqphase.robustness.breakdown import BreakdownRule
from rqphase.robustness.replication import Target
from rqphase.sampling.dataset import ScenarioConfig

SEED_ENV_VAR = "ROBUST_QPHASE_SEED"
SECTION = "experiment"
DEFAULT_ESTIMATORS = ("mean", "median", "bisquare", "gamma")

KNOWN_KEYS = frozenset({
    "experiment", "figure", "alpha_re", "alpha_im", "epsilon", "n", "outlier", "z0_re", "z0_im", "kappa0",
    "mu1", "sigma1", "mu2", "sigma2", "estimators", "target", "runs", "base_seed", "output_path",
    "dataset_path", "eps_grid", "eps_start", "eps_stop", "eps_step", "fbp_step", "replacement_mean",
    "replacement_sd", "theta_tol", "magnitude_bound", "bisquare_c_factor", "gamma_exponent", "irls_tol",
    "irls_max_iter", "num_processes", "sample_sizes",
})


class Experiment(str, Enum):
    SIMULATE = "simulate"
    ESTIMATE = "estimate"
    REPLICATE = "replicate"
    EPS_CURVE = "eps_curve"
    FBP = "fbp"
    EFFICIENCY = "efficiency"
    REPRODUCE = "reproduce"

    @classmethod
    def from_name(cls, name: str) -> "Experiment":
        return cls(str(name).strip().lower().replace("-", "_"))


@dataclass(frozen=True)
class ExperimentConfig:
    """A validated experiment configuration. `runs = None` means the default of the experiment kind."""
    experiment: Experiment
    scenario: ScenarioConfig
    estimators: Tuple[str, ...] = DEFAULT_ESTIMATORS
    target: Target = Target.THETA
    runs: Optional[int] = None
    base_seed: Optional[int] = None
    output_path: Optional[str] = None
    dataset_path: Optional[str] = None
    figure: Optional[str] = None
    eps_grid: Tuple[float, ...] = ()
    sample_sizes: Tuple[int, ...] = ()
    fbp_step: int = 250
    replacement_mean: float = 1000.0
    replacement_sd: float = 0.1
    theta_tol: float = 0.006
    magnitude_bound: Optional[float] = None
    magnitude_factor: float = 100.0
    tuning: TuningPolicy = field(default_factory=TuningPolicy)
    irls: IrlsConfig = field(default_factory=IrlsConfig)
    num_processes: int = 1

    def estimator_kinds(self) -> List[BaseEstimator]:
        return [estimator_from_name(name, self.tuning, self.irls) for name in self.estimators]

    def breakdown_rule(self, alpha: ComplexAmplitude = None) -> BreakdownRule:
        alpha = alpha if alpha is not None else self.scenario.model.alpha
        if self.magnitude_bound is not None:
            return BreakdownRule(theta_tol=self.theta_tol, magnitude_bound=self.magnitude_bound)
        return BreakdownRule.for_amplitude(alpha, self.theta_tol, self.magnitude_factor)

    def echo(self) -> dict:
        """A JSON-friendly copy of the configuration for run summaries."""
        model = self.scenario.model
        return {
            "experiment": self.experiment.value, "figure": self.figure, "n": self.scenario.n,
            "alpha": [model.alpha.re, model.alpha.im], "epsilon": model.epsilon,
            "outliers": model.outliers.describe(), "estimators": list(self.estimators),
            "target": self.target.value, "runs": self.runs, "base_seed": self.base_seed,
            "eps_grid": list(self.eps_grid), "sample_sizes": list(self.sample_sizes), "fbp_step": self.fbp_step,
            "replacement": [self.replacement_mean, self.replacement_sd], "theta_tol": self.theta_tol,
            "magnitude_bound": self.magnitude_bound, "bisquare_c_factor": self.tuning.bisquare_c_factor,
            "gamma_exponent": self.tuning.gamma_exponent, "irls_tol": self.irls.tol,
            "irls_max_iter": self.irls.max_iter, "num_processes": self.num_processes,
        }


def read_key_values(text: str) -> dict:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"), interpolation=None)
    try:
        try:
            parser.read_string(text)
        except configparser.MissingSectionHeaderError:
            parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"), interpolation=None)
            parser.read_string(f"[{SECTION}]\n" + text)
    except configparser.Error as e:
        raise ConfigValidationError([f"malformed configuration: {e}"])

    errors = [f"unexpected section [{name}], only [{SECTION}] is allowed"
              for name in parser.sections() if name != SECTION]
    if errors:
        raise ConfigValidationError(errors)
    if not parser.has_section(SECTION):
        return {}
    return {key: parse_value(value) for key, value in parser.items(SECTION)}


class _Validator:
    """Collects every problem of a raw key-value mapping instead of stopping at the first."""

    def __init__(self, raw: dict):
        self.raw = raw
        self.errors = []

    def number(self, key, default, kind=float, low=None, high=None, low_open=False, high_open=False):
        if key not in self.raw:
            return default
        value = self.raw[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.errors.append(f"{key}: expected a number, got {value!r}")
            return default
        if kind is int and value != int(value):
            self.errors.append(f"{key}: expected an integer, got {value!r}")
            return default
        value = kind(value)
        if not math.isfinite(value):
            self.errors.append(f"{key}: expected a finite number, got {value!r}")
            return default
        too_low = low is not None and (value <= low if low_open else value < low)
        too_high = high is not None and (value >= high if high_open else value > high)
        if too_low or too_high:
            left = "(" if low_open else "["
            right = ")" if high_open else "]"
            bounds = f"{left}{'-inf' if low is None else low}, {'inf' if high is None else high}{right}"
            self.errors.append(f"{key}: {value!r} is out of range, expected a value in {bounds}")
            return default
        return value

    def string(self, key, default=None):
        if key not in self.raw:
            return default
        return str(self.raw[key])

    def names(self, key, default, allowed):
        if key not in self.raw:
            return tuple(default)
        value = self.raw[key]
        items = value.split(",") if isinstance(value, str) else value
        if not isinstance(items, list) or not items:
            self.errors.append(f"{key}: expected a non-empty list, got {value!r}")
            return tuple(default)
        names = tuple(str(item).strip().lower() for item in items)
        unknown = [name for name in names if name not in allowed]
        if unknown:
            self.errors.append(f"{key}: unknown name(s) {', '.join(unknown)}; choose from {', '.join(allowed)}")
            return tuple(default)
        return names

    def number_list(self, key, default, kind=float):
        if key not in self.raw:
            return tuple(default)
        value = self.raw[key]
        if not isinstance(value, list) or not value or \
                not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            self.errors.append(f"{key}: expected a non-empty list of numbers, got {value!r}")
            return tuple(default)
        return tuple(kind(v) for v in value)


def _eps_grid(check: _Validator, settings: dict) -> Tuple[float, ...]:
    grid = check.number_list("eps_grid", settings["Harness"]["eps_grid"])
    if any(key in check.raw for key in ("eps_start", "eps_stop", "eps_step")):
        start = check.number("eps_start", 0.0, low=0.0, high=1.0, high_open=True)
        stop = check.number("eps_stop", 0.35, low=0.0, high=1.0, high_open=True)
        step = check.number("eps_step", 0.025, low=0.0, low_open=True)
        if start > stop:
            check.errors.append(f"eps_stop: {stop!r} is below eps_start = {start!r}")
        grid = tuple(float(e) for e in np.round(np.arange(start, stop + step / 2, step), 10))
    if not grid:
        check.errors.append("eps_grid: the contamination grid must be non-empty")
    elif any(not 0 <= e < 1 for e in grid):
        check.errors.append(f"eps_grid: every epsilon must lie in [0, 1), got {list(grid)}")
    elif any(b <= a for a, b in zip(grid, grid[1:])):
        check.errors.append(f"eps_grid: epsilons must be strictly increasing, got {list(grid)}")
    return grid


def parse_config(text: str, settings: dict = None, presets: dict = None) -> ExperimentConfig:
    """
    Parse and validate an experiment file.

    Raises:
        ConfigValidationError: listing every invalid, out-of-range or unknown key.
    """
    settings = settings if settings is not None else load_config()
    presets = presets if presets is not None else load_presets()
    raw = read_key_values(text)
    check = _Validator(raw)
    check.errors.extend(f"{key}: unknown key" for key in sorted(set(raw) - KNOWN_KEYS))

    figure = check.string("figure")
    if figure is not None and figure.lower() not in FIGURE_IDS:
        check.errors.append(f"figure: unknown figure id {figure!r}; choose from {', '.join(FIGURE_IDS)}")
        figure = None
    experiment_default = Experiment.REPRODUCE if figure else Experiment.REPLICATE
    experiment = experiment_default
    if "experiment" in raw:
        try:
            experiment = Experiment.from_name(raw["experiment"])
        except ValueError:
            check.errors.append(f"experiment: unknown experiment {raw['experiment']!r}; "
                                f"choose from {', '.join(e.value for e in Experiment)}")
    if experiment is Experiment.REPRODUCE and figure is None and "figure" not in raw:
        check.errors.append("figure: the reproduce experiment needs a figure id")

    # Scenario: the figure's preset, else a scenario preset chosen by the outlier kind, then overrides.
    if figure:
        base = dict(presets[figure_preset(figure, presets).scenario_name])
    else:
        outlier = check.string("outlier", "single")
        if outlier not in ("single", "distributed"):
            check.errors.append(f"outlier: expected 'single' or 'distributed', got {outlier!r}")
            outlier = "single"
        base = dict(presets["single_outlier" if outlier == "single" else "distributed_outlier"])
    alpha_re = check.number("alpha_re", float(base["alpha"][0]))
    alpha_im = check.number("alpha_im", float(base["alpha"][1]))
    epsilon = check.number("epsilon", float(base["epsilon"]), low=0.0, high=1.0, high_open=True)
    n = check.number("n", 5000, kind=int, low=0, low_open=True)
    outlier_entry = dict(base, alpha=[alpha_re, alpha_im], epsilon=epsilon)
    outlier_entry["kappa0"] = check.number("kappa0", float(base.get("kappa0", 0.0)), low=0.0)
    if outlier_entry.get("outlier", "single") == "single":
        z0 = outlier_entry.get("z0", [0.0, 0.0])
        outlier_entry["z0"] = [check.number("z0_re", float(z0[0])), check.number("z0_im", float(z0[1]))]
    else:
        for key in ("mu1", "mu2"):
            outlier_entry[key] = check.number(key, float(base[key]))
        for key in ("sigma1", "sigma2"):
            outlier_entry[key] = check.number(key, float(base[key]), low=0.0, low_open=True)

    tuning = TuningPolicy()
    irls = IrlsConfig()
    scenario = None
    try:
        tuning = TuningPolicy(
            bisquare_c_factor=check.number("bisquare_c_factor", settings["Tuning"]["bisquare_c_factor"],
                                           low=0.0, low_open=True),
            gamma_exponent=check.number("gamma_exponent", settings["Tuning"]["gamma_exponent"],
                                        low=0.0, low_open=True),
            gamma_sigma_source=settings["Tuning"]["gamma_sigma_source"])
        irls = IrlsConfig(tol=check.number("irls_tol", settings["IRLS"]["tol"], low=0.0, low_open=True),
                          max_iter=check.number("irls_max_iter", settings["IRLS"]["max_iter"], kind=int, low=1))
        model = ContaminatedModel(ComplexAmplitude(alpha_re, alpha_im), epsilon, outliers_from_preset(outlier_entry))
        scenario = ScenarioConfig(n, model)
    except (DomainError, InvalidConfigurationError) as e:
        check.errors.append(str(e))

    target = Target.THETA
    if "target" in raw:
        try:
            target = Target(str(raw["target"]).strip().lower())
        except ValueError:
            check.errors.append(f"target: expected one of {', '.join(t.value for t in Target)}, "
                                f"got {raw['target']!r}")

    config = dict(
        experiment=experiment,
        figure=figure.lower() if figure else None,
        estimators=check.names("estimators", DEFAULT_ESTIMATORS, ESTIMATOR_NAMES),
        target=target,
        runs=check.number("runs", None, kind=int, low=1),
        base_seed=check.number("base_seed", None, kind=int, low=0),
        output_path=check.string("output_path"),
        dataset_path=check.string("dataset_path"),
        eps_grid=_eps_grid(check, settings),
        sample_sizes=check.number_list("sample_sizes", (n,), kind=int),
        fbp_step=check.number("fbp_step", 250, kind=int, low=1),
        replacement_mean=check.number("replacement_mean", 1000.0),
        replacement_sd=check.number("replacement_sd", 0.1, low=0.0),
        theta_tol=check.number("theta_tol", settings["Breakdown"]["theta_tol"], low=0.0, low_open=True),
        magnitude_bound=check.number("magnitude_bound", None, low=0.0, low_open=True),
        magnitude_factor=float(settings["Breakdown"]["magnitude_factor"]),
        tuning=tuning,
        irls=irls,
        num_processes=check.number("num_processes", settings["Harness"]["num_processes"], kind=int, low=1),
    )
    if any(size < 1 for size in config["sample_sizes"]):
        check.errors.append(f"sample_sizes: every sample size must be >= 1, got {list(config['sample_sizes'])}")

    if check.errors:
        raise ConfigValidationError(check.errors)
    return ExperimentConfig(scenario=scenario, **config)


def read_config_file(path: str, settings: dict = None) -> ExperimentConfig:
    with open(path, encoding="utf-8") as f:
        return parse_config(f.read(), settings)


def resolve_seed(cli_seed: Optional[int], config_seed: Optional[int], settings: dict,
                 environ=os.environ) -> int:
    """--seed, then the experiment file, then $ROBUST_QPHASE_SEED, then config.ini."""
    if cli_seed is not None:
        return int(cli_seed)
    if config_seed is not None:
        return int(config_seed)
    env_seed = environ.get(SEED_ENV_VAR)
    if env_seed not in (None, ""):
        try:
            return int(env_seed)
        except ValueError:
            raise ConfigValidationError([f"{SEED_ENV_VAR}: expected an integer, got {env_seed!r}"])
    return int(settings["Harness"]["base_seed"])
