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
Iteratively reweighted solution of the location M-equation.

Writing sum_i psi(x_i - mu) = 0 as sum_i W(x_i - mu) (x_i - mu) = 0 with
W(r) = psi(r) / r gives the fixed-point map

    mu <- sum_i W(x_i - mu) x_i / sum_i W(x_i - mu),

started at the median and stopped when two successive iterates differ by at
most `tol`. `grid_root` solves the same equation by scanning and bisection and
serves as an independent check of the iteration.
"""

from dataclasses import asdict, dataclass
from typing import List, Optional

import numpy as np
from scipy.optimize import bisect

from rqphase.estimators.psi import BasePsi
from rqphase.exceptions import EmptyDataError, InvalidArgumentError, InvalidConfigurationError, \
    RootNotBracketedError

DEGENERATE_WEIGHT_SUM = 1e-30
BISECTION_XTOL = 1e-8


@dataclass(frozen=True)
class IrlsConfig:
    """
    Stopping rule of the iteration.

    Attributes:
        tol (float): absolute threshold on |mu^(a+1) - mu^(a)|.
        max_iter (int): maximum number of updates.
        initializer (str): starting point, only "median" is supported.
        record_trajectory (bool): keep every iterate in the result.
    """
    tol: float = 1e-6
    max_iter: int = 100
    initializer: str = "median"
    record_trajectory: bool = False

    def __post_init__(self):
        if not self.tol > 0:
            raise InvalidConfigurationError(f"IRLS tol must be > 0, got {self.tol}.")
        if not (isinstance(self.max_iter, (int, np.integer)) and self.max_iter >= 1):
            raise InvalidConfigurationError(f"IRLS max_iter must be an integer >= 1, got {self.max_iter}.")
        if self.initializer != "median":
            raise InvalidConfigurationError(f"Unsupported IRLS initializer {self.initializer!r}.")


@dataclass(frozen=True)
class EstimateResult:
    """
    Outcome of one location estimate.

    Attributes:
        value (float): the estimate.
        iterations (int): number of updates performed (0 for closed forms).
        converged (bool): the stopping threshold was reached.
        trajectory (Optional[List[float]]): iterates mu^(0) ... mu^(a_fin) when recorded.
        degenerate (bool): the weights vanished, so the iteration stopped at the current iterate.
    """
    value: float
    iterations: int = 0
    converged: bool = True
    trajectory: Optional[List[float]] = None
    degenerate: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def m_equation_residual(xs, kind: BasePsi, mu: float) -> float:
    """sum_i psi(x_i - mu)."""
    xs = np.asarray(xs, dtype=float)
    return float(np.sum(kind.psi(xs - mu)))


def irls_solve(xs, kind: BasePsi, config: IrlsConfig = IrlsConfig()) -> EstimateResult:
    """
    Solve the M-equation by reweighting from the median.

    The iteration count is the number of updates up to and including the one that meets the
    stopping rule. A constant-weight psi (the normal MLE) stops after its single update.
    """
    xs = np.asarray(xs, dtype=float).ravel()
    if xs.size == 0:
        raise EmptyDataError("irls_solve needs at least one observation.")

    mu = float(np.median(xs))
    trajectory = [mu] if config.record_trajectory else None

    for iteration in range(1, config.max_iter + 1):
        weights = kind.weight(xs - mu)
        weight_sum = float(np.sum(weights))
        if weight_sum < DEGENERATE_WEIGHT_SUM:
            return EstimateResult(mu, iteration - 1, False, trajectory, degenerate=True)

        new_mu = float(np.dot(weights, xs) / weight_sum)
        if trajectory is not None:
            trajectory.append(new_mu)
        if kind.constant_weight or abs(new_mu - mu) <= config.tol:
            return EstimateResult(new_mu, iteration, True, trajectory)
        mu = new_mu

    return EstimateResult(mu, config.max_iter, False, trajectory)


def _sign_change_brackets(grid: np.ndarray, residuals: np.ndarray):
    """Yield (lo, hi) intervals on which the residual changes sign, and exact grid zeros as (x, x)."""
    signs = np.sign(residuals)
    for i in range(len(grid) - 1):
        if signs[i] * signs[i + 1] < 0:
            yield grid[i], grid[i + 1]
        elif signs[i] == 0 and 0 < i < len(grid) - 1 and signs[i - 1] * signs[i + 1] < 0:
            yield grid[i], grid[i]


def grid_root(xs, kind: BasePsi, lo: float, hi: float, resolution: int = 1000,
              anchor: Optional[float] = None) -> float:
    """
    Root of the M-equation found by scanning and bisection.

    The residual is evaluated on `resolution + 1` equally spaced points of [lo, hi]; the
    sign change nearest `anchor` (the median by default) is refined by bisection to 1e-8.
    """
    if not lo < hi:
        raise InvalidArgumentError(f"grid_root needs lo < hi, got lo={lo}, hi={hi}.")
    if resolution < 1:
        raise InvalidArgumentError(f"resolution must be a positive integer, got {resolution}.")
    xs = np.asarray(xs, dtype=float).ravel()
    if anchor is None:
        anchor = float(np.median(xs))

    grid = np.linspace(lo, hi, resolution + 1)
    residuals = np.array([m_equation_residual(xs, kind, mu) for mu in grid])
    brackets = list(_sign_change_brackets(grid, residuals))
    if not brackets:
        raise RootNotBracketedError(f"The M-equation residual does not change sign on [{lo}, {hi}].")

    a, b = min(brackets, key=lambda ab: abs(0.5 * (ab[0] + ab[1]) - anchor))
    if a == b:
        return float(a)
    return float(bisect(lambda mu: m_equation_residual(xs, kind, mu), a, b, xtol=BISECTION_XTOL))
