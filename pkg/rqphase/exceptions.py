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

"""Error kinds raised by rqphase. All of them are ValueError subclasses."""

from typing import List


class DomainError(ValueError):
    """A parameter lies outside the domain of a closed-form expression."""


class EmptyDataError(ValueError):
    """A statistic was requested on an empty sample."""


class InvalidConfigurationError(ValueError):
    """A scenario or solver configuration cannot be used (e.g. n = 0)."""


class InvalidArgumentError(ValueError):
    """An operation argument is out of range (e.g. m > n)."""


class UnsupportedAngleError(ValueError):
    """A record was measured at a quadrature angle other than 0 or pi/2."""


class InsufficientDataError(ValueError):
    """One of the phase splits of a dataset is empty."""


class RootNotBracketedError(ValueError):
    """The M-equation residual has no sign change on the scanned interval."""


class UndefinedPhaseError(ValueError):
    """The phase arctan(alpha_i / alpha_r) is undefined because alpha_r = 0."""


class UnknownFigureError(ValueError):
    """A reproduce target is not one of the known figure or table ids."""


class ConfigValidationError(ValueError):
    """An experiment configuration failed validation.

    Attributes:
        errors (List[str]): every problem found, not only the first one.
    """

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__("Invalid experiment configuration:\n  " + "\n  ".join(self.errors))
