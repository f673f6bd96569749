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


import inspect
import sys

from rqphase.config import *
from rqphase.exceptions import *
from rqphase.gaussian import *
from rqphase.sampling import *
from rqphase.estimators import *
from rqphase.parallelmanager import *
from rqphase.robustness import *
from rqphase.results import *
from rqphase.harness import *
from rqphase.version import __version__

current_module = sys.modules[__name__]


def get_rqphase_members():
    rqphase_members = [
        name for name in dir(current_module)
        if (inspect.isfunction(getattr(current_module, name)) or inspect.isclass(getattr(current_module, name)))
    ]
    return rqphase_members


__all__ = get_rqphase_members()
__all__.append('__version__')
__all__.sort()
