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


from .replication import Target, ReplicationRun, ReplicationStats, simulate_runs, summarize_runs, \
    replicate_targets, run_replications, sample_size_sweep
from .eps_curve import EpsCurvePoint, EpsCurve, check_eps_grid, epsilon_curves, epsilon_curve
from .breakdown import BreakdownRule, SweepPoint, FbpResult, finite_breakdown_point, \
    mean_theta_after_replacement, calibrate_theta_tol
from .efficiency import relative_efficiency
