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

import multiprocessing
import os
from typing import Callable, List, Sequence

import dill

from rqphase.exceptions import InvalidArgumentError


def process_task(serialized_worker, serialized_task):
    worker = dill.loads(serialized_worker)
    task = dill.loads(serialized_task)
    return dill.dumps(worker(task))


def default_num_processes(num_tasks: int) -> int:
    half_cpu_count = max(int((os.cpu_count() or 1) / 2), 1)  # Half full load
    return max(min(num_tasks, half_cpu_count), 1)


def parallel_process_replications(worker: Callable, tasks: Sequence, num_processes: int = None) -> List:
    """
    Apply `worker` to every task and return the results in task order.

    Workers and tasks are serialised with dill so that closures and dataclass instances
    cross process boundaries. `num_processes = 1` runs in the calling process.
    """
    tasks = list(tasks)
    if num_processes is None:
        num_processes = default_num_processes(len(tasks))
    if num_processes < 1:
        raise InvalidArgumentError(f"num_processes must be >= 1, got {num_processes}.")
    if num_processes == 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]

    serialized_worker = dill.dumps(worker)
    serialized_tasks = [dill.dumps(task) for task in tasks]
    with multiprocessing.Pool(num_processes) as pool:
        results = pool.starmap(process_task, [(serialized_worker, task) for task in serialized_tasks])
    return [dill.loads(result) for result in results]
