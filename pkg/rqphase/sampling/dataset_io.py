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


import csv

from rqphase.sampling.dataset import Dataset, Source

DATASET_HEADER = ["phi", "x", "source"]


def write_dataset_csv(dataset: Dataset, path: str):
    """Write a dataset as CSV with header `phi,x,source`."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(DATASET_HEADER)
        for phi, x, source in zip(dataset.phi, dataset.x, dataset.source):
            writer.writerow([repr(float(phi)), repr(float(x)), Source(int(source)).name.lower()])


def read_dataset_csv(path: str, seed: int = 0) -> Dataset:
    """Read a dataset CSV. The `source` column is optional and defaults to ideal."""
    phis, xs, sources = [], [], []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or not {"phi", "x"} <= set(reader.fieldnames):
            raise ValueError(f"{path}: a dataset CSV needs at least the columns 'phi' and 'x'.")
        for line, row in enumerate(reader, start=2):
            try:
                phis.append(float(row["phi"]))
                xs.append(float(row["x"]))
                tag = (row.get("source") or "ideal").strip().upper()
                sources.append(int(Source[tag]))
            except (KeyError, ValueError) as error:
                raise ValueError(f"{path}:{line}: malformed record {row!r}.") from error
    return Dataset(phi=phis, x=xs, source=sources, seed=seed)
