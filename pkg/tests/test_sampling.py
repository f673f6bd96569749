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

import numpy as np
import pytest

from rqphase.exceptions import InvalidArgumentError, InvalidConfigurationError, UnsupportedAngleError
from rqphase.sampling.dataset import HALF_PI, Dataset, MeasurementRecord, ScenarioConfig, Source
from rqphase.sampling.dataset_io import read_dataset_csv, write_dataset_csv
from rqphase.sampling.sampler import draw_measurement, generate_dataset, make_rng, replace_with_outliers, \
    replication_seed, split_by_phase
from tests.shared_utils import single_outlier_scenario


class TestGenerateDataset:

    def test_same_seed_same_dataset(self):
        scenario = single_outlier_scenario(n=1000)
        assert generate_dataset(scenario, 11) == generate_dataset(scenario, 11)
        assert generate_dataset(scenario, 11) != generate_dataset(scenario, 12)

    def test_angles_and_sources(self):
        dataset = generate_dataset(single_outlier_scenario(n=5000), 3)
        assert dataset.n == len(dataset) == 5000
        at_zero = np.isclose(dataset.phi, 0.0)
        assert np.all(at_zero | np.isclose(dataset.phi, HALF_PI))
        assert abs(at_zero.mean() - 0.5) < 0.03
        assert 0 < dataset.outlier_count() < 150

    def test_no_contamination(self):
        dataset = generate_dataset(single_outlier_scenario(n=2000, epsilon=0.0), 5)
        assert dataset.outlier_count() == 0
        xs_real, xs_imag = split_by_phase(dataset)
        assert np.mean(xs_real) == pytest.approx(10.0, abs=0.05)
        assert np.mean(xs_imag) == pytest.approx(4.0, abs=0.05)

    def test_invalid_sample_size(self):
        with pytest.raises(InvalidConfigurationError):
            ScenarioConfig(0, single_outlier_scenario().model)

    def test_dataset_is_read_only(self):
        dataset = generate_dataset(single_outlier_scenario(n=10), 1)
        with pytest.raises(ValueError):
            dataset.x[0] = 0.0

    def test_draw_measurement(self):
        record = draw_measurement(single_outlier_scenario(epsilon=0.0).model, 0.0, make_rng(0))
        assert record.source is Source.IDEAL
        assert abs(record.x - 10.0) < 5

    def test_replication_seed(self):
        assert replication_seed(100, 0) == 100
        assert replication_seed(100, 7) == 107


class TestReplaceWithOutliers:

    def setup_method(self):
        self.dataset = generate_dataset(single_outlier_scenario(n=5000), 42)

    def test_zero_replacements(self):
        assert replace_with_outliers(self.dataset, 0, 1000.0, 0.1, make_rng(1)) is self.dataset

    def test_exactly_m_records_change(self):
        replaced = replace_with_outliers(self.dataset, 250, 1000.0, 0.1, make_rng(1))
        assert np.count_nonzero(replaced.x != self.dataset.x) == 250
        assert np.array_equal(replaced.phi, self.dataset.phi)
        assert replaced.outlier_count() >= 250

    def test_replace_everything(self):
        replaced = replace_with_outliers(self.dataset, self.dataset.n, 1000.0, 0.1, make_rng(1))
        assert np.mean(replaced.x) == pytest.approx(1000.0, abs=0.05)

    def test_stratified_replacement(self):
        m = 1000
        replaced = replace_with_outliers(self.dataset, m, 1000.0, 0.1, make_rng(2), stratify_by_phase=True)
        changed = replaced.x != self.dataset.x
        assert np.count_nonzero(changed) == m
        at_zero = self.dataset.phi == 0.0
        expected = m * np.count_nonzero(at_zero) / self.dataset.n
        assert abs(np.count_nonzero(changed & at_zero) - expected) <= 1

    @pytest.mark.parametrize("m", [-1, 5001])
    def test_out_of_range(self, m):
        with pytest.raises(InvalidArgumentError):
            replace_with_outliers(self.dataset, m, 1000.0, 0.1, make_rng(1))


class TestSplitByPhase:

    def test_split_keeps_order(self):
        dataset = Dataset.from_records([MeasurementRecord(0.0, 1.0), MeasurementRecord(HALF_PI, 2.0),
                                        MeasurementRecord(0.0, 3.0)])
        xs_real, xs_imag = split_by_phase(dataset)
        assert xs_real.tolist() == [1.0, 3.0]
        assert xs_imag.tolist() == [2.0]

    def test_unsupported_angle(self):
        dataset = Dataset.from_records([MeasurementRecord(0.0, 1.0), MeasurementRecord(0.3, 2.0)])
        with pytest.raises(UnsupportedAngleError):
            split_by_phase(dataset)


class TestDatasetCsv:

    def test_write_then_read(self, tmp_path):
        dataset = generate_dataset(single_outlier_scenario(n=300, epsilon=0.2), 9)
        path = tmp_path / "dataset.csv"
        write_dataset_csv(dataset, str(path))
        assert path.read_text(encoding="utf-8").splitlines()[0] == "phi,x,source"
        assert read_dataset_csv(str(path), seed=9) == dataset

    def test_source_column_is_optional(self, tmp_path):
        path = tmp_path / "plain.csv"
        path.write_text("phi,x\n0.0,10.1\n1.5707963267948966,3.9\n", encoding="utf-8")
        dataset = read_dataset_csv(str(path))
        assert dataset.n == 2
        assert dataset.outlier_count() == 0
        assert dataset.records[1] == MeasurementRecord(HALF_PI, 3.9, Source.IDEAL)

    def test_malformed_record(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("phi,x\n0.0,not-a-number\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_dataset_csv(str(path))
