# Copyright 2026 The rydberg_dark Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Tests for rydberg_dark.csv_io."""

import numpy as np
import pytest
import rydberg_dark as rd
from rydberg_dark import csv_io


def test_columns_read_back(tmp_path):
  path = str(tmp_path / "sub" / "out.csv")
  x = np.linspace(-1, 1, 5)
  csv_io.write_columns(path, {"delta21": x, "im_sigma21": x**2 / 3}, {
      "scenario": "fig3",
      "amplitude": 0.1,
  })
  metadata, names, data = csv_io.read_columns(path)
  assert metadata == {"amplitude": "0.10000000000000001", "scenario": "fig3"}
  assert names == ["delta21", "im_sigma21"]
  np.testing.assert_array_equal(data[:, 0], x)
  np.testing.assert_array_equal(data[:, 1], x**2 / 3)


def test_file_layout(tmp_path):
  path = tmp_path / "out.csv"
  csv_io.write_columns(str(path), {"a": [1.0], "b": [0.5]}, {"z": 1, "b": "x"})
  assert path.read_text() == "# b=x\n# z=1\na,b\n1,0.5\n"


def test_spectrum(tmp_path):
  spectrum = rd.Spectrum("e_rms", [0.0, 0.5], [1.0, 0.25])
  path = csv_io.write_spectrum(str(tmp_path / "s.csv"), spectrum,
                               "rdr_amplitude", {"n": 44})
  metadata, names, data = csv_io.read_columns(path)
  assert metadata == {"n": "44"}
  assert names == ["e_rms", "rdr_amplitude"]
  np.testing.assert_array_equal(data, [[0.0, 1.0], [0.5, 0.25]])


def test_columns_must_have_equal_length(tmp_path):
  with pytest.raises(ValueError):
    csv_io.write_columns(str(tmp_path / "bad.csv"), {
        "a": [1.0, 2.0],
        "b": [1.0]
    }, {})


def test_sidecar(tmp_path):
  path = tmp_path / "fig3.gin"
  csv_io.write_sidecar(str(path), "scenario.name = 'fig3'\n\n", "0.1.0",
                       "literal")
  assert path.read_text().splitlines() == [
      "# rydberg_dark version: 0.1.0",
      "# convention: literal",
      "scenario.name = 'fig3'",
  ]
