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
"""Defines pytest fixtures for rydberg_dark tests."""

import gin
import pytest
import rydberg_dark as rd


@pytest.fixture(autouse=True)
def clear_gin_config():
  """Leaves the global gin config empty after every test."""
  yield
  gin.clear_config()


@pytest.fixture
def scheme():
  return rd.LevelScheme()


@pytest.fixture
def decay():
  return rd.DecayModel()


@pytest.fixture
def fig3_drives():
  """Rydberg coupling on; set omega54 = 0 for the coupling-off case."""
  return rd.DriveConfig(omega21=0.02, omega32=0.2, omega43=0.8, omega54=0.8)


@pytest.fixture
def fig5_drives():
  return rd.DriveConfig(
      omega21=0.02,
      omega32=0.25,
      omega43=20.0,
      omega54=20.0,
      delta43=2000.0,
      override_k_prime_ratio=0.16)


@pytest.fixture
def coarse_grid():
  """Symmetric nine-point grid over +-10."""
  return rd.make_grid(-10.0, 10.0, 2.5)
