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
"""Velocity grids and Doppler averaging."""

import dataclasses
import math
from typing import Optional, Sequence

import numpy as np
import scipy.constants

from . import core
from .errors import EmptyGridError
from .errors import LengthMismatchError

UNIFORM = "uniform"
MAXWELL = "maxwell"
SCHEMES = (UNIFORM, MAXWELL)


@dataclasses.dataclass(frozen=True, eq=False)
class VelocityGrid:
  """Velocity classes in units of gamma2/k1 and their normalized weights."""
  points: np.ndarray
  weights: np.ndarray
  scheme: str = UNIFORM

  def __post_init__(self):
    points = np.asarray(self.points, dtype=np.float64)
    weights = np.asarray(self.weights, dtype=np.float64)
    if points.ndim != 1 or points.shape != weights.shape:
      raise LengthMismatchError(
          f"Grid has {points.shape} points but {weights.shape} weights")
    if points.size == 0:
      raise EmptyGridError("Velocity grid has no points")
    if np.any(np.diff(points) <= 0):
      raise ValueError("Velocity grid points must be strictly increasing")
    if np.any(weights < 0):
      raise ValueError("Velocity grid weights must be >= 0")
    if abs(weights.sum() - 1) > 1e-12:
      raise ValueError(f"Grid weights sum to {weights.sum()!r}, expected 1")
    if self.scheme not in SCHEMES:
      raise ValueError(f"Unknown weighting scheme {self.scheme!r}")
    object.__setattr__(self, "points", points)
    object.__setattr__(self, "weights", weights)

  def __len__(self) -> int:
    return self.points.shape[0]

  def without(self, velocity: float) -> "VelocityGrid":
    """Drops the point equal to `velocity` and renormalizes."""
    keep = self.points != velocity
    if keep.all():
      raise ValueError(f"Velocity {velocity!r} is not a grid point")
    weights = self.weights[keep]
    return VelocityGrid(self.points[keep], weights / weights.sum(), self.scheme)


def make_grid(vmin: float,
              vmax: float,
              step: float,
              scheme: str = UNIFORM,
              doppler_width: Optional[float] = None) -> VelocityGrid:
  """Builds the grid vmin, vmin + step, ... up to and including vmax.

  Args:
    vmin: First velocity.
    vmax: Last velocity; `vmin == vmax` gives the single-point cold-atom grid.
    step: Spacing, > 0.
    scheme: `uniform` (equal weights) or `maxwell` (weights proportional to
      exp(-v**2 / doppler_width**2)).
    doppler_width: Most probable speed in units of gamma2/k1; required for
      `maxwell`.

  Returns:
    The `VelocityGrid`.

  Raises:
    EmptyGridError: if `vmin > vmax`.
  """
  if not (math.isfinite(vmin) and math.isfinite(vmax)):
    raise ValueError(f"Grid bounds must be finite, got {vmin!r}, {vmax!r}")
  if not step > 0:
    raise ValueError(f"step must be > 0, got {step!r}")
  if vmin > vmax:
    raise EmptyGridError(f"No velocity fits in [{vmin!r}, {vmax!r}]")
  count = int(math.floor((vmax - vmin) / step + 1e-9)) + 1
  points = vmin + step * np.arange(count)
  if scheme == UNIFORM:
    weights = np.full(count, 1.0 / count)
  elif scheme == MAXWELL:
    if doppler_width is None or not doppler_width > 0:
      raise ValueError(
          f"maxwell weighting needs doppler_width > 0, got {doppler_width!r}")
    weights = np.exp(-(points / doppler_width)**2)
    weights /= weights.sum()
  else:
    raise ValueError(f"Unknown weighting scheme {scheme!r}, expected one of "
                     f"{SCHEMES!r}")
  return VelocityGrid(points=points, weights=weights, scheme=scheme)


def doppler_average(values: Sequence, grid: VelocityGrid) -> np.ndarray:
  """Returns sum_i w_i values[i].

  `values` may be 1-D (one scalar per velocity) or 2-D with the velocity as the
  leading axis, in which case the result is a 1-D array over the second axis.
  """
  values = np.asarray(values)
  if values.ndim == 0 or values.shape[0] != len(grid):
    raise LengthMismatchError(
        f"Got values of shape {values.shape} for a grid of {len(grid)} points")
  return grid.weights @ values


def doppler_width_in_grid_units(scheme: core.LevelScheme, temperature: float,
                                atomic_mass: float) -> float:
  """Most probable speed sqrt(2 kB T / m) in units of gamma2/k1.

  Args:
    scheme: Supplies the probe wavelength.
    temperature: Kelvin.
    atomic_mass: Atomic mass units.
  """
  if not (temperature > 0 and atomic_mass > 0):
    raise ValueError("temperature and atomic_mass must be > 0")
  mass = atomic_mass * scipy.constants.atomic_mass
  speed = math.sqrt(2 * scipy.constants.k * temperature / mass)
  return speed / (scheme.lambda1 * 1e-9 * core.GAMMA2_HZ)
