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
"""Probe spectra, Doppler-averaged spectra and on/off difference signals."""

import concurrent.futures
import dataclasses
import logging
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from . import core
from . import doppler
from . import dynamics
from .errors import AxisMismatchError
from .errors import RydbergDarkError
from .errors import SolverPointError

IM_SIGMA21 = "im_sigma21"
RE_SIGMA21 = "re_sigma21"
OBSERVABLES = (IM_SIGMA21, RE_SIGMA21)


@dataclasses.dataclass(frozen=True, eq=False)
class Spectrum:
  """Values sampled on a strictly increasing axis, with a parameter echo."""
  axis_name: str
  axis: np.ndarray
  values: np.ndarray
  metadata: Mapping[str, Any] = dataclasses.field(default_factory=dict)

  def __post_init__(self):
    axis = np.asarray(self.axis, dtype=np.float64)
    values = np.asarray(self.values)
    if axis.ndim != 1 or axis.shape != values.shape:
      raise ValueError(
          f"Axis shape {axis.shape} does not match values shape "
          f"{values.shape}")
    if axis.size == 0:
      raise ValueError("Spectrum axis is empty")
    if np.any(np.diff(axis) <= 0):
      raise ValueError(f"Axis {self.axis_name!r} must be strictly increasing")
    object.__setattr__(self, "axis", axis)
    object.__setattr__(self, "values", values)
    object.__setattr__(self, "metadata", dict(self.metadata))

  def __len__(self) -> int:
    return self.axis.shape[0]

  def value_at(self, x: float) -> float:
    """Value at the axis point nearest `x`."""
    return self.values[int(np.argmin(np.abs(self.axis - x)))]


def _asdict(obj) -> Dict[str, Any]:
  return {
      field.name: getattr(obj, field.name)
      for field in dataclasses.fields(obj)
      if field.init
  }


def _grid_metadata(grid: doppler.VelocityGrid) -> Dict[str, Any]:
  return {
      "scheme": grid.scheme,
      "points": grid.points.tolist(),
      "weights": grid.weights.tolist(),
  }


def _observe(rho: dynamics.DensityMatrix, observable: str) -> float:
  if observable == IM_SIGMA21:
    return rho.sigma21.imag
  return rho.sigma21.real


def _decay_for(drives, decay: core.DecayModel) -> core.DecayModel:
  levels = tuple(drives.levels)
  if decay.levels == levels:
    return decay
  return decay.restricted(levels)


def solve_point(scheme: core.LevelScheme,
                drives,
                decay: core.DecayModel,
                v: float,
                convention: str = core.LITERAL) -> dynamics.DensityMatrix:
  """Steady state of a single velocity class."""
  hamiltonian = core.build_hamiltonian(scheme, drives, v, convention)
  liouvillian = dynamics.build_liouvillian(hamiltonian,
                                           _decay_for(drives, decay))
  return dynamics.steady_state(liouvillian)


def _scan_velocity(scheme, drives, decay, v, delta21_axis, observable,
                   convention) -> np.ndarray:
  values = np.empty(len(delta21_axis))
  for i, delta21 in enumerate(delta21_axis):
    point = dataclasses.replace(drives, delta21=float(delta21))
    try:
      rho = solve_point(scheme, point, decay, v, convention)
    except (RydbergDarkError, np.linalg.LinAlgError) as e:
      raise SolverPointError(float(v), float(delta21), e) from e
    values[i] = _observe(rho, observable)
  logging.debug("Finished velocity class v=%g", v)
  return values


def probe_scan(
    scheme: core.LevelScheme,
    drives,
    decay: core.DecayModel,
    grid: doppler.VelocityGrid,
    delta21_axis: Sequence[float],
    observable: str = IM_SIGMA21,
    convention: str = core.LITERAL,
    threads: int = 1,
) -> Tuple[List[Spectrum], Spectrum]:
  """Sweeps the probe detuning for every velocity class of `grid`.

  Args:
    scheme: Optical constants.
    drives: `DriveConfig` or an eliminated drive; `delta21` is replaced by
      each axis value.
    decay: Decay model; restricted to the levels of `drives` when needed.
    grid: Velocity classes and weights.
    delta21_axis: Strictly increasing probe detunings.
    observable: `im_sigma21` (absorption) or `re_sigma21` (dispersion).
    convention: `literal` or `standard`.
    threads: Number of worker threads; results are independent of it.

  Returns:
    Tuple `(per_velocity, averaged)`.

  Raises:
    SolverPointError: wrapping the first failing solve.
  """
  if observable not in OBSERVABLES:
    raise ValueError(f"Unknown observable {observable!r}, expected one of "
                     f"{OBSERVABLES!r}")
  axis = np.asarray(delta21_axis, dtype=np.float64)
  if axis.ndim != 1 or axis.size == 0:
    raise ValueError("delta21 axis must be a non-empty 1-D sequence")
  if threads < 1:
    raise ValueError(f"threads must be >= 1, got {threads!r}")
  core.convention_scales(convention)
  metadata = {
      "observable": observable,
      "convention": convention,
      "scheme": _asdict(scheme),
      "drives": dict(_asdict(drives), kind=type(drives).__name__),
      "decay": _asdict(decay),
      "grid": _grid_metadata(grid),
  }
  logging.info("Scanning %d probe detunings over %d velocity classes",
               axis.size, len(grid))

  def scan(v):
    return _scan_velocity(scheme, drives, decay, v, axis, observable,
                          convention)

  if threads == 1:
    rows = [scan(v) for v in grid.points]
  else:
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
      rows = list(pool.map(scan, grid.points))
  table = np.stack(rows)
  per_velocity = [
      Spectrum("delta21", axis, row, dict(metadata, velocity=float(v)))
      for v, row in zip(grid.points, table)
  ]
  averaged = Spectrum("delta21", axis, doppler.doppler_average(table, grid),
                      metadata)
  return per_velocity, averaged


def difference_spectrum(on: Spectrum, off: Spectrum) -> Spectrum:
  """Lock-in signal `off - on`; positive where the coupling increases T."""
  if on.axis_name != off.axis_name or not np.array_equal(on.axis, off.axis):
    raise AxisMismatchError(
        f"Cannot subtract spectra on different axes ({on.axis_name!r} with "
        f"{len(on)} points, {off.axis_name!r} with {len(off)} points)")
  if on.metadata.get("observable") != off.metadata.get("observable"):
    raise ValueError("Cannot subtract spectra of different observables")
  metadata = {"difference": "off - on", "on": on.metadata, "off": off.metadata}
  return Spectrum(on.axis_name, on.axis, off.values - on.values, metadata)


def transmission(absorption: Spectrum, optical_depth_scale: float) -> Spectrum:
  """Beer-Lambert transmission exp(-scale * Im sigma21)."""
  if not optical_depth_scale >= 0:
    raise ValueError(
        f"optical_depth_scale must be >= 0, got {optical_depth_scale!r}")
  values = np.exp(-optical_depth_scale * np.asarray(absorption.values).real)
  metadata = dict(absorption.metadata,
                  optical_depth_scale=float(optical_depth_scale))
  return Spectrum(absorption.axis_name, absorption.axis, values, metadata)


@dataclasses.dataclass(frozen=True, eq=False)
class RydbergDifference:
  off: Spectrum
  on: Spectrum
  difference: Spectrum
  per_velocity_off: List[Spectrum]
  per_velocity_on: List[Spectrum]


def rydberg_difference(scheme: core.LevelScheme,
                       drives: core.DriveConfig,
                       decay: core.DecayModel,
                       grid: doppler.VelocityGrid,
                       delta21_axis: Sequence[float],
                       convention: str = core.LITERAL,
                       threads: int = 1) -> RydbergDifference:
  """Absorption with the Rydberg coupling off (omega54 = 0) and on."""
  off_drives = dataclasses.replace(drives, omega54=0.0)
  per_off, off = probe_scan(scheme, off_drives, decay, grid, delta21_axis,
                            IM_SIGMA21, convention, threads)
  per_on, on = probe_scan(scheme, drives, decay, grid, delta21_axis,
                          IM_SIGMA21, convention, threads)
  return RydbergDifference(
      off=off,
      on=on,
      difference=difference_spectrum(on, off),
      per_velocity_off=per_off,
      per_velocity_on=per_on)


def rydberg_shift_scan(scheme: core.LevelScheme,
                       drives,
                       decay: core.DecayModel,
                       grid: doppler.VelocityGrid,
                       delta21_axis: Sequence[float],
                       delta54_values: Sequence[float],
                       convention: str = core.LITERAL,
                       threads: int = 1) -> List[Spectrum]:
  """Averaged absorption for each Rydberg detuning in `delta54_values`.

  A large delta54 models a Rydberg level pushed out of resonance, for example
  by a Stark shift or by interactions.
  """
  spectra = []
  for delta54 in delta54_values:
    shifted = dataclasses.replace(drives, delta54=float(delta54))
    _, averaged = probe_scan(scheme, shifted, decay, grid, delta21_axis,
                             IM_SIGMA21, convention, threads)
    spectra.append(averaged)
  return spectra
