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
"""Transit-time linewidth of thermal atoms crossing the laser beams."""

import dataclasses
import math

import scipy.constants

from . import core

# FWHM = C * mean_speed / (2 pi waist); 0.8 pi reproduces the Gaussian-beam
# estimate 0.4 * mean_speed / waist.
DEFAULT_TRANSIT_CONSTANT = 0.8 * math.pi


@dataclasses.dataclass(frozen=True)
class BeamGeometry:
  """Beam waist (1/e^2 radius, mm), vapour temperature (K), mass (amu)."""
  waist_mm: float = 1.3
  temperature: float = 293.0
  atomic_mass: float = 86.909

  def __post_init__(self):
    for field in dataclasses.fields(self):
      value = getattr(self, field.name)
      if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{field.name} must be positive, got {value!r}")


@dataclasses.dataclass(frozen=True)
class TransitEstimate:
  fwhm_khz: float
  mean_speed: float  # m/s
  transit_rate: float  # gamma2 units, for DecayModel.transit_rate
  constant: float


def mean_speed(geometry: BeamGeometry) -> float:
  """Mean thermal speed sqrt(8 kB T / (pi m)) in m/s."""
  mass = geometry.atomic_mass * scipy.constants.atomic_mass
  return math.sqrt(8 * scipy.constants.k * geometry.temperature /
                   (math.pi * mass))


def transit_linewidth(geometry: BeamGeometry,
                      constant: float = DEFAULT_TRANSIT_CONSTANT,
                      gamma2_hz: float = core.GAMMA2_HZ) -> TransitEstimate:
  """Order-of-magnitude transit-time FWHM and the equivalent relaxation rate.

  The rate is half the FWHM in units of gamma2, so that a Lorentzian of that
  half width matches the estimate.
  """
  if not constant > 0:
    raise ValueError(f"constant must be > 0, got {constant!r}")
  if not gamma2_hz > 0:
    raise ValueError(f"gamma2_hz must be > 0, got {gamma2_hz!r}")
  speed = mean_speed(geometry)
  fwhm_hz = constant * speed / (2 * math.pi * geometry.waist_mm * 1e-3)
  return TransitEstimate(
      fwhm_khz=fwhm_hz / 1e3,
      mean_speed=speed,
      transit_rate=fwhm_hz / (2 * gamma2_hz),
      constant=constant)
