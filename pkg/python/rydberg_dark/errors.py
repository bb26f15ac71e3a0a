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
"""Exception types raised by rydberg_dark."""

from typing import Optional

__all__ = [
    "RydbergDarkError",
    "ConfigError",
    "NullSpaceDegenerateError",
    "StepSizeUnderflowError",
    "EmptyGridError",
    "LengthMismatchError",
    "AxisMismatchError",
    "UnknownComponentError",
    "AxisTooNarrowError",
    "DivisionByZeroDetuningError",
    "NegativeRatioError",
    "TrackingLostError",
    "ValidityGateError",
    "NoExtremumError",
    "SolverPointError",
]


class RydbergDarkError(Exception):
  """Base class for all errors raised by this package."""


class ConfigError(RydbergDarkError, ValueError):
  """Scenario configuration could not be parsed or is incomplete."""


class NullSpaceDegenerateError(RydbergDarkError):
  """The Liouvillian has more than one steady state.

  Signals a decoupled or dark manifold.  Break the degeneracy, for example with
  a non-zero `DecayModel.transit_rate`.
  """

  def __init__(self, dimension: int, tolerance: float):
    super().__init__(
        f"Liouvillian null space has dimension {dimension} at tolerance "
        f"{tolerance:g}; the steady state is not unique")
    self.dimension = dimension
    self.tolerance = tolerance


class StepSizeUnderflowError(RydbergDarkError):
  """The ODE integrator could not meet the requested tolerance."""


class EmptyGridError(RydbergDarkError, ValueError):
  """No velocity points fit in the requested range."""


class LengthMismatchError(RydbergDarkError, ValueError):
  """Per-velocity values do not match the grid length."""


class AxisMismatchError(RydbergDarkError, ValueError):
  """Two spectra that must share an axis do not."""


class UnknownComponentError(RydbergDarkError, KeyError):
  """A Stark component label is not part of the model."""


class AxisTooNarrowError(RydbergDarkError, ValueError):
  """The spectrum axis is too narrow for baseline correction."""


class DivisionByZeroDetuningError(RydbergDarkError, ZeroDivisionError):
  """The intermediate-state detuning is zero."""


class NegativeRatioError(RydbergDarkError, ValueError):
  """A wavevector ratio that must be positive is not."""


class TrackingLostError(RydbergDarkError):
  """Eigenvector continuity failed between adjacent velocities."""


class ValidityGateError(RydbergDarkError, ValueError):
  """Adiabatic elimination requested outside its range of validity."""


class NoExtremumError(RydbergDarkError, ValueError):
  """The spectrum has no feature to locate."""


class SolverPointError(RydbergDarkError):
  """Wraps a solver failure with the offending velocity and probe detuning."""

  def __init__(self, velocity: float, delta21: Optional[float],
               cause: BaseException):
    where = f"v={velocity!r}"
    if delta21 is not None:
      where += f", delta21={delta21!r}"
    super().__init__(f"Solver failed at {where}: {cause}")
    self.velocity = velocity
    self.delta21 = delta21
    self.cause = cause
