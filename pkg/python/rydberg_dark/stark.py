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
"""Stark shifts of the Rydberg level and the dark-resonance switching curve.

Each |mJ| component of the nd5/2 state shifts quadratically with the rms
field, -C (n / n_reference)**7 E**2.  C is calibrated so that the shift reaches
`threshold` (in units of gamma2) at the component's suppression field.

Unless a threshold is given it is taken from the amplitude itself: the
smallest Rydberg detuning shift at which the normalized RDR amplitude falls to
`SUPPRESSED_LEVEL`.  Component amplitudes are read off a suppression envelope,
the running minimum of the clipped amplitude over growing shifts, so velocity
classes of a discrete grid that come back into resonance at a larger shift do
not revive the signal.
"""

import dataclasses
import itertools
import logging
import math
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.optimize

from . import core
from . import doppler
from . import spectra
from .errors import AxisTooNarrowError
from .errors import NoExtremumError
from .errors import UnknownComponentError

ALPHA_SCALE_EXPONENT = 7
SUPPRESSED_LEVEL = 0.02
MAX_CALIBRATION_SHIFT = 100.0

# Geometric ladder of |shift| values the suppression envelope is sampled on.
_LADDER_START = 1e-3
_LADDER_RATIO = 1.25


@dataclasses.dataclass(frozen=True)
class StarkComponent:
  label: str
  weight: float
  suppression_field: float  # V/cm

  def __post_init__(self):
    if not self.weight >= 0:
      raise ValueError(f"Component {self.label!r} has weight {self.weight!r}")
    if not self.suppression_field > 0:
      raise ValueError(f"Component {self.label!r} has suppression field "
                       f"{self.suppression_field!r}, expected > 0")


DEFAULT_COMPONENTS = (
    StarkComponent("|mJ|=5/2", 1 / 3, 0.1),
    StarkComponent("|mJ|=3/2", 1 / 3, 0.9),
    StarkComponent("|mJ|=1/2", 1 / 3, 0.9),
)


@dataclasses.dataclass(frozen=True)
class StarkModel:
  """Quadratic Stark model of the Rydberg level, split by |mJ|.

  `threshold` is the |shift| (gamma2) reached at each suppression field.  None
  means it is calibrated from the RDR amplitude when a curve is computed.
  """
  components: Tuple[StarkComponent, ...] = DEFAULT_COMPONENTS
  n_reference: int = 44
  threshold: Optional[float] = None

  def __post_init__(self):
    components = tuple(self.components)
    if not components:
      raise ValueError("StarkModel needs at least one component")
    labels = [c.label for c in components]
    if len(set(labels)) != len(labels):
      raise ValueError(f"Duplicate Stark component labels in {labels!r}")
    total = math.fsum(c.weight for c in components)
    if abs(total - 1) > 1e-12:
      raise ValueError(f"Stark component weights sum to {total!r}")
    if self.n_reference <= 0:
      raise ValueError(f"n_reference must be > 0, got {self.n_reference!r}")
    if self.threshold is not None and not self.threshold > 0:
      raise ValueError(f"threshold must be > 0, got {self.threshold!r}")
    object.__setattr__(self, "components", components)

  @property
  def alpha_scale_exponent(self) -> int:
    return ALPHA_SCALE_EXPONENT

  def calibrated(self, threshold: float) -> "StarkModel":
    return StarkModel(components=self.components,
                      n_reference=self.n_reference,
                      threshold=threshold)

  def component(self, label: Union[str, StarkComponent]) -> StarkComponent:
    if isinstance(label, StarkComponent):
      label = label.label
    for c in self.components:
      if c.label == label:
        return c
    raise UnknownComponentError(
        f"Unknown Stark component {label!r}; known: "
        f"{[c.label for c in self.components]!r}")

  def coefficient(self, label: Union[str, StarkComponent]) -> float:
    """C in gamma2 / (V/cm)**2 at n_reference."""
    if self.threshold is None:
      raise ValueError("StarkModel has no threshold; calibrate it first")
    return self.threshold / self.component(label).suppression_field**2

  def field_for_shift(self, label: Union[str, StarkComponent], shift: float,
                      n: int) -> float:
    """rms field at which |stark_shift| equals `shift`."""
    scale = self.coefficient(label) * (n / self.n_reference)**7
    return math.sqrt(abs(shift) / scale)


def stark_shift(e_rms: float, component: Union[str, StarkComponent],
                model: StarkModel, n: int) -> float:
  """Detuning shift of one component in units of gamma2 (negative)."""
  if not e_rms >= 0:
    raise ValueError(f"e_rms must be >= 0, got {e_rms!r}")
  if n <= 0:
    raise ValueError(f"n must be > 0, got {n!r}")
  return -model.coefficient(component) * (
      n / model.n_reference)**ALPHA_SCALE_EXPONENT * e_rms**2


def rdr_amplitude(diff: spectra.Spectrum) -> float:
  """Central value of a difference spectrum above its end-point baseline.

  Raises:
    AxisTooNarrowError: if the axis spans less than one gamma2.
  """
  axis = diff.axis
  if axis[-1] - axis[0] < 1:
    raise AxisTooNarrowError(
        f"Axis spans {axis[-1] - axis[0]!r}, need at least 1 for a baseline")
  if not axis[0] <= 0 <= axis[-1]:
    raise ValueError("Difference spectrum axis must contain zero detuning")
  values = np.asarray(diff.values).real
  baseline = 0.5 * (values[0] + values[-1])
  return float(diff.value_at(0.0).real - baseline)


class _AmplitudeCache:
  """RDR amplitude as a function of the Rydberg detuning shift."""

  def __init__(self, scheme, drives, decay, grid, delta21_axis, convention,
               threads):
    self._args = (scheme, decay, grid, delta21_axis)
    self._drives = drives
    self._convention = convention
    self._threads = threads
    self._cache: Dict[float, float] = {}
    off_drives = dataclasses.replace(drives, omega54=0.0)
    _, self._off = spectra.probe_scan(scheme, off_drives, decay, grid,
                                      delta21_axis, spectra.IM_SIGMA21,
                                      convention, threads)

  @property
  def off(self) -> spectra.Spectrum:
    return self._off

  def __call__(self, shift: float) -> float:
    shift = float(shift)
    if shift not in self._cache:
      scheme, decay, grid, delta21_axis = self._args
      drives = dataclasses.replace(
          self._drives, delta54=self._drives.delta54 + shift)
      _, on = spectra.probe_scan(scheme, drives, decay, grid, delta21_axis,
                                 spectra.IM_SIGMA21, self._convention,
                                 self._threads)
      self._cache[shift] = rdr_amplitude(
          spectra.difference_spectrum(on, self._off))
      logging.debug("RDR amplitude %g at shift %g", self._cache[shift], shift)
    return self._cache[shift]


class _SuppressionEnvelope:
  """Normalized amplitude versus shift with grid revivals removed.

  The value at a shift is the smallest clipped, normalized amplitude met at
  that shift or at any ladder shift of the same sign closer to zero.
  """

  def __init__(self, amplitude, start: float = _LADDER_START,
               ratio: float = _LADDER_RATIO):
    self._amplitude = amplitude
    self._start = start
    self._ratio = ratio
    self._reference = amplitude(0.0)
    if self._reference == 0:
      raise NoExtremumError("No dark resonance at zero field to normalize by")

  @property
  def reference(self) -> float:
    return self._reference

  def normalized(self, shift: float) -> float:
    return max(self._amplitude(shift) / self._reference, 0.0)

  def ladder(self, magnitude: float) -> Iterator[float]:
    """Ladder magnitudes strictly below `magnitude`."""
    s = self._start
    while s < magnitude:
      yield s
      s *= self._ratio

  def __call__(self, shift: float) -> float:
    if shift == 0:
      return 1.0
    value = min(1.0, self.normalized(shift))
    for s in self.ladder(abs(shift)):
      value = min(value, self.normalized(math.copysign(s, shift)))
    return value


def _suppression_shift(envelope: _SuppressionEnvelope,
                       level: float = SUPPRESSED_LEVEL,
                       max_shift: float = MAX_CALIBRATION_SHIFT) -> float:
  """|shift| at which the amplitude first falls to `level`.

  Stark shifts are negative, so the amplitude is sampled at -|shift|.
  """

  def excess(magnitude):
    return envelope.normalized(-magnitude) - level

  previous = 0.0
  for magnitude in itertools.chain(envelope.ladder(max_shift), [max_shift]):
    if excess(magnitude) <= 0:
      if previous == 0:
        return magnitude
      return float(
          scipy.optimize.brentq(excess, previous, magnitude, xtol=1e-12))
    previous = magnitude
  raise NoExtremumError(
      f"RDR amplitude stays above {level!r} up to a shift of {max_shift!r}")


def _calibrated(model: StarkModel,
                envelope: _SuppressionEnvelope) -> StarkModel:
  if model.threshold is not None:
    return model
  threshold = _suppression_shift(envelope)
  logging.info("Calibrated Stark threshold: |shift| = %g gamma2", threshold)
  return model.calibrated(threshold)


def switching_curve(scheme: core.LevelScheme,
                    drives: core.DriveConfig,
                    decay: core.DecayModel,
                    grid: doppler.VelocityGrid,
                    delta21_axis: Sequence[float],
                    model: StarkModel,
                    e_axis: Sequence[float],
                    n: Optional[int] = None,
                    convention: str = core.LITERAL,
                    threads: int = 1) -> spectra.Spectrum:
  """Normalized RDR amplitude versus rms field.

  Each component moves the Rydberg detuning by its own Stark shift; the
  component envelopes are combined with the model weights.  The curve is 1 at
  zero field and non-increasing.

  Args:
    scheme: Optical constants; `scheme.n_principal` is used when `n` is None.
    drives: Drives with the Rydberg coupling on.
    decay: Decay model.
    grid: Velocity grid.
    delta21_axis: Probe axis of the underlying difference spectra.
    model: Stark components; calibrated from the amplitude when its
      threshold is None.
    e_axis: Strictly increasing non-negative rms fields in V/cm.
    n: Principal quantum number.
    convention: `literal` or `standard`.
    threads: Worker threads per probe scan.

  Returns:
    `Spectrum` with axis `e_rms`.
  """
  n = scheme.n_principal if n is None else n
  e_axis = np.asarray(e_axis, dtype=np.float64)
  if e_axis.size and e_axis[0] < 0:
    raise ValueError("Fields must be >= 0")
  if np.any(np.diff(e_axis) <= 0):
    raise ValueError("Fields must be strictly increasing")
  amplitude = _AmplitudeCache(scheme, drives, decay, grid, delta21_axis,
                              convention, threads)
  envelope = _SuppressionEnvelope(amplitude)
  model = _calibrated(model, envelope)
  # Running minimum per component along the field axis.
  current = {c.label: 1.0 for c in model.components}
  values = []
  for e_rms in e_axis:
    for c in model.components:
      current[c.label] = min(current[c.label],
                             envelope(stark_shift(e_rms, c, model, n)))
    values.append(
        math.fsum(c.weight * current[c.label] for c in model.components))
  logging.info("Switching curve evaluated at %d fields", e_axis.size)
  metadata = {
      "n": n,
      "reference_amplitude": envelope.reference,
      "threshold": model.threshold,
      "components": [dataclasses.asdict(c) for c in model.components],
      "off": amplitude.off.metadata,
  }
  return spectra.Spectrum("e_rms", e_axis, np.asarray(values), metadata)


def half_suppression_field(scheme: core.LevelScheme,
                           drives: core.DriveConfig,
                           decay: core.DecayModel,
                           grid: doppler.VelocityGrid,
                           delta21_axis: Sequence[float],
                           component: StarkComponent,
                           n: int,
                           n_reference: int = 44,
                           threshold: Optional[float] = None,
                           max_shift: float = 50.0,
                           convention: str = core.LITERAL) -> float:
  """Field at which a single component halves the RDR amplitude.

  The search runs over fields whose shift stays below `max_shift`.
  """
  model = StarkModel(
      components=(dataclasses.replace(component, weight=1.0),),
      n_reference=n_reference,
      threshold=threshold)
  amplitude = _AmplitudeCache(scheme, drives, decay, grid, delta21_axis,
                              convention, 1)
  envelope = _SuppressionEnvelope(amplitude)
  model = _calibrated(model, envelope)

  def excess(e_rms):
    return envelope(stark_shift(e_rms, component.label, model, n)) - 0.5

  e_max = model.field_for_shift(component.label, max_shift, n)
  if excess(e_max) > 0:
    raise NoExtremumError(
        f"Amplitude stays above one half up to a shift of {max_shift!r}")
  return float(scipy.optimize.brentq(excess, 0.0, e_max, xtol=1e-12))
