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
"""Dressed-state analysis of the velocity-dependent Hamiltonian.

Covers the far-detuned reduction of the two-photon Rydberg step to an effective
3 -> 5 coupling, the Rabi-frequency balance that makes one dressed eigenvalue
independent of velocity, and the lineshape asymmetry of the dark resonance.
"""

import dataclasses
import logging
import math
from typing import ClassVar, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from . import core
from . import doppler
from . import spectra
from .errors import DivisionByZeroDetuningError
from .errors import NegativeRatioError
from .errors import NoExtremumError
from .errors import TrackingLostError
from .errors import ValidityGateError

DEFAULT_VALIDITY_GATE = 100.0

# Overlap below which a tracking step is subdivided.
_CONTINUATION_OVERLAP = 0.9
_MAX_BISECTIONS = 30
_TRACKING_OVERLAP = 0.5


def effective_two_photon(omega43: float, omega54: float,
                         delta43: float) -> float:
  """Effective 3 -> 5 Rabi frequency Omega43 Omega54 / (2 Delta43)."""
  if delta43 == 0:
    raise DivisionByZeroDetuningError(
        "The intermediate detuning delta43 must be non-zero")
  return omega43 * omega54 / (2 * delta43)


def balance_omega53(omega32: float, k_prime_ratio: float) -> float:
  """Omega53 that makes one dressed eigenvalue velocity independent.

  Raises:
    NegativeRatioError: for k'/k1 < 0, typically the signed physical ratio of
      counter-propagating beams passed where its balanced value is needed.
  """
  if k_prime_ratio < 0:
    raise NegativeRatioError(
        f"Balance needs k'/k1 >= 0, got {k_prime_ratio!r}; pass "
        "override_k_prime_ratio for the beam geometry")
  return omega32 * math.sqrt(k_prime_ratio)


@dataclasses.dataclass(frozen=True)
class EffectiveDriveConfig:
  """Four-level drive (levels 1, 2, 3, 5) after eliminating level 4.

  `level3_shift` and `level5_shift` are the ac-Stark shifts induced by the far
  detuned 3 -> 4 and 4 -> 5 fields, in the same units as the detunings.
  """
  delta21: float = 0.0
  delta32: float = 0.0
  delta54: float = 0.0
  omega21: float = 0.0
  omega32: float = 0.0
  omega53: float = 0.0
  level3_shift: float = 0.0
  level5_shift: float = 0.0
  override_k_prime_ratio: Optional[float] = None

  levels: ClassVar[Tuple[int, ...]] = (1, 2, 3, 5)

  def __post_init__(self):
    for field in dataclasses.fields(self):
      value = getattr(self, field.name)
      if value is None:
        continue
      value = float(value)
      if not math.isfinite(value):
        raise ValueError(f"{field.name} must be finite, got {value!r}")
      object.__setattr__(self, field.name, value)

  def k_prime_ratio(self, scheme: core.LevelScheme) -> float:
    if self.override_k_prime_ratio is not None:
      return self.override_k_prime_ratio
    return scheme.k_prime_ratio

  def chain(self, scheme: core.LevelScheme,
            v: float) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    ratio = self.k_prime_ratio(scheme)
    diagonal = (
        self.delta21,
        self.delta32 - v,
        self.level3_shift,
        self.delta54 + self.level5_shift + ratio * v,
    )
    return diagonal, (self.omega21, self.omega32, self.omega53)

  def light_shift_compensated(self) -> "EffectiveDriveConfig":
    """Retunes delta32 and delta54 onto the light-shifted level 3."""
    return dataclasses.replace(
        self,
        delta32=self.level3_shift,
        delta54=self.level3_shift - self.level5_shift)


def adiabatic_eliminate(
    drives: core.DriveConfig,
    convention: str = core.LITERAL,
    validity_gate: float = DEFAULT_VALIDITY_GATE) -> EffectiveDriveConfig:
  """Eliminates the far-detuned intermediate level 4.

  Second-order perturbation theory on the chosen matrix convention: the 3 -> 5
  coupling and the light shifts of levels 3 and 5 are computed in Hamiltonian
  units and converted back to Rabi-frequency and detuning units.  In the
  `standard` convention this gives Omega53 = Omega43 Omega54 / (2 Delta43) and
  a level-3 shift of -Omega43**2 / (4 Delta43).

  Args:
    drives: Five-level drive.
    convention: `literal` or `standard`.
    validity_gate: Smallest |delta43| accepted.

  Returns:
    The `EffectiveDriveConfig`.

  Raises:
    ValidityGateError: if |delta43| < validity_gate.
  """
  if abs(drives.delta43) < validity_gate:
    raise ValidityGateError(
        f"|delta43| = {abs(drives.delta43)!r} is below the elimination gate "
        f"{validity_gate!r}")
  if drives.delta43 == 0:
    raise DivisionByZeroDetuningError(
        "The intermediate detuning delta43 must be non-zero")
  scale_diagonal, scale_coupling = core.convention_scales(convention)
  h34 = scale_coupling * drives.omega43
  h45 = scale_coupling * drives.omega54
  energy4 = scale_diagonal * drives.delta43
  return EffectiveDriveConfig(
      delta21=drives.delta21,
      delta32=drives.delta32,
      delta54=drives.delta54,
      omega21=drives.omega21,
      omega32=drives.omega32,
      omega53=h34 * h45 / energy4 / scale_coupling,
      level3_shift=-h34**2 / energy4 / scale_diagonal,
      level5_shift=-h45**2 / energy4 / scale_diagonal,
      override_k_prime_ratio=drives.override_k_prime_ratio)


@dataclasses.dataclass(frozen=True, eq=False)
class EigenSweep:
  """Eigenvalues along a velocity grid with one tracked dressed state.

  `overlaps[i]` is the smallest eigenvector overlap met while continuing the
  tracked state from `velocities[i]` to `velocities[i + 1]`.
  """
  velocities: np.ndarray
  eigenvalues: np.ndarray
  tracked_index: np.ndarray
  overlaps: np.ndarray
  levels: Tuple[int, ...]

  @property
  def tracked_eigenvalues(self) -> np.ndarray:
    return self.eigenvalues[np.arange(len(self.velocities)),
                            self.tracked_index]


def _block(scheme, drives, v, convention, index) -> np.ndarray:
  return core.build_hamiltonian(scheme, drives, v, convention).block(index)


def _continue(scheme, drives, convention, index, vector, v_from, v_to,
              depth=0) -> Tuple[np.ndarray, np.ndarray, int, float]:
  """Follows `vector` from `v_from` to `v_to`, bisecting where it rotates."""
  eigenvalues, eigenvectors = scipy.linalg.eigh(
      _block(scheme, drives, v_to, convention, index))
  overlap = np.abs(eigenvectors.conj().T @ vector)
  best = int(np.argmax(overlap))
  if overlap[best] >= _CONTINUATION_OVERLAP or depth >= _MAX_BISECTIONS:
    if overlap[best] < _TRACKING_OVERLAP:
      raise TrackingLostError(
          f"Eigenvector overlap {overlap[best]:.3f} between v={v_from!r} and "
          f"v={v_to!r}")
    return eigenvalues, eigenvectors[:, best], best, float(overlap[best])
  middle = 0.5 * (v_from + v_to)
  _, vector, _, first = _continue(scheme, drives, convention, index, vector,
                                  v_from, middle, depth + 1)
  eigenvalues, vector, best, second = _continue(scheme, drives, convention,
                                                index, vector, middle, v_to,
                                                depth + 1)
  return eigenvalues, vector, best, min(first, second)


def eigen_sweep(scheme: core.LevelScheme,
                drives,
                velocities: Union[doppler.VelocityGrid, Sequence[float]],
                convention: str = core.LITERAL,
                levels: Optional[Sequence[int]] = None,
                reference_level: int = 3) -> EigenSweep:
  """Diagonalizes the decay-free Hamiltonian along `velocities`.

  The tracked state is seeded at the velocity closest to zero with the
  eigenvalue nearest the diagonal entry of `reference_level` (the two-photon
  resonance), then followed in both directions by eigenvector continuity.

  Args:
    scheme: Optical constants.
    drives: `DriveConfig` or `EffectiveDriveConfig`.
    velocities: Grid or strictly increasing velocities.
    convention: `literal` or `standard`.
    levels: Level labels spanning the analysed block; defaults to every level
      except the probe ground level 1, which decouples as the probe vanishes.
    reference_level: Level whose diagonal entry seeds the tracking.

  Returns:
    The `EigenSweep`.

  Raises:
    TrackingLostError: if continuity cannot be established.
  """
  velocities = np.asarray(getattr(velocities, "points", velocities),
                          dtype=np.float64)
  if velocities.ndim != 1 or velocities.size == 0:
    raise ValueError("Need at least one velocity")
  all_levels = tuple(drives.levels)
  levels = tuple(levels) if levels is not None else all_levels[1:]
  if reference_level not in levels:
    raise ValueError(f"Reference level {reference_level} not in {levels}")
  index = [all_levels.index(level) for level in levels]
  count = len(velocities)
  eigenvalues = np.empty((count, len(levels)))
  tracked = np.empty(count, dtype=np.int64)
  overlaps = np.ones(max(count - 1, 0))

  seed = int(np.argmin(np.abs(velocities)))
  block = _block(scheme, drives, velocities[seed], convention, index)
  values, vectors = scipy.linalg.eigh(block)
  reference = block[levels.index(reference_level),
                    levels.index(reference_level)]
  tracked[seed] = int(np.argmin(np.abs(values - reference)))
  eigenvalues[seed] = values
  seed_vector = vectors[:, tracked[seed]]

  for step in (1, -1):
    vector = seed_vector
    i = seed
    while 0 <= i + step < count:
      values, vector, best, overlap = _continue(scheme, drives, convention,
                                                index, vector, velocities[i],
                                                velocities[i + step])
      i += step
      eigenvalues[i] = values
      tracked[i] = best
      overlaps[min(i, i - step)] = overlap
  logging.debug("Eigen sweep over %d velocities, minimum overlap %g", count,
                overlaps.min() if overlaps.size else 1.0)
  return EigenSweep(
      velocities=velocities,
      eigenvalues=eigenvalues,
      tracked_index=tracked,
      overlaps=overlaps,
      levels=levels)


def doppler_free_residual(scheme: core.LevelScheme,
                          drives,
                          velocities: Union[doppler.VelocityGrid,
                                            Sequence[float]],
                          convention: str = core.LITERAL,
                          levels: Optional[Sequence[int]] = None) -> float:
  """Spread (max - min) of the tracked dressed eigenvalue over velocity."""
  sweep = eigen_sweep(scheme, drives, velocities, convention, levels)
  return float(np.ptp(sweep.tracked_eigenvalues))


def asymmetry_metric(spectrum: spectra.Spectrum) -> float:
  """Distance from zero detuning of the strongest feature in `spectrum`.

  The feature is the point deviating most from the mean of the two end points.

  Raises:
    NoExtremumError: if the spectrum is flat.
  """
  axis = spectrum.axis
  if abs(axis[0] + axis[-1]) > 1e-9 * max(1.0, axis[-1] - axis[0]):
    raise ValueError(
        f"Axis [{axis[0]!r}, {axis[-1]!r}] is not symmetric about zero")
  values = np.asarray(spectrum.values).real
  deviation = np.abs(values - 0.5 * (values[0] + values[-1]))
  if not np.any(deviation > 0):
    raise NoExtremumError("Spectrum has no feature above its baseline")
  return float(abs(axis[int(np.argmax(deviation))]))
