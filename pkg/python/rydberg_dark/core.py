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
"""Level scheme, drive parameters and the velocity-dependent Hamiltonian.

Units: the intermediate-state decay rate gamma2 is the frequency unit and
velocities are measured in gamma2/k1, so that the Doppler shift k1*v is
numerically equal to `v`.

The five levels are, in order:

  1. 5s 2S1/2 (F=1)   probe ground state
  2. 5p 2P3/2 (F'=2)  shared excited state of the Lambda system
  3. 5s 2S1/2 (F=2)   coupling ground state
  4. 5p 2P3/2 (F'=3)  intermediate state of the two-photon Rydberg step
  5. nd 2D5/2         Rydberg state

Two matrix conventions are supported:

- `literal`: the printed matrix with its global factor 1/2, so both the
  detunings and the Rabi frequencies are halved.
- `standard`: detunings undivided on the diagonal, Rabi frequencies halved
  off the diagonal.
"""

import dataclasses
import math
from typing import ClassVar, Optional, Sequence, Tuple

import numpy as np

LITERAL = "literal"
STANDARD = "standard"
CONVENTIONS = (LITERAL, STANDARD)

# Natural linewidth of the Rb D2 line, gamma2/(2*pi), in Hz.
GAMMA2_HZ = 6.0666e6

DEFAULT_LEVEL_LABELS = (
    "5s1/2(F=1)",
    "5p3/2(F'=2)",
    "5s1/2(F=2)",
    "5p3/2(F'=3)",
    "nd5/2",
)


def convention_scales(convention: str) -> Tuple[float, float]:
  """Returns the (diagonal, off-diagonal) prefactors of `convention`."""
  if convention == LITERAL:
    return 0.5, 0.5
  if convention == STANDARD:
    return 1.0, 0.5
  raise ValueError(f"Unknown convention {convention!r}, expected one of "
                   f"{CONVENTIONS!r}")


def _require_finite(name: str, value: float) -> float:
  value = float(value)
  if not math.isfinite(value):
    raise ValueError(f"{name} must be finite, got {value!r}")
  return value


@dataclasses.dataclass(frozen=True)
class LevelScheme:
  """Static optical constants of the N-type scheme.

  Wavelengths are in nm and wavevectors in rad/nm (k = 2*pi/lambda).  Only the
  signed ratio k'/k1 = 1 - lambda1/lambda2 enters the dynamics.
  """
  lambda1: float = 780.24
  lambda2: float = 480.0
  n_principal: int = 44
  level_labels: Tuple[str, ...] = DEFAULT_LEVEL_LABELS
  k1: float = dataclasses.field(init=False)
  k2: float = dataclasses.field(init=False)
  k_prime: float = dataclasses.field(init=False)

  def __post_init__(self):
    lambda1 = _require_finite("lambda1", self.lambda1)
    lambda2 = _require_finite("lambda2", self.lambda2)
    if lambda1 <= 0 or lambda2 <= 0:
      raise ValueError(
          f"Wavelengths must be positive, got {lambda1!r} and {lambda2!r}")
    if len(self.level_labels) != 5:
      raise ValueError(
          f"Expected 5 level labels, got {len(self.level_labels)}")
    if int(self.n_principal) < 1:
      raise ValueError(f"n_principal must be >= 1, got {self.n_principal!r}")
    k1 = 2 * math.pi / lambda1
    k2 = 2 * math.pi / lambda2
    object.__setattr__(self, "level_labels", tuple(self.level_labels))
    object.__setattr__(self, "k1", k1)
    object.__setattr__(self, "k2", k2)
    object.__setattr__(self, "k_prime", k1 - k2)

  @property
  def k_prime_ratio(self) -> float:
    """Signed ratio k'/k1; negative for the 780/480 nm pair."""
    return self.k_prime / self.k1


@dataclasses.dataclass(frozen=True)
class DriveConfig:
  """Detunings and Rabi frequencies of the four fields, in units of gamma2.

  `override_k_prime_ratio`, when set, replaces the physical k'/k1 of the
  `LevelScheme` on the Rydberg diagonal.
  Rabi frequencies may be negative; only relative phases are physical.
  """
  delta21: float = 0.0
  delta32: float = 0.0
  delta43: float = 0.0
  delta54: float = 0.0
  omega21: float = 0.0
  omega32: float = 0.0
  omega43: float = 0.0
  omega54: float = 0.0
  override_k_prime_ratio: Optional[float] = None

  levels: ClassVar[Tuple[int, ...]] = (1, 2, 3, 4, 5)

  def __post_init__(self):
    for field in dataclasses.fields(self):
      value = getattr(self, field.name)
      if field.name == "override_k_prime_ratio" and value is None:
        continue
      object.__setattr__(self, field.name, _require_finite(field.name, value))

  def k_prime_ratio(self, scheme: LevelScheme) -> float:
    if self.override_k_prime_ratio is not None:
      return self.override_k_prime_ratio
    return scheme.k_prime_ratio

  def chain(self, scheme: LevelScheme,
            v: float) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """Returns the bracketed diagonal and chain couplings at velocity `v`."""
    ratio = self.k_prime_ratio(scheme)
    diagonal = (
        self.delta21,
        self.delta32 - v,
        0.0,
        self.delta43 + v,
        self.delta54 + ratio * v,
    )
    couplings = (self.omega21, self.omega32, self.omega43, self.omega54)
    return diagonal, couplings


@dataclasses.dataclass(eq=False)
class HamiltonianMatrix:
  """Chain Hamiltonian in units of gamma2 at a single velocity class."""
  entries: np.ndarray
  velocity: float
  convention: str

  @property
  def dim(self) -> int:
    return self.entries.shape[0]

  def eigenvalues(self) -> np.ndarray:
    return np.linalg.eigvalsh(self.entries)

  def block(self, levels: Sequence[int]) -> np.ndarray:
    """Principal sub-matrix on zero-based `levels`."""
    index = np.asarray(levels)
    return self.entries[np.ix_(index, index)]


def build_chain_hamiltonian(diagonal: Sequence[float],
                            couplings: Sequence[float],
                            convention: str = LITERAL) -> np.ndarray:
  """Builds a real symmetric nearest-neighbour chain Hamiltonian.

  Args:
    diagonal: Bracketed diagonal entries (detunings plus Doppler terms).
    couplings: Rabi frequencies between consecutive levels; one fewer than
      `diagonal`.
    convention: `literal` or `standard`.

  Returns:
    Real `(n, n)` array.
  """
  scale_diagonal, scale_coupling = convention_scales(convention)
  diagonal = np.asarray(diagonal, dtype=np.float64)
  couplings = np.asarray(couplings, dtype=np.float64)
  if couplings.shape != (diagonal.shape[0] - 1,):
    raise ValueError(f"Expected {diagonal.shape[0] - 1} couplings for "
                     f"{diagonal.shape[0]} levels, got {couplings.shape[0]}")
  if not (np.all(np.isfinite(diagonal)) and np.all(np.isfinite(couplings))):
    raise ValueError("Hamiltonian inputs must be finite")
  entries = np.diag(scale_diagonal * diagonal)
  off = scale_coupling * couplings
  entries += np.diag(off, 1) + np.diag(off, -1)
  return entries


def build_hamiltonian(scheme: LevelScheme,
                      drives,
                      v: float,
                      convention: str = LITERAL) -> HamiltonianMatrix:
  """Assembles the Hamiltonian for velocity class `v`.

  Args:
    scheme: Optical constants.
    drives: `DriveConfig`, or any drive object exposing `chain(scheme, v)`
      (for example the adiabatically eliminated four-level drive).
    v: Velocity in units of gamma2/k1.
    convention: `literal` or `standard`.

  Returns:
    The `HamiltonianMatrix`.
  """
  v = _require_finite("v", v)
  convention_scales(convention)
  diagonal, couplings = drives.chain(scheme, v)
  entries = build_chain_hamiltonian(diagonal, couplings, convention)
  return HamiltonianMatrix(entries=entries, velocity=v, convention=convention)


DEFAULT_GAMMA = (0.0, 1.0, 0.0, 1.0, 0.01)
DEFAULT_BRANCHING = {
    2: {1: 0.5, 3: 0.5},
    4: {3: 1.0},
    5: {3: 1.0},
}


@dataclasses.dataclass(frozen=True)
class DecayModel:
  """Population decay, branching and transit relaxation in units of gamma2.

  Levels are labelled 1..5 as in the module docstring.  `gamma[i]` is the
  population decay rate of `levels[i]`; the coherence between levels i and j
  decays at (gamma_i + gamma_j)/2.  `branching[i]` distributes the population
  lost by level i over destination levels.

  `transit_rate` relaxes every population towards an equal mixture of the
  `ground_levels` and adds the same rate as dephasing to every coherence.

  With `trace_preserving=False` decay is pure loss (no branching); the steady
  state is then the slowest decaying mode renormalised to unit trace.
  """
  gamma: Tuple[float, ...] = DEFAULT_GAMMA
  branching: dict = dataclasses.field(
      default_factory=lambda: {k: dict(v) for k, v in DEFAULT_BRANCHING.items()})
  transit_rate: float = 0.0
  trace_preserving: bool = True
  levels: Tuple[int, ...] = (1, 2, 3, 4, 5)
  ground_levels: Tuple[int, ...] = (1, 3)

  def __post_init__(self):
    gamma = tuple(_require_finite("gamma", g) for g in self.gamma)
    levels = tuple(int(x) for x in self.levels)
    if len(gamma) != len(levels):
      raise ValueError(
          f"Expected {len(levels)} decay rates, got {len(gamma)}")
    if any(g < 0 for g in gamma):
      raise ValueError(f"Decay rates must be >= 0, got {gamma!r}")
    transit_rate = _require_finite("transit_rate", self.transit_rate)
    if transit_rate < 0:
      raise ValueError(f"transit_rate must be >= 0, got {transit_rate!r}")
    branching = {
        int(source): {int(dest): float(w) for dest, w in row.items()}
        for source, row in self.branching.items()
    }
    for source, row in branching.items():
      if source not in levels:
        raise ValueError(f"Branching source level {source} not in {levels}")
      for dest, weight in row.items():
        if dest not in levels:
          raise ValueError(
              f"Branching destination {dest} of level {source} not in "
              f"{levels}")
        if weight < 0:
          raise ValueError(f"Negative branching weight {source}->{dest}")
      if abs(sum(row.values()) - 1.0) > 1e-12:
        raise ValueError(
            f"Branching row of level {source} sums to {sum(row.values())!r}")
      if row.get(source, 0.0) == 1.0:
        raise ValueError(f"Level {source} decays only to itself (no-op decay)")
    if self.trace_preserving:
      for level, g in zip(levels, gamma):
        if g > 0 and level not in branching:
          raise ValueError(
              f"Level {level} decays at rate {g!r} but has no branching row")
    ground_levels = tuple(int(x) for x in self.ground_levels)
    if transit_rate > 0 and not any(g in levels for g in ground_levels):
      raise ValueError("transit_rate > 0 requires a ground level in the model")
    object.__setattr__(self, "gamma", gamma)
    object.__setattr__(self, "levels", levels)
    object.__setattr__(self, "branching", branching)
    object.__setattr__(self, "transit_rate", transit_rate)
    object.__setattr__(self, "ground_levels", ground_levels)

  @property
  def dim(self) -> int:
    return len(self.levels)

  def rate(self, level: int) -> float:
    return self.gamma[self.levels.index(level)]

  def restricted(self, levels: Sequence[int]) -> "DecayModel":
    """Returns the model on a subset of `levels`.

    Destinations outside the subset are dropped and the remaining branching
    weights renormalised.
    """
    levels = tuple(int(x) for x in levels)
    missing = [x for x in levels if x not in self.levels]
    if missing:
      raise ValueError(f"Levels {missing} are not part of {self.levels}")
    gamma = tuple(self.rate(x) for x in levels)
    branching = {}
    for source, row in self.branching.items():
      if source not in levels:
        continue
      kept = {d: w for d, w in row.items() if d in levels and w > 0}
      total = sum(kept.values())
      if total <= 0:
        if self.trace_preserving and self.rate(source) > 0:
          raise ValueError(
              f"Level {source} has no decay destination within {levels}")
        continue
      branching[source] = {d: w / total for d, w in kept.items()}
    return dataclasses.replace(
        self, gamma=gamma, branching=branching, levels=levels)
