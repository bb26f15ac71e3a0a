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
"""Liouvillian assembly, steady state and time propagation.

Density matrices are vectorized row-major, `vec(rho)[i * n + j] = rho[i, j]`,
so that `vec(A rho B) = kron(A, B.T) vec(rho)`.
"""

import dataclasses
import logging
from typing import Union

import numpy as np
import scipy.integrate
import scipy.linalg

from . import core
from .errors import NullSpaceDegenerateError
from .errors import StepSizeUnderflowError

NULL_SPACE_TOLERANCE = 1e-8


@dataclasses.dataclass(eq=False)
class DensityMatrix:
  """Hermitian, unit-trace state of an n-level chain."""
  entries: np.ndarray

  @property
  def dim(self) -> int:
    return self.entries.shape[0]

  @property
  def populations(self) -> np.ndarray:
    return self.entries.diagonal().real.copy()

  @property
  def sigma21(self) -> complex:
    """Probe coherence between levels 1 and 2.

    Signed so that Im(sigma21) > 0 is absorption and Re(sigma21) is the
    dispersion.
    """
    return complex(self.entries[0, 1])

  def trace(self) -> complex:
    return complex(np.trace(self.entries))

  def purity(self) -> float:
    return float(np.real(np.trace(self.entries @ self.entries)))

  def hermiticity_defect(self) -> float:
    return float(np.max(np.abs(self.entries - self.entries.conj().T)))

  def min_eigenvalue(self) -> float:
    hermitian = 0.5 * (self.entries + self.entries.conj().T)
    return float(np.linalg.eigvalsh(hermitian)[0])

  def check_physical(self, tol: float = 1e-10,
                     positivity_tol: float = 1e-8) -> None:
    """Raises `ValueError` unless Hermitian, unit trace and positive."""
    if self.hermiticity_defect() > tol:
      raise ValueError(
          f"Density matrix not Hermitian: defect {self.hermiticity_defect():g}")
    if abs(self.trace() - 1) > tol:
      raise ValueError(f"Density matrix trace is {self.trace()!r}")
    if self.min_eigenvalue() < -positivity_tol:
      raise ValueError(
          f"Density matrix has eigenvalue {self.min_eigenvalue():g}")

  def vec(self) -> np.ndarray:
    return self.entries.reshape(-1)

  @classmethod
  def from_vec(cls, vec: np.ndarray) -> "DensityMatrix":
    n = int(round(np.sqrt(vec.shape[0])))
    return cls(entries=np.asarray(vec, dtype=np.complex128).reshape(n, n))

  @classmethod
  def pure(cls, dim: int, level: int) -> "DensityMatrix":
    """Returns the projector on zero-based `level`."""
    entries = np.zeros((dim, dim), dtype=np.complex128)
    entries[level, level] = 1
    return cls(entries=entries)


@dataclasses.dataclass(eq=False)
class Liouvillian:
  """Generator of d vec(rho)/dt acting on row-major vectorized states."""
  matrix: np.ndarray
  trace_preserving: bool

  @property
  def dim(self) -> int:
    return int(round(np.sqrt(self.matrix.shape[0])))

  def trace_functional(self) -> np.ndarray:
    return np.eye(self.dim, dtype=np.complex128).reshape(-1)

  def trace_defect(self) -> float:
    """Largest change of the trace per unit time over basis states."""
    return float(np.max(np.abs(self.trace_functional() @ self.matrix)))

  def apply(self, rho: DensityMatrix) -> np.ndarray:
    """Returns d rho/dt as an (n, n) array."""
    return (self.matrix @ rho.vec()).reshape(self.dim, self.dim)

  def residual(self, rho: DensityMatrix) -> float:
    return float(np.max(np.abs(self.apply(rho))))


def _decay_superoperator(decay: core.DecayModel) -> np.ndarray:
  n = decay.dim
  gamma = np.asarray(decay.gamma)
  position = {level: i for i, level in enumerate(decay.levels)}
  dephasing = 0.5 * (gamma[:, np.newaxis] + gamma[np.newaxis, :])
  dephasing = dephasing + decay.transit_rate * (1 - np.eye(n))
  d = np.diag(-dephasing.reshape(-1)).astype(np.complex128)
  # Populations lose exactly gamma_i (the coherence formula gives that too).
  if decay.trace_preserving:
    for source, row in decay.branching.items():
      i = position[source]
      for dest, weight in row.items():
        j = position[dest]
        d[j * n + j, i * n + i] += gamma[i] * weight
  if decay.transit_rate > 0:
    ground = [position[g] for g in decay.ground_levels if g in position]
    for i in range(n):
      d[i * n + i, i * n + i] -= decay.transit_rate
      for g in ground:
        d[g * n + g, i * n + i] += decay.transit_rate / len(ground)
  return d


def build_liouvillian(hamiltonian: Union[core.HamiltonianMatrix, np.ndarray],
                      decay: core.DecayModel) -> Liouvillian:
  """Builds L with d vec(rho)/dt = L vec(rho).

  L encodes -i[H, rho] plus the decay model: population of level i is lost at
  gamma_i and, when trace preserving, redistributed by the branching ratios;
  the coherence between i and j decays at (gamma_i + gamma_j)/2 plus the
  transit rate.

  Args:
    hamiltonian: `HamiltonianMatrix` or `(n, n)` array with n equal to
      `decay.dim`.
    decay: Decay model on the same levels.

  Returns:
    The `Liouvillian`.
  """
  h = getattr(hamiltonian, "entries", hamiltonian)
  h = np.asarray(h, dtype=np.complex128)
  n = h.shape[0]
  if h.shape != (n, n) or n != decay.dim:
    raise ValueError(
        f"Hamiltonian shape {h.shape} does not match {decay.dim} decay levels")
  identity = np.eye(n)
  matrix = -1j * (np.kron(h, identity) - np.kron(identity, h.T))
  matrix += _decay_superoperator(decay)
  return Liouvillian(matrix=matrix, trace_preserving=decay.trace_preserving)


def null_space_dimension(liouvillian: Liouvillian,
                         tol: float = NULL_SPACE_TOLERANCE) -> int:
  singular_values = scipy.linalg.svdvals(liouvillian.matrix)
  return int(np.count_nonzero(singular_values < tol))


def _slowest_mode(liouvillian: Liouvillian) -> DensityMatrix:
  eigenvalues, eigenvectors = scipy.linalg.eig(liouvillian.matrix)
  index = int(np.argmax(eigenvalues.real))
  rho = DensityMatrix.from_vec(eigenvectors[:, index])
  rho = DensityMatrix(entries=rho.entries / rho.trace())
  return _hermitized(rho)


def _hermitized(rho: DensityMatrix) -> DensityMatrix:
  return DensityMatrix(entries=0.5 * (rho.entries + rho.entries.conj().T))


def steady_state(liouvillian: Liouvillian,
                 tol: float = NULL_SPACE_TOLERANCE) -> DensityMatrix:
  """Solves L rho = 0 with unit trace.

  One population equation is redundant in a trace-preserving model; it is
  replaced by the trace condition and the resulting linear system solved
  directly.

  For a lossy (non trace-preserving) model the slowest decaying mode is
  returned, normalised to unit trace.  This mode is experimental.

  Args:
    liouvillian: The generator.
    tol: Singular values below `tol` count towards the null space.

  Returns:
    The steady state.

  Raises:
    NullSpaceDegenerateError: if the null space has dimension > 1.
  """
  if not liouvillian.trace_preserving:
    return _slowest_mode(liouvillian)
  dimension = null_space_dimension(liouvillian, tol)
  if dimension > 1:
    raise NullSpaceDegenerateError(dimension, tol)
  a = liouvillian.matrix.copy()
  a[0, :] = liouvillian.trace_functional()
  b = np.zeros(a.shape[0], dtype=np.complex128)
  b[0] = 1
  rho = DensityMatrix.from_vec(scipy.linalg.solve(a, b))
  logging.debug("Steady state residual %g", liouvillian.residual(rho))
  return _hermitized(rho)


def propagate(rho0: DensityMatrix,
              liouvillian: Liouvillian,
              t: float,
              method: str = "expm",
              rtol: float = 1e-10,
              atol: float = 1e-12) -> DensityMatrix:
  """Propagates `rho0` for time `t` (units of 1/gamma2).

  Args:
    rho0: Initial state.
    liouvillian: The generator.
    t: Non-negative time.
    method: `expm` (matrix exponential) or `ode` (adaptive DOP853).
    rtol: Relative tolerance for `ode`.
    atol: Absolute tolerance for `ode`.

  Returns:
    rho(t).

  Raises:
    StepSizeUnderflowError: if the `ode` integrator fails.
  """
  if not t >= 0:
    raise ValueError(f"t must be >= 0, got {t!r}")
  if rho0.dim != liouvillian.dim:
    raise ValueError(
        f"State dimension {rho0.dim} does not match {liouvillian.dim}")
  if t == 0:
    return DensityMatrix(entries=rho0.entries.copy())
  if method == "expm":
    vec = scipy.linalg.expm(liouvillian.matrix * t) @ rho0.vec()
  elif method == "ode":
    matrix = liouvillian.matrix
    solution = scipy.integrate.solve_ivp(
        lambda _, y: matrix @ y, (0.0, t),
        rho0.vec().astype(np.complex128),
        method="DOP853",
        rtol=rtol,
        atol=atol)
    if not solution.success:
      raise StepSizeUnderflowError(solution.message)
    vec = solution.y[:, -1]
  else:
    raise ValueError(f"Unknown propagation method {method!r}")
  return DensityMatrix.from_vec(vec)
