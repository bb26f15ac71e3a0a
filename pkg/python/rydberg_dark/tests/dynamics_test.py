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
"""Tests for rydberg_dark.dynamics."""

import dataclasses

import numpy as np
import pytest
import rydberg_dark as rd
from rydberg_dark import core
from rydberg_dark import dynamics
from rydberg_dark import scenarios


def _two_level_decay():
  return rd.DecayModel(
      gamma=(0.0, 1.0),
      branching={2: {1: 1.0}},
      levels=(1, 2),
      ground_levels=(1,))


def _fig3_liouvillian(scheme, drives, decay, v, delta21):
  drives = dataclasses.replace(drives, delta21=delta21)
  return rd.build_liouvillian(
      rd.build_hamiltonian(scheme, drives, v), decay)


@pytest.mark.parametrize("omega54", [0.0, 0.8])
def test_liouvillian_preserves_trace(scheme, fig3_drives, decay, omega54):
  drives = dataclasses.replace(fig3_drives, omega54=omega54)
  liouvillian = _fig3_liouvillian(scheme, drives, decay, 3.5, -0.7)
  assert liouvillian.dim == 5
  assert liouvillian.trace_preserving
  assert liouvillian.trace_defect() < 1e-12


def test_transit_relaxation_preserves_trace(scheme, fig3_drives):
  decay = rd.DecayModel(transit_rate=0.05)
  liouvillian = _fig3_liouvillian(scheme, fig3_drives, decay, 1.0, 0.2)
  assert liouvillian.trace_defect() < 1e-12


@pytest.mark.parametrize("detuning", [0.0, 0.7, -2.0])
@pytest.mark.parametrize("omega", [0.1, 1.5])
def test_two_level_steady_state_matches_closed_form(detuning, omega):
  h = core.build_chain_hamiltonian([detuning, 0.0], [omega], core.STANDARD)
  rho = rd.steady_state(rd.build_liouvillian(h, _two_level_decay()))
  saturation = detuning**2 + 0.25 + omega**2 / 2
  excited = (omega**2 / 4) / saturation
  inversion = 1 - 2 * excited
  expected_sigma = 1j * (omega / 2) * inversion / (0.5 + 1j * detuning)
  assert rho.populations[1] == pytest.approx(excited, rel=1e-9)
  assert rho.sigma21 == pytest.approx(complex(expected_sigma), rel=1e-9)
  assert rho.sigma21.imag > 0


def test_steady_state_is_physical(scheme, fig3_drives, decay):
  liouvillian = _fig3_liouvillian(scheme, fig3_drives, decay, -4.0, 1.1)
  rho = rd.steady_state(liouvillian)
  rho.check_physical()
  assert liouvillian.residual(rho) < 1e-10
  assert 0 < rho.purity() <= 1 + 1e-12


def test_degenerate_null_space_is_reported(scheme, decay):
  liouvillian = _fig3_liouvillian(scheme, rd.DriveConfig(), decay, 0.0, 0.0)
  with pytest.raises(rd.NullSpaceDegenerateError) as excinfo:
    rd.steady_state(liouvillian)
  assert excinfo.value.dimension > 1


def test_transit_rate_lifts_degeneracy(scheme):
  decay = rd.DecayModel(transit_rate=0.01)
  liouvillian = _fig3_liouvillian(scheme, rd.DriveConfig(), decay, 0.0, 0.0)
  rho = rd.steady_state(liouvillian)
  np.testing.assert_allclose(rho.populations, [0.5, 0, 0.5, 0, 0], atol=1e-12)


def test_lossy_model_returns_unit_trace_state():
  decay = rd.DecayModel(
      gamma=(0.0, 1.0), branching={}, trace_preserving=False, levels=(1, 2),
      ground_levels=(1,))
  h = core.build_chain_hamiltonian([0.0, 0.0], [0.5], core.STANDARD)
  liouvillian = rd.build_liouvillian(h, decay)
  assert not liouvillian.trace_preserving
  assert liouvillian.trace_defect() > 0
  rho = rd.steady_state(liouvillian)
  assert rho.trace() == pytest.approx(1.0)
  assert rho.hermiticity_defect() < 1e-12


def test_hamiltonian_dimension_mismatch(decay):
  with pytest.raises(ValueError, match="does not match"):
    rd.build_liouvillian(np.zeros((4, 4)), decay)


def test_propagation_converges_to_steady_state(scheme, fig3_drives, decay):
  rng = np.random.default_rng(1234)
  rho0 = dynamics.DensityMatrix(
      entries=np.diag([0.5, 0, 0.5, 0, 0]).astype(np.complex128))
  for _ in range(20):
    v = rng.uniform(-10, 10)
    delta21 = rng.uniform(-3, 3)
    liouvillian = _fig3_liouvillian(scheme, fig3_drives, decay, v, delta21)
    expected = rd.steady_state(liouvillian)
    evolved = rd.propagate(rho0, liouvillian, 1e7)
    assert abs(evolved.sigma21 - expected.sigma21) < 1e-6, (v, delta21)
    np.testing.assert_allclose(evolved.entries, expected.entries, atol=1e-6)


def test_propagation_methods_agree(scheme, fig3_drives, decay):
  liouvillian = _fig3_liouvillian(scheme, fig3_drives, decay, 0.5, 0.0)
  rho0 = dynamics.DensityMatrix.pure(5, 0)
  by_expm = rd.propagate(rho0, liouvillian, 5.0, method="expm")
  by_ode = rd.propagate(rho0, liouvillian, 5.0, method="ode")
  np.testing.assert_allclose(by_ode.entries, by_expm.entries, atol=1e-8)
  assert by_expm.trace() == pytest.approx(1.0, abs=1e-12)


def test_propagate_zero_time_copies(scheme, fig3_drives, decay):
  liouvillian = _fig3_liouvillian(scheme, fig3_drives, decay, 0.0, 0.0)
  rho0 = dynamics.DensityMatrix.pure(5, 2)
  rho = rd.propagate(rho0, liouvillian, 0.0)
  np.testing.assert_array_equal(rho.entries, rho0.entries)
  assert rho.entries is not rho0.entries


@pytest.mark.parametrize("t,method,match", [
    (-1.0, "expm", "t must be"),
    (1.0, "rk4", "Unknown propagation method"),
])
def test_propagate_rejects_bad_arguments(scheme, fig3_drives, decay, t,
                                         method, match):
  liouvillian = _fig3_liouvillian(scheme, fig3_drives, decay, 0.0, 0.0)
  with pytest.raises(ValueError, match=match):
    rd.propagate(dynamics.DensityMatrix.pure(5, 0), liouvillian, t, method)


def test_check_physical_rejects_bad_trace():
  rho = dynamics.DensityMatrix(entries=np.diag([0.5, 0.2]).astype(complex))
  with pytest.raises(ValueError, match="trace"):
    rho.check_physical()


_SOUNDNESS_CASES = [
    ("fig3", {"omega54": 0.8}),
    ("fig3", {"omega54": 0.0}),
    ("fig5", {"delta54": 0.0}),
    ("fig5", {"delta54": 50.0}),
    ("fig4-switching", {}),
    ("fig4-switching", {"delta54": -0.3125}),
]


@pytest.mark.parametrize("name, overrides", _SOUNDNESS_CASES)
def test_steady_state_is_sound_across_presets(name, overrides):
  config = scenarios.load_scenario(name)
  drives = dataclasses.replace(config.drives, **overrides)
  for v in np.arange(-10.0, 10.5, 2.5):
    for delta21 in np.linspace(-3.0, 3.0, 7):
      h = rd.build_hamiltonian(
          config.scheme, dataclasses.replace(drives, delta21=delta21), v,
          config.convention)
      liouvillian = rd.build_liouvillian(h, config.decay)
      rho = rd.steady_state(liouvillian)
      rho.check_physical()
      assert liouvillian.residual(rho) < 1e-10, (v, delta21)


@pytest.mark.parametrize("v, delta21", [(0.0, 0.0), (-3.5, 0.4), (7.0, -1.2)])
def test_uncoupled_rydberg_level_decouples(scheme, fig3_drives, decay, v,
                                           delta21):
  drives = dataclasses.replace(fig3_drives, omega54=0.0, delta21=delta21)
  full = rd.steady_state(
      rd.build_liouvillian(rd.build_hamiltonian(scheme, drives, v), decay))
  diagonal, couplings = drives.chain(scheme, v)
  four_level = rd.steady_state(
      rd.build_liouvillian(
          core.build_chain_hamiltonian(diagonal[:4], couplings[:3]),
          decay.restricted((1, 2, 3, 4))))
  np.testing.assert_allclose(full.entries[:4, :4], four_level.entries,
                             atol=1e-10)
  np.testing.assert_allclose(full.entries[4, :], 0, atol=1e-10)
  np.testing.assert_allclose(full.entries[:, 4], 0, atol=1e-10)
