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
"""Tests for rydberg_dark.analysis."""

import dataclasses

import numpy as np
import pytest
import rydberg_dark as rd
from rydberg_dark import spectra

WIDE_GRID = rd.make_grid(-10.0, 10.0, 0.5)


def test_effective_two_photon():
  assert rd.effective_two_photon(20.0, 20.0, 2000.0) == pytest.approx(0.1)
  assert rd.effective_two_photon(20.0, 20.0, -2000.0) == pytest.approx(-0.1)
  with pytest.raises(rd.DivisionByZeroDetuningError):
    rd.effective_two_photon(1.0, 1.0, 0.0)


def test_balance_omega53():
  assert rd.balance_omega53(0.25, 0.16) == pytest.approx(0.1)
  assert rd.balance_omega53(0.25, 0.0) == 0
  with pytest.raises(rd.NegativeRatioError):
    rd.balance_omega53(0.25, -0.16)


@pytest.mark.parametrize("convention, omega53, shift", [
    ("standard", 0.1, -0.05),
    ("literal", 0.2, -0.2),
])
def test_adiabatic_eliminate(fig5_drives, convention, omega53, shift):
  eliminated = rd.adiabatic_eliminate(fig5_drives, convention)
  assert eliminated.omega53 == pytest.approx(omega53)
  assert eliminated.level3_shift == pytest.approx(shift)
  assert eliminated.level5_shift == pytest.approx(shift)
  assert eliminated.omega32 == fig5_drives.omega32
  assert eliminated.override_k_prime_ratio == 0.16
  assert eliminated.levels == (1, 2, 3, 5)


def test_adiabatic_eliminate_validity_gate(fig5_drives):
  near = dataclasses.replace(fig5_drives, delta43=50.0)
  with pytest.raises(rd.ValidityGateError):
    rd.adiabatic_eliminate(near)
  assert rd.adiabatic_eliminate(near, validity_gate=10.0).omega53 > 0


def test_light_shift_compensation():
  drives = rd.EffectiveDriveConfig(level3_shift=-0.05, level5_shift=-0.2)
  compensated = drives.light_shift_compensated()
  assert compensated.delta32 == -0.05
  assert compensated.delta54 == pytest.approx(0.15)


def _averaged_absorption(scheme, drives, decay, axis):
  _, averaged = rd.probe_scan(scheme, drives, decay, WIDE_GRID, axis)
  return averaged.values


def test_elimination_matches_full_model(scheme, fig5_drives, decay):
  axis = np.linspace(-1, 1, 41)
  full = _averaged_absorption(scheme, fig5_drives, decay, axis)
  reduced = _averaged_absorption(scheme, rd.adiabatic_eliminate(fig5_drives),
                                 decay, axis)
  np.testing.assert_allclose(reduced, full, atol=0.02 * full.max())


def test_elimination_improves_with_detuning(scheme, decay):
  axis = np.linspace(-1, 1, 21)
  errors = []
  for delta43 in (200.0, 2000.0):
    omega = 20 * np.sqrt(delta43 / 2000)
    drives = rd.DriveConfig(
        omega21=0.02,
        omega32=0.25,
        omega43=omega,
        omega54=omega,
        delta43=delta43,
        override_k_prime_ratio=0.16)
    full = _averaged_absorption(scheme, drives, decay, axis)
    reduced = _averaged_absorption(scheme, rd.adiabatic_eliminate(drives),
                                   decay, axis)
    errors.append(np.abs(full - reduced).max())
  assert errors[1] < errors[0]


def _balanced(omega53=0.1, ratio=0.16):
  return rd.EffectiveDriveConfig(
      omega21=0.02,
      omega32=0.25,
      omega53=omega53,
      override_k_prime_ratio=ratio)


def test_balanced_eigenvalue_is_doppler_free(scheme):
  residual = rd.doppler_free_residual(scheme, _balanced(), WIDE_GRID,
                                      "standard")
  assert residual < 1e-3
  doubled = rd.doppler_free_residual(scheme, _balanced(omega53=0.2), WIDE_GRID,
                                     "standard")
  assert doubled > 10 * max(residual, 1e-4)


def test_equal_wave_vectors(scheme):
  residual = rd.doppler_free_residual(
      scheme, _balanced(omega53=0.25, ratio=1.0), WIDE_GRID, "standard")
  assert residual < 1e-9


def test_residual_ignores_coupling_sign(scheme):
  positive = rd.doppler_free_residual(scheme, _balanced(omega53=0.2),
                                      WIDE_GRID, "standard")
  negative = rd.doppler_free_residual(scheme, _balanced(omega53=-0.2),
                                      WIDE_GRID, "standard")
  assert negative == pytest.approx(positive, abs=1e-12)


def test_single_velocity_has_no_residual(scheme):
  assert rd.doppler_free_residual(scheme, _balanced(omega53=0.2), [3.0]) == 0


def test_compensated_elimination_is_doppler_free(scheme, fig5_drives):
  eliminated = rd.adiabatic_eliminate(fig5_drives, "standard")
  compensated = eliminated.light_shift_compensated()
  assert rd.doppler_free_residual(scheme, compensated, WIDE_GRID,
                                  "standard") < 1e-9
  assert rd.doppler_free_residual(scheme, eliminated, WIDE_GRID,
                                  "standard") > 1e-4


def test_eigen_sweep(scheme):
  sweep = rd.eigen_sweep(scheme, _balanced(), WIDE_GRID, "standard")
  assert sweep.levels == (2, 3, 5)
  assert sweep.eigenvalues.shape == (len(WIDE_GRID), 3)
  assert sweep.overlaps.shape == (len(WIDE_GRID) - 1,)
  assert np.all(sweep.overlaps >= 0.5)
  np.testing.assert_allclose(sweep.tracked_eigenvalues, 0.0, atol=1e-9)
  assert np.all(np.diff(sweep.eigenvalues, axis=1) >= 0)


def test_eigen_sweep_rejects_bad_arguments(scheme):
  with pytest.raises(ValueError, match="Reference level"):
    rd.eigen_sweep(scheme, _balanced(), [0.0], levels=(2, 5))
  with pytest.raises(ValueError, match="at least one"):
    rd.eigen_sweep(scheme, _balanced(), [])


def test_asymmetry_metric_on_synthetic_dip():
  axis = np.linspace(-2, 2, 81)
  dip = rd.Spectrum("delta21", axis, 1 - 0.5 / (1 + ((axis + 0.5) / 0.05)**2))
  assert rd.asymmetry_metric(dip) == pytest.approx(0.5)
  with pytest.raises(rd.NoExtremumError):
    rd.asymmetry_metric(rd.Spectrum("delta21", axis, np.ones_like(axis)))
  with pytest.raises(ValueError, match="symmetric"):
    rd.asymmetry_metric(rd.Spectrum("delta21", axis + 1, np.ones_like(axis)))


def test_uneven_two_photon_step_moves_the_resonance(scheme, decay):
  grid = rd.make_grid(-10.0, 10.0, 1.0)
  axis = np.linspace(-1, 1, 81)
  metrics = []
  for omega43, omega54 in ((28.28, 14.14), (14.14, 28.28)):
    drives = rd.DriveConfig(
        omega21=0.02,
        omega32=0.25,
        omega43=omega43,
        omega54=omega54,
        delta43=2000.0,
        override_k_prime_ratio=0.16)
    _, averaged = rd.probe_scan(scheme, rd.adiabatic_eliminate(drives), decay,
                                grid, axis)
    metrics.append(rd.asymmetry_metric(averaged))
  assert metrics[0] > metrics[1]


def test_rydberg_resonance_restores_absorption(scheme, fig5_drives, decay):
  eliminated = rd.adiabatic_eliminate(fig5_drives)
  resonant, detuned = spectra.rydberg_shift_scan(scheme, eliminated, decay,
                                                 WIDE_GRID, [-0.2],
                                                 [0.0, 50.0])
  assert resonant.values[0] >= 10 * detuned.values[0]
  assert detuned.values[0] > 0
