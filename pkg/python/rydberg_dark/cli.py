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
"""Runs scenarios and writes their spectra.

  rydberg_dark list
  rydberg_dark run fig3 --output_dir=/tmp/out --threads=4
  rydberg_dark run my.gin --gin_bindings='DriveConfig.omega54 = 0.4'

Exit status is 0 on success, 1 for configuration errors and 2 for solver
errors.
"""

import dataclasses
import logging
import os
from typing import List, Optional, Sequence

from absl import app
from absl import flags
import numpy as np

from . import __version__
from . import analysis
from . import csv_io
from . import scenarios
from . import spectra
from . import stark
from . import transit
from .errors import RydbergDarkError

OUTPUT_DIR_ENV = "RYDBERG_DARK_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "rydberg_dark_output"
# Per-velocity curves are conventionally plotted magnified.
PER_VELOCITY_DISPLAY_FACTOR = 5

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_SOLVER_ERROR = 2

FLAGS = flags.FLAGS
flags.DEFINE_string(
    "output_dir", None,
    "Directory for CSV output; defaults to the scenario output_dir, then "
    f"${OUTPUT_DIR_ENV}, then ./{DEFAULT_OUTPUT_DIR}.")
flags.DEFINE_integer("threads", 1, "Worker threads per probe scan.",
                     lower_bound=1)
flags.DEFINE_enum("convention", None, ["literal", "standard"],
                  "Overrides the matrix convention of the scenario.")
flags.DEFINE_multi_string("gin_bindings", [],
                          "Extra gin bindings applied after the scenario.")
flags.DEFINE_multi_string(
    "scenario_path", [],
    "Extra scenario directories, searched before "
    f"${scenarios.SCENARIO_PATH_ENV}.")


def _base_metadata(config: scenarios.ScenarioConfig) -> dict:
  return {
      "scenario": config.name,
      "kind": config.kind,
      "convention": config.convention,
      "version": __version__,
  }


def _per_velocity_columns(per_velocity: Sequence[spectra.Spectrum]) -> dict:
  columns = {"delta21": per_velocity[0].axis}
  for s in per_velocity:
    columns[f"v={csv_io.NUMBER_FORMAT % s.metadata['velocity']}"] = s.values
  return columns


def _run_difference(config, output_dir, threads) -> List[str]:
  result = spectra.rydberg_difference(config.scheme, config.effective_drives(),
                                      config.decay, config.grid.build(),
                                      config.axis.values(), config.convention,
                                      threads)
  meta = _base_metadata(config)
  prefix = os.path.join(output_dir, config.name)
  paths = []
  for panel, averaged, per_velocity in (
      ("off", result.off, result.per_velocity_off),
      ("on", result.on, result.per_velocity_on)):
    paths.append(
        csv_io.write_spectrum(f"{prefix}_{panel}_averaged.csv", averaged,
                              "im_sigma21", dict(meta, panel=panel)))
    paths.append(
        csv_io.write_columns(
            f"{prefix}_{panel}_per_velocity.csv",
            _per_velocity_columns(per_velocity),
            dict(meta, panel=panel,
                 display_factor=PER_VELOCITY_DISPLAY_FACTOR)))
  paths.append(
      csv_io.write_spectrum(
          f"{prefix}_difference.csv", result.difference, "delta_t",
          dict(meta, panel="difference",
               rdr_amplitude=stark.rdr_amplitude(result.difference))))
  return paths


def _run_shift(config, output_dir, threads) -> List[str]:
  results = spectra.rydberg_shift_scan(config.scheme, config.effective_drives(),
                                       config.decay, config.grid.build(),
                                       config.axis.values(),
                                       config.delta54_values,
                                       config.convention, threads)
  meta = _base_metadata(config)
  paths = []
  for delta54, averaged in zip(config.delta54_values, results):
    path = os.path.join(output_dir, f"{config.name}_delta54_{delta54:g}.csv")
    paths.append(
        csv_io.write_spectrum(path, averaged, "im_sigma21",
                              dict(meta, delta54=delta54)))
  return paths


def _run_switching(config, output_dir, threads) -> List[str]:
  curve = stark.switching_curve(config.scheme, config.effective_drives(),
                                config.decay, config.grid.build(),
                                config.axis.values(), config.stark_model,
                                config.e_axis.values(),
                                convention=config.convention,
                                threads=threads)
  meta = dict(
      _base_metadata(config),
      n=curve.metadata["n"],
      threshold=curve.metadata["threshold"])
  path = os.path.join(output_dir, f"{config.name}_switching.csv")
  return [csv_io.write_spectrum(path, curve, "rdr_amplitude", meta)]


def _run_doppler_free(config, output_dir, threads) -> List[str]:
  del threads  # unused
  sweep = analysis.eigen_sweep(config.scheme, config.effective_drives(),
                               config.grid.build(), config.convention)
  residual = float(np.ptp(sweep.tracked_eigenvalues))
  logging.info("Doppler-free residual %g", residual)
  columns = {"v": sweep.velocities, "tracked": sweep.tracked_eigenvalues}
  for i in range(sweep.eigenvalues.shape[1]):
    columns[f"eigenvalue_{i}"] = sweep.eigenvalues[:, i]
  meta = dict(
      _base_metadata(config),
      levels=" ".join(str(x) for x in sweep.levels),
      residual=residual)
  path = os.path.join(output_dir, f"{config.name}_eigenvalues.csv")
  return [csv_io.write_columns(path, columns, meta)]


def _run_transit(config, output_dir, threads) -> List[str]:
  del threads  # unused
  estimate = transit.transit_linewidth(config.beam, config.transit_constant)
  print(f"Transit FWHM: {estimate.fwhm_khz:.1f} kHz "
        f"(mean speed {estimate.mean_speed:.1f} m/s); "
        f"suggested DecayModel.transit_rate = {estimate.transit_rate:.6g}")
  columns = {
      "waist_mm": [config.beam.waist_mm],
      "temperature": [config.beam.temperature],
      "fwhm_khz": [estimate.fwhm_khz],
      "mean_speed": [estimate.mean_speed],
      "transit_rate": [estimate.transit_rate],
  }
  meta = dict(_base_metadata(config), constant=estimate.constant)
  path = os.path.join(output_dir, f"{config.name}_transit.csv")
  return [csv_io.write_columns(path, columns, meta)]


_RUNNERS = {
    scenarios.RYDBERG_DIFFERENCE: _run_difference,
    scenarios.RYDBERG_SHIFT: _run_shift,
    scenarios.STARK_SWITCHING: _run_switching,
    scenarios.DOPPLER_FREE_SCAN: _run_doppler_free,
    scenarios.TRANSIT_ESTIMATE: _run_transit,
}


def run_scenario(config: scenarios.ScenarioConfig,
                 output_dir: str,
                 threads: int = 1,
                 convention: Optional[str] = None) -> List[str]:
  """Runs `config` and writes its CSV files plus a gin sidecar.

  Returns:
    The written paths, sidecar last.
  """
  if convention is not None and convention != config.convention:
    # The sidecar must re-parse to the convention actually used.
    config_text = (config.config_text.rstrip("\n") +
                   f'\n\nscenario.convention = "{convention}"\n')
    config = dataclasses.replace(
        config, convention=convention, config_text=config_text)
  os.makedirs(output_dir, exist_ok=True)
  logging.info("Running scenario %s (%s, %s convention)", config.name,
               config.kind, config.convention)
  paths = _RUNNERS[config.kind](config, output_dir, threads)
  sidecar = os.path.join(output_dir, f"{config.name}.gin")
  paths.append(
      csv_io.write_sidecar(sidecar, config.config_text, __version__,
                           config.convention))
  for path in paths:
    logging.info("Wrote %s", path)
  return paths


def execute(command: Sequence[str],
            output_dir: Optional[str] = None,
            threads: int = 1,
            convention: Optional[str] = None,
            bindings: Sequence[str] = (),
            scenario_path: Sequence[str] = ()) -> int:
  """Runs `list` or `run <scenario>` and returns the exit status."""
  user_dirs = scenarios.user_scenario_dirs(scenario_path)
  if list(command) == ["list"]:
    try:
      names = scenarios.list_scenarios(user_dirs)
    except RydbergDarkError as e:
      logging.error("%s", e)
      return EXIT_CONFIG_ERROR
    for name in names:
      print(name)
    return EXIT_OK
  if len(command) != 2 or command[0] != "run":
    raise app.UsageError("Expected `list` or `run <scenario>`")
  try:
    config = scenarios.load_scenario(command[1], bindings, user_dirs)
  except RydbergDarkError as e:
    logging.error("%s", e)
    return EXIT_CONFIG_ERROR
  output_dir = (output_dir or config.output_dir or
                os.environ.get(OUTPUT_DIR_ENV) or DEFAULT_OUTPUT_DIR)
  try:
    run_scenario(config, output_dir, threads, convention)
  except ValueError as e:
    logging.error("Invalid scenario %s: %s", config.name, e)
    return EXIT_CONFIG_ERROR
  except RydbergDarkError as e:
    logging.error("Solver failed in scenario %s: %s", config.name, e)
    return EXIT_SOLVER_ERROR
  return EXIT_OK


def main(argv):
  return execute(argv[1:], FLAGS.output_dir, FLAGS.threads, FLAGS.convention,
                 FLAGS.gin_bindings, FLAGS.scenario_path)


def run_main():
  logging.getLogger().setLevel(logging.INFO)
  app.run(main)


if __name__ == "__main__":
  run_main()
