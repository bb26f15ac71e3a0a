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
"""Scenario files.

A scenario is a gin config file binding the `scenario` configurable and the
physics objects it references, for example::

  scenario.name = "fig3"
  scenario.kind = "rydberg_difference"
  scenario.drives = @DriveConfig()
  DriveConfig.omega21 = 0.02

Gin rejects bindings to unknown parameters and reports required parameters
that were never bound.  Shipped presets live in the `presets` directory next
to this module; extra directories can be searched for user scenarios.
"""

import dataclasses
import glob
import logging
import os
from typing import Iterable, List, Optional, Sequence, Tuple

import gin
import numpy as np

from . import analysis
from . import core
from . import doppler
from . import stark
from . import transit
from .errors import ConfigError

PRESET_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                          "presets")
SUFFIX = ".gin"
USER_TAG = ":user"
SCENARIO_PATH_ENV = "RYDBERG_DARK_SCENARIO_PATH"

RYDBERG_DIFFERENCE = "rydberg_difference"
RYDBERG_SHIFT = "rydberg_shift"
STARK_SWITCHING = "stark_switching"
DOPPLER_FREE_SCAN = "doppler_free_scan"
TRANSIT_ESTIMATE = "transit_estimate"
KINDS = (RYDBERG_DIFFERENCE, RYDBERG_SHIFT, STARK_SWITCHING,
         DOPPLER_FREE_SCAN, TRANSIT_ESTIMATE)

_GIN_MODULE = "rydberg_dark"


@dataclasses.dataclass(frozen=True)
class GridSpec:
  """Parameters of `doppler.make_grid`."""
  vmin: float = -10.0
  vmax: float = 10.0
  step: float = 0.5
  scheme: str = doppler.UNIFORM
  doppler_width: Optional[float] = None

  def __post_init__(self):
    if not self.step > 0:
      raise ValueError(f"GridSpec step must be > 0, got {self.step!r}")
    if not self.vmax >= self.vmin:
      raise ValueError(
          f"GridSpec vmax {self.vmax!r} is below vmin {self.vmin!r}")

  def build(self) -> doppler.VelocityGrid:
    return doppler.make_grid(self.vmin, self.vmax, self.step, self.scheme,
                             self.doppler_width)


@dataclasses.dataclass(frozen=True)
class AxisSpec:
  """`num` evenly spaced points from `start` to `stop` inclusive."""
  start: float
  stop: float
  num: int

  def __post_init__(self):
    if self.num < 1:
      raise ValueError(f"num must be >= 1, got {self.num!r}")
    if self.num > 1 and not self.stop > self.start:
      raise ValueError(f"Axis stop {self.stop!r} must exceed start "
                       f"{self.start!r}")

  def values(self) -> np.ndarray:
    return np.linspace(self.start, self.stop, self.num)


for _configurable in (core.LevelScheme, core.DriveConfig, core.DecayModel,
                      analysis.EffectiveDriveConfig, stark.StarkModel,
                      stark.StarkComponent, transit.BeamGeometry, GridSpec,
                      AxisSpec):
  gin.external_configurable(_configurable, module=_GIN_MODULE)
gin.external_configurable(
    analysis.balance_omega53, module=_GIN_MODULE)
gin.external_configurable(
    analysis.effective_two_photon, module=_GIN_MODULE)


@dataclasses.dataclass(frozen=True)
class ScenarioConfig:
  """Everything needed to run one scenario.

  `config_text` is the gin text the scenario was parsed from and does not take
  part in comparisons.
  """
  name: str
  kind: str
  scheme: core.LevelScheme
  drives: object = None
  decay: core.DecayModel = dataclasses.field(default_factory=core.DecayModel)
  grid: Optional[GridSpec] = None
  axis: Optional[AxisSpec] = None
  convention: str = core.LITERAL
  stark_model: Optional[stark.StarkModel] = None
  e_axis: Optional[AxisSpec] = None
  delta54_values: Tuple[float, ...] = ()
  eliminate: bool = False
  beam: Optional[transit.BeamGeometry] = None
  transit_constant: float = transit.DEFAULT_TRANSIT_CONSTANT
  output_dir: Optional[str] = None
  config_text: str = dataclasses.field(default="", compare=False)

  def effective_drives(self):
    """Drives after the optional adiabatic elimination of level 4."""
    if self.eliminate:
      return analysis.adiabatic_eliminate(self.drives, self.convention)
    return self.drives


_REQUIRED_BY_KIND = {
    RYDBERG_DIFFERENCE: ("drives", "grid", "axis"),
    RYDBERG_SHIFT: ("drives", "grid", "axis", "delta54_values"),
    STARK_SWITCHING: ("drives", "grid", "axis", "stark_model", "e_axis"),
    DOPPLER_FREE_SCAN: ("drives", "grid"),
    TRANSIT_ESTIMATE: ("beam",),
}


@gin.configurable("scenario", module=_GIN_MODULE)
def scenario(name=gin.REQUIRED,
             kind=gin.REQUIRED,
             scheme=None,
             drives=None,
             decay=None,
             grid=None,
             axis=None,
             convention=core.LITERAL,
             stark_model=None,
             e_axis=None,
             delta54_values=(),
             eliminate=False,
             beam=None,
             transit_constant=transit.DEFAULT_TRANSIT_CONSTANT,
             output_dir=None) -> ScenarioConfig:
  """Assembles a `ScenarioConfig` from gin bindings."""
  if kind not in KINDS:
    raise ConfigError(f"scenario.kind must be one of {KINDS!r}, got {kind!r}")
  if convention not in core.CONVENTIONS:
    raise ConfigError(f"scenario.convention must be one of "
                      f"{core.CONVENTIONS!r}, got {convention!r}")
  config = ScenarioConfig(
      name=name,
      kind=kind,
      scheme=scheme if scheme is not None else core.LevelScheme(),
      drives=drives,
      decay=decay if decay is not None else core.DecayModel(),
      grid=grid,
      axis=axis,
      convention=convention,
      stark_model=stark_model,
      e_axis=e_axis,
      delta54_values=tuple(float(x) for x in delta54_values),
      eliminate=bool(eliminate),
      beam=beam,
      transit_constant=float(transit_constant),
      output_dir=output_dir)
  required = _REQUIRED_BY_KIND[kind]
  missing = [key for key in required if not getattr(config, key)]
  if missing:
    keys = ", ".join("scenario." + key for key in missing)
    raise ConfigError(f"Scenario {name!r} of kind {kind!r} is missing {keys}")
  return config


def preset_name(path: str) -> str:
  return os.path.basename(path)[:-len(SUFFIX)].replace("_", "-")


def _scan(directory: str) -> List[Tuple[str, str]]:
  paths = sorted(glob.glob(os.path.join(directory, "*" + SUFFIX)))
  return [(preset_name(path), path) for path in paths]


def user_scenario_dirs(extra: Iterable[str] = ()) -> List[str]:
  dirs = list(extra)
  env = os.environ.get(SCENARIO_PATH_ENV, "")
  dirs.extend(d for d in env.split(os.pathsep) if d)
  return dirs


def scenario_index(user_dirs: Sequence[str] = ()) -> List[Tuple[str, str]]:
  """Returns `(name, path)` for presets, then user scenarios.

  Raises:
    ConfigError: if two user directories provide the same scenario name.
  """
  index = _scan(PRESET_DIR)
  seen = {}
  for directory in user_dirs:
    for name, path in _scan(directory):
      if name in seen:
        raise ConfigError(f"Scenario {name!r} is defined in both "
                          f"{seen[name]} and {path}")
      seen[name] = path
  index.extend((name + USER_TAG, seen[name]) for name in sorted(seen))
  return index


def list_scenarios(user_dirs: Sequence[str] = ()) -> List[str]:
  return [name for name, _ in scenario_index(user_dirs)]


def resolve_scenario(name_or_path: str,
                     user_dirs: Sequence[str] = ()) -> str:
  """Maps a preset name, a user scenario name or a file path to a path."""
  if os.path.isfile(name_or_path):
    return name_or_path
  index = dict(scenario_index(user_dirs))
  for candidate in (name_or_path, name_or_path.replace("_", "-"),
                    name_or_path + USER_TAG):
    if candidate in index:
      return index[candidate]
  raise ConfigError(f"No scenario file or preset named {name_or_path!r}; "
                    f"known: {sorted(index)!r}")


def load_scenario(name_or_path: str,
                  bindings: Sequence[str] = (),
                  user_dirs: Sequence[str] = ()) -> ScenarioConfig:
  """Parses a scenario file (or preset) plus extra gin `bindings`.

  Raises:
    ConfigError: on unreadable files, unknown or missing bindings and invalid
      parameter values.
  """
  path = resolve_scenario(name_or_path, user_dirs)
  logging.info("Loading scenario %s", path)
  gin.clear_config()
  try:
    gin.parse_config_files_and_bindings([path], list(bindings))
    config = scenario()
    config_text = gin.config_str()
  except ConfigError:
    raise
  except (OSError, ValueError, KeyError, TypeError, RuntimeError,
          SyntaxError) as e:
    raise ConfigError(f"Invalid scenario {path}: {e}") from e
  finally:
    gin.clear_config()
  return dataclasses.replace(config, config_text=config_text)
