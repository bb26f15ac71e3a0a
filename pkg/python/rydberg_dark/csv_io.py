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
"""Gnuplot-friendly CSV output.

Every file starts with sorted `# key=value` metadata lines, followed by a
header row and comma separated data printed with 17 significant digits.
"""

import os
from typing import Mapping, Sequence

import numpy as np

from . import spectra

NUMBER_FORMAT = "%.17g"


def _format_value(value) -> str:
  if isinstance(value, float):
    return NUMBER_FORMAT % value
  return str(value).replace("\n", " ")


def write_columns(path: str, columns: Mapping[str, Sequence[float]],
                  metadata: Mapping[str, object]) -> str:
  """Writes equal-length `columns` in insertion order; returns `path`."""
  names = list(columns)
  data = np.column_stack([np.asarray(columns[name]).real for name in names])
  lines = [f"# {key}={_format_value(metadata[key])}" for key in sorted(metadata)]
  lines.append(",".join(names))
  os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    np.savetxt(
        f,
        data,
        fmt=NUMBER_FORMAT,
        delimiter=",",
        header="\n".join(lines),
        comments="")
  return path


def write_spectrum(path: str, spectrum: spectra.Spectrum,
                   value_name: str, metadata: Mapping[str, object]) -> str:
  return write_columns(path, {
      spectrum.axis_name: spectrum.axis,
      value_name: spectrum.values
  }, metadata)


def read_columns(path: str):
  """Returns `(metadata, names, data)` of a file written by `write_columns`."""
  metadata = {}
  with open(path, encoding="utf-8") as f:
    line = f.readline()
    while line.startswith("#"):
      key, _, value = line[1:].strip().partition("=")
      metadata[key] = value
      line = f.readline()
    names = line.strip().split(",")
    data = np.loadtxt(f, delimiter=",", ndmin=2)
  return metadata, names, data


def write_sidecar(path: str, config_text: str, version: str,
                  convention: str) -> str:
  """Writes the run metadata: version, convention and the full gin config."""
  with open(path, "w", encoding="utf-8", newline="\n") as f:
    f.write(f"# rydberg_dark version: {version}\n")
    f.write(f"# convention: {convention}\n")
    f.write(config_text.rstrip("\n") + "\n")
  return path
