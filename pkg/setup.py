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
"""setuptools script for installing the Python package."""

import sys
if sys.version_info < (3, 8):
  print('Python >= 3.8 is required')
  sys.exit(1)

import os
import re

import setuptools

_ROOT = os.path.dirname(os.path.abspath(__file__))


def _version():
  path = os.path.join(_ROOT, 'python', 'rydberg_dark', '__init__.py')
  with open(path, mode='r', encoding='utf-8') as f:
    return re.search(r'^__version__ = "([^"]+)"', f.read(), re.M).group(1)


with open(os.path.join(_ROOT, 'README.md'), mode='r', encoding='utf-8') as f:
  long_description = f.read()

setuptools.setup(
    name='rydberg_dark',
    version=_version(),
    description='Steady-state spectra of N-type Rydberg dark resonances',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='Apache License 2.0',
    python_requires='>=3.8',
    packages=setuptools.find_packages('python'),
    package_dir={'': 'python'},
    package_data={'rydberg_dark': ['presets/*.gin']},
    install_requires=[
        'absl-py>=0.9.0',
        'gin-config>=0.3.0',
        'numpy>=1.18.0',
        'scipy>=1.4.0',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['rydberg_dark=rydberg_dark.cli:run_main'],
    },
)
