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
"""Steady-state spectra of an N-type five-level Rydberg dark resonance.

Example:

    >>> import rydberg_dark as rd
    >>> drives = rd.DriveConfig(omega21=0.02, omega32=0.2, omega43=0.8,
    ...                         omega54=0.8)
    >>> h = rd.build_hamiltonian(rd.LevelScheme(), drives, v=0.0)
    >>> rho = rd.steady_state(rd.build_liouvillian(h, rd.DecayModel()))
    >>> rho.sigma21.imag < 1e-3
    True
"""

__version__ = "0.1.0"

from .analysis import EffectiveDriveConfig
from .analysis import EigenSweep
from .analysis import adiabatic_eliminate
from .analysis import asymmetry_metric
from .analysis import balance_omega53
from .analysis import doppler_free_residual
from .analysis import effective_two_photon
from .analysis import eigen_sweep
from .core import GAMMA2_HZ
from .core import LITERAL
from .core import STANDARD
from .core import DecayModel
from .core import DriveConfig
from .core import HamiltonianMatrix
from .core import LevelScheme
from .core import build_hamiltonian
from .doppler import VelocityGrid
from .doppler import doppler_average
from .doppler import make_grid
from .dynamics import DensityMatrix
from .dynamics import Liouvillian
from .dynamics import build_liouvillian
from .dynamics import propagate
from .dynamics import steady_state
from .errors import *
from .spectra import Spectrum
from .spectra import difference_spectrum
from .spectra import probe_scan
from .spectra import rydberg_difference
from .spectra import rydberg_shift_scan
from .spectra import transmission
from .stark import StarkComponent
from .stark import StarkModel
from .stark import half_suppression_field
from .stark import rdr_amplitude
from .stark import stark_shift
from .stark import switching_curve
from .transit import BeamGeometry
from .transit import transit_linewidth
