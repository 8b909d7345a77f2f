"""Steady-state optical response of a driven four-level atomic vapor.

Computes permittivity, permeability and the (negative) refractive index
of a dense four-level vapor versus probe detuning, with local-field
(Clausius-Mossotti) corrections, and extracts zero-absorption windows
and left-handedness diagnostics.
"""

from .errors import (
    AllPointsFailed,
    ClausiusMossottiPole,
    NoIntervals,
    SingularSystem,
    StepTooLarge,
    ZeroProbe,
)
from .params import SystemParams
from .dynamics import build_liouvillian, steady_state, time_evolve
from .optics import (
    OpticalResponse,
    electric_polarizability,
    magnetic_polarizability,
    permittivity,
    permeability,
    refractive_index,
    response_at,
)
from .sweep import SweepSpec, SweepResult, run_sweep, extract_intervals, locate_extremum
from .presets import PRESETS, preset_params, preset_sweep

__all__ = [
    "SystemParams",
    "build_liouvillian",
    "steady_state",
    "time_evolve",
    "OpticalResponse",
    "electric_polarizability",
    "magnetic_polarizability",
    "permittivity",
    "permeability",
    "refractive_index",
    "response_at",
    "SweepSpec",
    "SweepResult",
    "run_sweep",
    "extract_intervals",
    "locate_extremum",
    "PRESETS",
    "preset_params",
    "preset_sweep",
    "SingularSystem",
    "StepTooLarge",
    "ZeroProbe",
    "ClausiusMossottiPole",
    "NoIntervals",
    "AllPointsFailed",
]

__version__ = "0.1.0"
