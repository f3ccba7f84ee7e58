"""Quantum-trajectory simulator for an entangled two-particle recoil molecule."""

from .action import (
    ActionSample,
    QuantumMassSample,
    action_sample,
    conjugate_momentum,
    effective_quantum_mass,
    quantum_potential,
    reduced_action_principal,
    reduced_action_unwrapped,
)
from .entanglon import (
    Decomposition,
    decompose_time,
    entanglon_divergence,
    epr_limit_mass,
    epr_limit_time,
    is_trigger_point,
)
from .errors import InfiniteVelocityError, PrecisionError, SingularityError
from .model import (
    LimitSeries,
    ModelParams,
    ParticlePositions,
    energy_from_wavenumber,
    normalize_phase_shift,
    particle_positions,
    validate_params,
    wavenumber_from_energy,
)
from .trajectory import (
    Segment,
    TrajectoryEvent,
    TrajectoryPoint,
    TurningPoint,
    WedgeBounds,
    bohmian_time_of_position,
    dtdx,
    find_turning_points,
    mechanical_momentum,
    pair_events,
    positions_at_time,
    segment_trajectory,
    time_of_position,
    trajectory_point,
    wedge_bounds,
)
from .wavefunction import (
    PolarForm,
    amplitude_squared,
    epr_limit_wave,
    psi_bipolar,
    psi_polar,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSample",
    "Decomposition",
    "InfiniteVelocityError",
    "LimitSeries",
    "ModelParams",
    "ParticlePositions",
    "PolarForm",
    "PrecisionError",
    "QuantumMassSample",
    "Segment",
    "SingularityError",
    "TrajectoryEvent",
    "TrajectoryPoint",
    "TurningPoint",
    "WedgeBounds",
    "action_sample",
    "amplitude_squared",
    "bohmian_time_of_position",
    "conjugate_momentum",
    "decompose_time",
    "dtdx",
    "effective_quantum_mass",
    "energy_from_wavenumber",
    "entanglon_divergence",
    "epr_limit_mass",
    "epr_limit_time",
    "epr_limit_wave",
    "find_turning_points",
    "is_trigger_point",
    "mechanical_momentum",
    "normalize_phase_shift",
    "pair_events",
    "particle_positions",
    "positions_at_time",
    "psi_bipolar",
    "psi_polar",
    "quantum_potential",
    "reduced_action_principal",
    "reduced_action_unwrapped",
    "segment_trajectory",
    "time_of_position",
    "trajectory_point",
    "validate_params",
    "wavenumber_from_energy",
    "wedge_bounds",
]
