#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from .evolution import (
    EvolutionKind,
    EvolutionMode,
    effective_hamiltonian_rwa,
    evolve,
    full_hamiltonian,
    max_allowed_step,
)
from .shapes import (
    RfHarmonic,
    ShapedPulse,
    chain_emulation_pulse,
    dimensionless_time,
    duration_for_tau,
)


__all__ = [
    "EvolutionKind",
    "EvolutionMode",
    "RfHarmonic",
    "ShapedPulse",
    "chain_emulation_pulse",
    "dimensionless_time",
    "duration_for_tau",
    "effective_hamiltonian_rwa",
    "evolve",
    "full_hamiltonian",
    "max_allowed_step",
]
