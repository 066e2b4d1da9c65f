#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from . import chain, exceptions, experiment, pulses, readout, spins
from .chain import build_chain_hamiltonian, propagate_exact, reference_populations
from .preparation import PreparationPulseSpec, prepare_pseudopure
from .relaxation import RelaxationModel, default_linewidths
from .spins import SpinSystem
from .utils import manual_seed


__version__ = "0.1.0"


__all__ = [
    "PreparationPulseSpec",
    "RelaxationModel",
    "SpinSystem",
    "build_chain_hamiltonian",
    "chain",
    "default_linewidths",
    "exceptions",
    "experiment",
    "manual_seed",
    "prepare_pseudopure",
    "propagate_exact",
    "pulses",
    "readout",
    "reference_populations",
    "spins",
]
