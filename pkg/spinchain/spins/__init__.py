#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from .operators import SpinOperators, ladder_elements, magnetic_numbers, spin_operators
from .system import (
    SpinSystem,
    TransitionTable,
    diagonal_state,
    equilibrium_state,
    static_hamiltonian,
)


__all__ = [
    "SpinOperators",
    "SpinSystem",
    "TransitionTable",
    "diagonal_state",
    "equilibrium_state",
    "ladder_elements",
    "magnetic_numbers",
    "spin_operators",
    "static_hamiltonian",
]
