#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from .linalg import (
    check_hermitian,
    expi,
    commutator,
    conjugate_by,
    dagger,
    diagonal_part,
    populations,
    purity,
    spectral_propagator,
    trace,
)
from .sampling import (
    manual_seed,
    random_density_matrix,
    random_diagonal_state,
    random_hermitian,
)


__all__ = [
    "check_hermitian",
    "expi",
    "commutator",
    "conjugate_by",
    "dagger",
    "diagonal_part",
    "manual_seed",
    "populations",
    "purity",
    "random_density_matrix",
    "random_diagonal_state",
    "random_hermitian",
    "spectral_propagator",
    "trace",
]
