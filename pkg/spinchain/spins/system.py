#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
The physical register: a quadrupolar spin in the first-order regime.

Levels are indexed by chain site `n = 0, ..., 2I` with `m = I - n`. Transition
`k` joins levels `k` and `k + 1`; its rotating-frame offset is
`f_k = (E_{k+1} - E_k) / 2 pi`, so transition 0 is the lowest line.
"""

import math
from typing import NamedTuple, Optional

import torch
from torch import Tensor

from ..exceptions.errors import InvalidArgumentError
from ..utils.linalg import COMPLEX_DTYPE, REAL_DTYPE
from .operators import (
    SpinOperators,
    ladder_elements,
    magnetic_numbers,
    multiplet_center,
    spin_operators,
    validate_spin,
)


DEFAULT_SPIN = 3.5
DEFAULT_SPLITTING_HZ = 6.0e3

FREQUENCY_MATCH_ATOL = 1e-6


class TransitionTable(NamedTuple):
    r"""Single-quantum transitions of the multiplet.

    Attributes:
        frequencies_hz: A `2I`-dim tensor of offsets `f_k` (Hz).
        matrix_elements: A `2I`-dim tensor of `d_k = sqrt((I+m)(I-m+1))`.
    """

    frequencies_hz: Tensor
    matrix_elements: Tensor

    def index_of(
        self, frequency_hz: float, atol: float = FREQUENCY_MATCH_ATOL
    ) -> Optional[int]:
        r"""Index of the transition at `frequency_hz`, or None if none matches."""
        hits = ((self.frequencies_hz - frequency_hz).abs() <= atol).nonzero()
        if hits.numel() != 1:
            return None
        return int(hits.item())


class SpinSystem:
    r"""Spin `I` with residual quadrupolar splitting `splitting_hz`.

    Example:
        >>> sys = SpinSystem(spin=3.5, splitting_hz=6.0e3)
        >>> sys.transitions.frequencies_hz
        tensor([-18000., -12000.,  -6000.,      0.,   6000.,  12000.,  18000.],
               dtype=torch.float64)
    """

    def __init__(
        self, spin: float = DEFAULT_SPIN, splitting_hz: float = DEFAULT_SPLITTING_HZ
    ) -> None:
        self._dim = validate_spin(spin)
        if not math.isfinite(splitting_hz) or splitting_hz < 0:
            raise InvalidArgumentError(
                f"Quadrupolar splitting must be finite and >= 0, got {splitting_hz}."
            )
        self._spin = float(spin)
        self._splitting_hz = float(splitting_hz)
        self._operators = spin_operators(spin)
        self._m = magnetic_numbers(spin)
        k = torch.arange(self._dim - 1, dtype=REAL_DTYPE)
        self._transitions = TransitionTable(
            frequencies_hz=self._splitting_hz * (k - multiplet_center(spin)),
            matrix_elements=ladder_elements(spin),
        )

    @property
    def spin(self) -> float:
        return self._spin

    @property
    def splitting_hz(self) -> float:
        return self._splitting_hz

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def n_transitions(self) -> int:
        return self._dim - 1

    @property
    def operators(self) -> SpinOperators:
        return self._operators

    @property
    def transitions(self) -> TransitionTable:
        return self._transitions

    @property
    def magnetic_numbers(self) -> Tensor:
        return self._m.clone()

    def site_to_m(self, site: int) -> float:
        if not 0 <= site < self._dim:
            raise InvalidArgumentError(f"site {site} outside 0..{self._dim - 1}.")
        return self._spin - site

    def m_to_site(self, m: float) -> int:
        site = self._spin - m
        if abs(site - round(site)) > 1e-12 or not 0 <= round(site) < self._dim:
            raise InvalidArgumentError(f"m = {m} is not a level of spin {self._spin}.")
        return int(round(site))

    def __repr__(self) -> str:
        return f"SpinSystem(spin={self._spin}, splitting_hz={self._splitting_hz})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpinSystem):
            return NotImplemented
        return (self._spin, self._splitting_hz) == (other.spin, other.splitting_hz)

    def __hash__(self) -> int:
        return hash((self._spin, self._splitting_hz))


def static_hamiltonian(sys: SpinSystem) -> Tensor:
    r"""First-order quadrupolar Hamiltonian `q Iz^2` with `q = pi * splitting`.

    Args:
        sys: The spin system.

    Returns:
        A real diagonal `d x d` tensor in rad/s.
    """
    q = math.pi * sys.splitting_hz
    return torch.diag(q * sys.magnetic_numbers ** 2)


def transition_frequencies_from_energies(H_static: Tensor) -> Tensor:
    r"""Offsets `(E_{k+1} - E_k) / 2 pi` (Hz) from a diagonal Hamiltonian."""
    E = torch.diagonal(H_static)
    return (E[1:] - E[:-1]) / (2 * math.pi)


def diagonal_state(populations: Tensor) -> Tensor:
    r"""Diagonal density matrix carrying the given level populations."""
    return torch.diag_embed(torch.as_tensor(populations, dtype=REAL_DTYPE)).to(
        COMPLEX_DTYPE
    )


def equilibrium_state(sys: SpinSystem) -> Tensor:
    r"""High-temperature equilibrium deviation matrix, proportional to `Iz`.

    Normalized to a unit population difference between adjacent levels, so
    the diagonal reads `(I, I - 1, ..., -I)`.
    """
    return diagonal_state(sys.magnetic_numbers)
