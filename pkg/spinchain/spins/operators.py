#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Angular momentum matrices of a single spin in the `|I, m>` basis, ordered by
decreasing `m` (index `k` carries `m = I - k`).
"""

from typing import NamedTuple

import torch
from torch import Tensor

from ..exceptions.errors import InvalidArgumentError
from ..utils.linalg import COMPLEX_DTYPE, REAL_DTYPE


class SpinOperators(NamedTuple):
    Iz: Tensor
    Iplus: Tensor
    Iminus: Tensor
    Ix: Tensor
    Iy: Tensor


def validate_spin(spin: float) -> int:
    r"""Check that `spin` is a positive (half-)integer and return `2I + 1`."""
    twice = 2.0 * float(spin)
    if twice < 1 or abs(twice - round(twice)) > 1e-12:
        raise InvalidArgumentError(
            f"Spin quantum number must be a positive multiple of 1/2, got {spin}."
        )
    return int(round(twice)) + 1


def magnetic_numbers(spin: float) -> Tensor:
    r"""The values `m = I, I - 1, ..., -I`."""
    dim = validate_spin(spin)
    return float(spin) - torch.arange(dim, dtype=REAL_DTYPE)


def ladder_elements(spin: float) -> Tensor:
    r"""Matrix elements `<I, m-1| I_- |I, m> = sqrt((I + m)(I - m + 1))`.

    Args:
        spin: The spin quantum number `I`.

    Returns:
        A `2I`-dim tensor; entry `k` belongs to the transition between levels
        `k` and `k + 1` (`m = I - k`).

    Example:
        >>> ladder_elements(3.5) ** 2
        tensor([ 7., 12., 15., 16., 15., 12.,  7.], dtype=torch.float64)
    """
    m = magnetic_numbers(spin)[:-1]
    I = float(spin)
    return torch.sqrt((I + m) * (I - m + 1))


def spin_operators(spin: float) -> SpinOperators:
    r"""Build `Iz`, `I+`, `I-`, `Ix` and `Iy` for spin `I`.

    Args:
        spin: A positive half-integer or integer.

    Returns:
        A SpinOperators tuple of `(2I+1) x (2I+1)` complex tensors.
    """
    m = magnetic_numbers(spin)
    Iz = torch.diag(m).to(COMPLEX_DTYPE)
    Iminus = torch.diag(ladder_elements(spin), -1).to(COMPLEX_DTYPE)
    Iplus = Iminus.transpose(-2, -1).clone()
    Ix = 0.5 * (Iplus + Iminus)
    Iy = -0.5j * (Iplus - Iminus)
    return SpinOperators(Iz=Iz, Iplus=Iplus, Iminus=Iminus, Ix=Ix, Iy=Iy)


def casimir(spin: float) -> float:
    I = float(spin)
    return I * (I + 1)


def multiplet_center(spin: float) -> float:
    r"""Index offset `(2I - 1) / 2` of the central single-quantum transition."""
    return 0.5 * (2.0 * float(spin) - 1.0)
