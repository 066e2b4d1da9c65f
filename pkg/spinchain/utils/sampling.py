#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Seeding utilities and random states for property checks.
"""

from contextlib import contextmanager
from typing import Generator, Optional

import torch
from torch import Tensor

from .linalg import COMPLEX_DTYPE, REAL_DTYPE, dagger


@contextmanager
def manual_seed(seed: Optional[int] = None) -> Generator[None, None, None]:
    r"""Contextmanager for manual setting the torch.random seed.

    Args:
        seed: The seed to set the random number generator to.

    Returns:
        Generator

    Example:
        >>> with manual_seed(1234):
        >>>     rho = random_density_matrix(8)
    """
    old_state = torch.random.get_rng_state()
    try:
        if seed is not None:
            torch.random.manual_seed(seed)
        yield
    finally:
        if seed is not None:
            torch.random.set_rng_state(old_state)


def random_diagonal_state(dim: int, n: int = 1, traceless: bool = True) -> Tensor:
    r"""Draw `n` random diagonal deviation density matrices.

    Args:
        dim: Hilbert space dimension.
        n: Number of states.
        traceless: If True, remove the mean population so each state has zero
            trace (the deviation convention).

    Returns:
        A `n x dim x dim` complex tensor.
    """
    pops = torch.rand(n, dim, dtype=REAL_DTYPE) * 2.0 - 1.0
    if traceless:
        pops = pops - pops.mean(dim=-1, keepdim=True)
    return torch.diag_embed(pops).to(COMPLEX_DTYPE)


def random_density_matrix(dim: int, n: int = 1) -> Tensor:
    r"""Draw `n` random full-rank unit-trace density matrices (Ginibre ensemble)."""
    G = torch.complex(
        torch.randn(n, dim, dim, dtype=REAL_DTYPE),
        torch.randn(n, dim, dim, dtype=REAL_DTYPE),
    )
    rho = G @ dagger(G)
    tr = torch.diagonal(rho, dim1=-2, dim2=-1).sum(-1).real
    return (rho / tr.view(-1, 1, 1)).to(COMPLEX_DTYPE)


def random_hermitian(dim: int, n: int = 1) -> Tensor:
    G = torch.complex(
        torch.randn(n, dim, dim, dtype=REAL_DTYPE),
        torch.randn(n, dim, dim, dtype=REAL_DTYPE),
    )
    return (0.5 * (G + dagger(G))).to(COMPLEX_DTYPE)
