#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Exact reference dynamics of a single excitation hopping along a linear chain.

The chain Hamiltonian restricted to the one-excitation sector is the
`n x n` tridiagonal matrix with zero diagonal and the coupling `lambda` on the
first off-diagonals. Propagation uses a one-time spectral decomposition, so
the reference carries no integration error.
"""

import csv
from typing import List, NamedTuple, Sequence, Union

import torch
from torch import Tensor

from .exceptions.errors import InvalidArgumentError
from .utils.linalg import (
    COMPLEX_DTYPE,
    REAL_DTYPE,
    check_hermitian,
    conjugate_by,
    populations,
    spectral_propagator,
)


class ChainHamiltonian(NamedTuple):
    n_sites: int
    coupling: float
    matrix: Tensor
    eigenvalues: Tensor
    eigenvectors: Tensor


class ChainState(NamedTuple):
    r"""Density matrix of the chain (unit trace, `(b) x n x n`)."""

    density: Tensor

    @property
    def populations(self) -> Tensor:
        return populations(self.density)

    @classmethod
    def localized(cls, n_sites: int, site: int = 0) -> "ChainState":
        r"""Excitation localized on `site`, i.e. `|site><site|`."""
        if not 0 <= site < n_sites:
            raise InvalidArgumentError(f"site {site} outside chain of {n_sites}.")
        rho = torch.zeros(n_sites, n_sites, dtype=COMPLEX_DTYPE)
        rho[site, site] = 1.0
        return cls(density=rho)


def build_chain_hamiltonian(
    n_sites: int = 8, coupling: float = 1.0
) -> ChainHamiltonian:
    r"""Build the single-excitation chain Hamiltonian.

    Args:
        n_sites: Number of sites (at least 2).
        coupling: Hopping constant `lambda` (dimensionless).

    Returns:
        A ChainHamiltonian holding the matrix and its eigendecomposition.

    Example:
        >>> H = build_chain_hamiltonian(8, 1.0)
        >>> H.matrix[0, 1]
        tensor(1., dtype=torch.float64)
    """
    if n_sites < 2:
        raise InvalidArgumentError(f"A chain needs at least 2 sites, got {n_sites}.")
    off = torch.full((n_sites - 1,), float(coupling), dtype=REAL_DTYPE)
    matrix = torch.diag(off, 1) + torch.diag(off, -1)
    eigenvalues, eigenvectors = torch.linalg.eigh(matrix)
    return ChainHamiltonian(
        n_sites=n_sites,
        coupling=float(coupling),
        matrix=matrix,
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors.to(COMPLEX_DTYPE),
    )


def propagate_exact(
    H: ChainHamiltonian, rho0: ChainState, tau: Union[float, Tensor]
) -> ChainState:
    r"""Propagate a chain state for dimensionless time(s) `tau`.

    Args:
        H: The chain Hamiltonian (with its cached eigendecomposition).
        rho0: The initial state, an `n x n` density matrix.
        tau: A nonnegative scalar or a `b`-dim tensor of times.

    Returns:
        The state `U rho0 U^dagger` with `U = exp(-i H tau)`; batched as
        `b x n x n` if `tau` is a tensor with one dimension.
    """
    rho = check_hermitian(rho0.density)
    tau = torch.as_tensor(tau, dtype=REAL_DTYPE)
    if (tau < 0).any():
        raise InvalidArgumentError("Propagation times must be nonnegative.")
    U = spectral_propagator(H.eigenvalues, H.eigenvectors, tau)
    rho_t = conjugate_by(U, rho)
    # restore exact Hermiticity lost to rounding
    return ChainState(density=0.5 * (rho_t + rho_t.transpose(-2, -1).conj()))


def reference_populations(
    tau_grid: Union[Sequence[float], Tensor], n_sites: int = 8, coupling: float = 1.0
) -> Tensor:
    r"""Site populations starting from an excitation on site 0.

    Args:
        tau_grid: Nonnegative dimensionless times.
        n_sites: Chain length.
        coupling: Hopping constant.

    Returns:
        A `len(tau_grid) x n_sites` tensor, one row per time.

    Example:
        >>> P = reference_populations([0.0, 0.13, 1.3])
    """
    tau = torch.as_tensor(tau_grid, dtype=REAL_DTYPE).reshape(-1)
    if tau.numel() == 0:
        return torch.zeros(0, n_sites, dtype=REAL_DTYPE)
    H = build_chain_hamiltonian(n_sites, coupling)
    rho0 = ChainState.localized(n_sites, 0)
    return propagate_exact(H, rho0, tau).populations


def write_population_table(
    path: str, tau_grid: Union[Sequence[float], Tensor], table: Tensor
) -> None:
    r"""Write a population table as CSV with header `tau,p0,...`."""
    taus: List[float] = torch.as_tensor(tau_grid, dtype=REAL_DTYPE).tolist()
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["tau"] + [f"p{i}" for i in range(table.shape[-1])])
        for tau, row in zip(taus, table.tolist()):
            writer.writerow([f"{tau:.15g}"] + [f"{p:.15g}" for p in row])
