#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Small dense linear algebra helpers for density matrices and propagators.
"""

from typing import Union

import torch
from torch import Tensor

from ..exceptions.errors import InvalidStateError


REAL_DTYPE = torch.double
COMPLEX_DTYPE = torch.cdouble

HERMITIAN_ATOL = 1e-9


def as_complex(A: Union[Tensor, list]) -> Tensor:
    r"""Cast a (nested) array-like to a double precision complex tensor."""
    if not torch.is_tensor(A):
        A = torch.tensor(A)
    return A.to(dtype=COMPLEX_DTYPE)


def expi(x: Tensor) -> Tensor:
    r"""Elementwise `exp(i x)` of a real tensor as a complex tensor."""
    x = torch.as_tensor(x, dtype=REAL_DTYPE)
    return torch.polar(torch.ones_like(x), x)


def dagger(A: Tensor) -> Tensor:
    r"""Conjugate transpose over the last two dimensions."""
    return A.transpose(-2, -1).conj()


def commutator(A: Tensor, B: Tensor) -> Tensor:
    return A @ B - B @ A


def conjugate_by(U: Tensor, rho: Tensor) -> Tensor:
    r"""Compute `U rho U^dagger` (broadcasting over leading batch dimensions)."""
    return U @ rho @ dagger(U)


def check_hermitian(rho: Tensor, atol: float = HERMITIAN_ATOL) -> Tensor:
    r"""Validate a density matrix and return it as a complex tensor.

    Args:
        rho: A `(b) x d x d` tensor.
        atol: Largest tolerated entry of `rho - rho^dagger`.

    Returns:
        `rho` cast to `torch.cdouble`.

    Raises:
        InvalidStateError: If `rho` is not square or not Hermitian within `atol`.
    """
    rho = as_complex(rho)
    if rho.dim() < 2 or rho.shape[-1] != rho.shape[-2]:
        raise InvalidStateError(
            f"Density matrix must be `(b) x d x d`, got shape {tuple(rho.shape)}."
        )
    deviation = (rho - dagger(rho)).abs().max().item() if rho.numel() else 0.0
    if deviation > atol:
        raise InvalidStateError(
            f"Density matrix is not Hermitian (max |rho - rho^H| = {deviation:.3e})."
        )
    return rho


def populations(rho: Tensor) -> Tensor:
    r"""Real diagonal of a `(b) x d x d` density matrix."""
    return torch.diagonal(rho, dim1=-2, dim2=-1).real


def trace(rho: Tensor) -> Tensor:
    return torch.diagonal(rho, dim1=-2, dim2=-1).sum(-1)


def purity(rho: Tensor) -> Tensor:
    r"""`tr(rho^2)` as a real tensor."""
    return trace(rho @ rho).real


def spectral_propagator(
    eigenvalues: Tensor, eigenvectors: Tensor, t: Union[float, Tensor]
) -> Tensor:
    r"""Propagator `exp(-i H t)` from a precomputed eigendecomposition of `H`.

    Args:
        eigenvalues: A `d`-dim real tensor of eigenvalues of `H`.
        eigenvectors: A `d x d` tensor whose columns are the eigenvectors.
        t: A scalar or a `b`-dim tensor of times.

    Returns:
        A `d x d` (scalar `t`) or `b x d x d` tensor of unitaries.

    Example:
        >>> E, V = torch.linalg.eigh(H)
        >>> U = spectral_propagator(E, V.to(torch.cdouble), torch.tensor([0.1, 0.2]))
    """
    t = torch.as_tensor(t, dtype=REAL_DTYPE)
    phases = expi(-t.unsqueeze(-1) * eigenvalues.to(REAL_DTYPE))
    V = eigenvectors.to(COMPLEX_DTYPE)
    return (V * phases.unsqueeze(-2)) @ dagger(V)


def diagonal_part(rho: Tensor) -> Tensor:
    r"""Zero every off-diagonal entry of a `(b) x d x d` matrix."""
    return torch.diag_embed(torch.diagonal(rho, dim1=-2, dim2=-1))
