#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Phenomenological relaxation of the spin density matrix.

Each single-quantum coherence decays with `R2_k = pi * FWHM_k` taken from the
width of its spectral line. A coherence between levels `i` and `j` with
`|i - j| >= 2` decays with the largest single-quantum rate among the
transitions it spans. Populations are untouched unless a uniform `T1` is set.
"""

import math
from typing import Optional, Sequence, Tuple

import torch
from torch import Tensor

from .exceptions.errors import InvalidArgumentError
from .utils.linalg import REAL_DTYPE, check_hermitian


# Only the extremes (10 Hz center, 130 Hz outermost) are measured values; the
# interior widths are interpolated.
DEFAULT_LINEWIDTHS_HZ = (130.0, 55.0, 20.0, 10.0, 20.0, 55.0, 130.0)


def default_linewidths() -> Tuple[float, ...]:
    r"""Per-line FWHM (Hz) of the seven cesium-133 peaks, outermost first."""
    return DEFAULT_LINEWIDTHS_HZ


class RelaxationModel:
    r"""Per-coherence transverse decay with an optional uniform `T1`.

    Args:
        linewidths_hz: FWHM of each single-quantum line (Hz), symmetric about
            the center, with the central width not exceeding the outer ones.
        t1: Optional longitudinal relaxation time (s). If given, populations
            return to the equilibrium deviation with `exp(-dt / T1)`.

    Example:
        >>> model = RelaxationModel(default_linewidths())
        >>> model.rates[3]  # central line, pi * 10 Hz
        tensor(31.4159, dtype=torch.float64)
    """

    def __init__(
        self,
        linewidths_hz: Sequence[float] = DEFAULT_LINEWIDTHS_HZ,
        t1: Optional[float] = None,
    ) -> None:
        widths = torch.as_tensor(list(linewidths_hz), dtype=REAL_DTYPE)
        if widths.dim() != 1 or widths.numel() < 1:
            raise InvalidArgumentError("Linewidths must be a non-empty sequence.")
        if (widths < 0).any():
            raise InvalidArgumentError("Linewidths must be nonnegative.")
        if not torch.allclose(widths, widths.flip(0), rtol=0.0, atol=1e-9):
            raise InvalidArgumentError(
                f"Linewidths must be symmetric about the center, got {widths.tolist()}."
            )
        center = widths[widths.numel() // 2]
        if center > widths[0] + 1e-9:
            raise InvalidArgumentError(
                "The central linewidth must not exceed the outermost linewidths."
            )
        if t1 is not None and not t1 > 0:
            raise InvalidArgumentError(f"T1 must be positive, got {t1}.")
        self._widths = widths
        self._t1 = None if t1 is None else float(t1)
        self._rate_matrix: Optional[Tensor] = None

    @property
    def linewidths_hz(self) -> Tensor:
        return self._widths.clone()

    @property
    def t1(self) -> Optional[float]:
        return self._t1

    @property
    def rates(self) -> Tensor:
        r"""Single-quantum decay rates `R2_k = pi * FWHM_k` (1/s)."""
        return math.pi * self._widths

    def rate_matrix(self, dim: int) -> Tensor:
        r"""Decay rate of every density matrix element.

        Args:
            dim: Hilbert space dimension; must equal the number of lines + 1.

        Returns:
            A symmetric `dim x dim` tensor with zero diagonal; entry `(i, j)` is
            the maximum single-quantum rate over transitions `min(i,j)` to
            `max(i,j) - 1`.
        """
        if dim != self._widths.numel() + 1:
            raise InvalidArgumentError(
                f"{self._widths.numel()} linewidths cannot describe {dim} levels."
            )
        if self._rate_matrix is not None:
            return self._rate_matrix
        rates = self.rates
        R = torch.zeros(dim, dim, dtype=REAL_DTYPE)
        for i in range(dim):
            for j in range(i + 1, dim):
                R[i, j] = rates[i:j].max()
                R[j, i] = R[i, j]
        self._rate_matrix = R
        return R

    def __repr__(self) -> str:
        return f"RelaxationModel(linewidths_hz={self._widths.tolist()}, t1={self._t1})"


def apply_decay(rho: Tensor, model: RelaxationModel, dt: float) -> Tensor:
    r"""Relax a density matrix for a time `dt`.

    Args:
        rho: A `(b) x d x d` Hermitian tensor.
        model: The relaxation model.
        dt: Elapsed time in seconds (nonnegative).

    Returns:
        The relaxed density matrix. Coherences are scaled by `exp(-R_ij dt)`;
        with `T1` set, populations move toward the equilibrium deviation
        (shifted to keep the trace).
    """
    if dt < 0:
        raise InvalidArgumentError(f"Relaxation interval must be >= 0, got {dt}.")
    rho = check_hermitian(rho)
    dim = rho.shape[-1]
    damping = torch.exp(-model.rate_matrix(dim) * dt)
    out = rho * damping
    if model.t1 is not None:
        pops = torch.diagonal(rho, dim1=-2, dim2=-1).real
        p_eq = 0.5 * (dim - 1) - torch.arange(dim, dtype=REAL_DTYPE)
        p_eq = p_eq + pops.mean(dim=-1, keepdim=True)
        relaxed = p_eq + (pops - p_eq) * math.exp(-dt / model.t1)
        out = out - torch.diag_embed(torch.diagonal(out, dim1=-2, dim2=-1))
        out = out + torch.diag_embed(relaxed).to(out)
    return out
