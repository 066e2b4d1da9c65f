#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Readout calibration and population reconstruction from peak integrals.

Two reconstructions are provided. The ratio method treats every peak as the
linear response `gain * d_k^2 * (p_k - p_{k+1})` and chains the differences
together. The response method inverts the exact linear map from level
populations to peak integrals, measured by pushing every level basis state
through the same readout chain.
"""

import logging
import warnings
from typing import NamedTuple, Optional

import torch
from torch import Tensor

from ..exceptions.errors import InvalidArgumentError
from ..exceptions.warnings import ReadoutWarning
from ..relaxation import RelaxationModel
from ..spins.system import SpinSystem, equilibrium_state
from ..utils.linalg import COMPLEX_DTYPE, REAL_DTYPE
from .acquisition import AcquisitionConfig, acquire
from .spectrum import integrate_peaks, spectrum


logger = logging.getLogger(__name__)

CONSERVATION_ATOL = 1e-8


class ReadoutCalibration(NamedTuple):
    r"""Calibration of the readout chain.

    Attributes:
        gain: Integral per unit `d_k^2 * (p_k - p_{k+1})`, from the
            equilibrium spectrum.
        response: Optional `2I x d` matrix mapping level populations to peak
            integrals. If present, reconstruction inverts it exactly.
    """

    gain: float
    response: Optional[Tensor] = None


def read_integrals(
    rho: Tensor,
    sys: SpinSystem,
    relax: Optional[RelaxationModel] = None,
    acq: AcquisitionConfig = AcquisitionConfig(),
) -> Tensor:
    r"""Peak integrals of a state: reading pulse, FID, spectrum, integration."""
    return integrate_peaks(spectrum(acquire(rho, sys, relax, acq)), acq, sys)


def calibrate_readout(
    sys: SpinSystem,
    relax: Optional[RelaxationModel] = None,
    acq: AcquisitionConfig = AcquisitionConfig(),
    full_response: bool = True,
) -> ReadoutCalibration:
    r"""Calibrate the readout chain.

    Args:
        sys: The spin system.
        relax: Relaxation model providing the line widths.
        acq: Acquisition settings.
        full_response: If True, also measure the response matrix.

    Returns:
        The ReadoutCalibration.

    Example:
        >>> calibration = calibrate_readout(SpinSystem(), RelaxationModel())
    """
    d2 = sys.transitions.matrix_elements ** 2
    integrals = read_integrals(equilibrium_state(sys), sys, relax, acq)
    gain = float((integrals * d2).sum() / (d2 ** 2).sum())
    response = None
    if full_response:
        basis = torch.diag_embed(torch.eye(sys.dim, dtype=REAL_DTYPE)).to(COMPLEX_DTYPE)
        response = read_integrals(basis, sys, relax, acq).transpose(-2, -1)
    logger.debug(f"Readout gain {gain:.6e} (response matrix: {full_response}).")
    return ReadoutCalibration(gain=gain, response=response)


def populations_from_integrals(
    integrals: Tensor,
    sys: SpinSystem,
    calibration: ReadoutCalibration,
    normalization: float = 0.0,
) -> Tensor:
    r"""Reconstruct level populations from peak integrals.

    Args:
        integrals: A `(b) x 2I` tensor of peak integrals in transition order.
        sys: The spin system.
        calibration: The readout calibration.
        normalization: Required sum of the populations (0 for a deviation).

    Returns:
        A `(b) x d` tensor of populations in chain-site order.
    """
    integrals = torch.as_tensor(integrals, dtype=REAL_DTYPE)
    if integrals.shape[-1] != sys.n_transitions:
        raise InvalidArgumentError(
            f"Expected {sys.n_transitions} integrals, got {integrals.shape[-1]}."
        )
    d = sys.dim
    if calibration.response is None:
        if calibration.gain == 0:
            raise InvalidArgumentError("Readout gain must be nonzero.")
        d2 = sys.transitions.matrix_elements ** 2
        drops = torch.cumsum(integrals / (calibration.gain * d2), dim=-1)
        p0 = (normalization + drops.sum(dim=-1, keepdim=True)) / d
        p = torch.cat([p0, p0 - drops], dim=-1)
    else:
        ones = torch.ones(1, d, dtype=REAL_DTYPE)
        A = torch.cat([calibration.response.to(REAL_DTYPE), ones], dim=-2)
        norm = torch.full(integrals.shape[:-1] + (1,), normalization, dtype=REAL_DTYPE)
        rhs = torch.cat([integrals, norm], dim=-1)
        p = torch.linalg.solve(A, rhs.unsqueeze(-1)).squeeze(-1)
    defect = (p.sum(dim=-1) - normalization).abs().max().item() if p.numel() else 0.0
    if defect > CONSERVATION_ATOL * max(1.0, p.abs().max().item()):
        warnings.warn(
            f"Reconstructed populations miss the normalization by {defect:.3e}.",
            ReadoutWarning,
        )
    return p
