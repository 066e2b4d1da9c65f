#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Acquisition: reading pulse, phase cycling and free induction decay synthesis.
"""

import math
from typing import List, NamedTuple, Optional, Sequence, Tuple

import torch
from torch import Tensor

from ..exceptions.errors import ConfigurationError
from ..pulses.evolution import EvolutionMode, evolve
from ..pulses.shapes import ShapedPulse
from ..relaxation import RelaxationModel
from ..spins.system import SpinSystem
from ..utils.linalg import COMPLEX_DTYPE, REAL_DTYPE, check_hermitian, conjugate_by


# the basic cycle steps the pulse phase by pi / 2 over four transients
CYCLE_BASE = 4


class AcquisitionConfig(NamedTuple):
    r"""Settings of the reading pulse, the phase cycle and the receiver.

    Attributes:
        reading_angle: Flip angle of the hard reading pulse (rad).
        broadening_hz: Exponential line broadening added to every line (Hz).
        dwell: Sampling interval (s).
        n_points: Number of complex FID points.
        transients: Number of accumulated transients.
        phase_steps: Length of the phase cycle; the pulse phase advances by
            `2 pi / phase_steps` per transient.
        window_half_width_hz: Half-width of every integration window; defaults
            to half the splitting.
        windows: Explicit `(lo, hi)` windows (Hz), one per transition.
    """

    reading_angle: float = math.pi / 20
    broadening_hz: float = 100.0
    dwell: float = 1e-5
    n_points: int = 8192
    transients: int = 4
    phase_steps: int = 4
    window_half_width_hz: Optional[float] = None
    windows: Optional[Tuple[Tuple[float, float], ...]] = None

    def validate(self, sys: SpinSystem) -> "AcquisitionConfig":
        r"""Check the settings against a spin system.

        Raises:
            ConfigurationError: If the transient count does not fit the phase
                cycle, the spectral width misses a line or a setting is out of
                range.
        """
        if self.phase_steps < 1:
            raise ConfigurationError(
                f"phase_steps must be >= 1, got {self.phase_steps}."
            )
        if (
            self.transients < 1
            or self.transients % CYCLE_BASE != 0
            or self.transients % self.phase_steps != 0
        ):
            raise ConfigurationError(
                f"transients ({self.transients}) must be a positive multiple of "
                f"{CYCLE_BASE} and of phase_steps ({self.phase_steps})."
            )
        if not self.dwell > 0 or self.n_points < 2:
            raise ConfigurationError("dwell must be positive and n_points >= 2.")
        if self.broadening_hz < 0:
            raise ConfigurationError(
                f"Line broadening must be >= 0, got {self.broadening_hz}."
            )
        nyquist = 0.5 / self.dwell
        f_max = float(sys.transitions.frequencies_hz.abs().max())
        if f_max >= nyquist:
            raise ConfigurationError(
                f"Spectral width +/-{nyquist:.1f} Hz does not cover the line at "
                f"{f_max:.1f} Hz."
            )
        return self


def peak_windows(
    sys: SpinSystem, acq: AcquisitionConfig = AcquisitionConfig()
) -> List[Tuple[float, float]]:
    r"""Integration windows, one per transition, in transition order.

    Args:
        sys: The spin system.
        acq: Acquisition settings; explicit `windows` take precedence over
            `window_half_width_hz`, which defaults to half the splitting.

    Returns:
        A list of `(lo, hi)` intervals (Hz).

    Raises:
        ConfigurationError: If two windows overlap (touching is allowed).
    """
    if acq.windows is not None:
        windows = [(float(lo), float(hi)) for lo, hi in acq.windows]
        if len(windows) != sys.n_transitions:
            raise ConfigurationError(
                f"Expected {sys.n_transitions} integration windows, got {len(windows)}."
            )
    else:
        half = acq.window_half_width_hz
        if half is None:
            half = 0.5 * sys.splitting_hz
        centers = sys.transitions.frequencies_hz.tolist()
        windows = [(f - half, f + half) for f in centers]
    for lo, hi in windows:
        if not hi > lo:
            raise ConfigurationError(f"Empty integration window ({lo}, {hi}).")
    ordered = sorted(windows)
    for (_, hi), (lo, _) in zip(ordered[:-1], ordered[1:]):
        if lo < hi - 1e-9:
            raise ConfigurationError(
                f"Integration windows overlap around {lo:.1f} to {hi:.1f} Hz."
            )
    return windows


class FreeInductionDecay(NamedTuple):
    time: Tensor
    signal: Tensor


def reading_pulse(rho: Tensor, angle: float, sys: SpinSystem) -> Tensor:
    r"""Apply a hard pulse `exp(-i angle Ix)` about the x axis."""
    rho = check_hermitian(rho)
    U = torch.linalg.matrix_exp(-1j * angle * sys.operators.Ix)
    return conjugate_by(U, rho)


def cycle_phases(phase_steps: int) -> Tensor:
    return 2 * math.pi * torch.arange(phase_steps, dtype=REAL_DTYPE) / phase_steps


def phase_cycled_state(
    rho: Tensor,
    pulse: ShapedPulse,
    sys: SpinSystem,
    mode: EvolutionMode = EvolutionMode(),
    relax: Optional[RelaxationModel] = None,
    transients: int = 4,
    phase_steps: int = 4,
) -> Tensor:
    r"""Average the evolved state over a phase cycle of the pulse.

    Transient `j` applies the pulse with all phases advanced by
    `2 pi j / phase_steps`. Populations do not depend on the phase, while a
    coherence between levels `i` and `j` is cancelled unless `i - j` is a
    multiple of `phase_steps`.

    Args:
        rho: The prepared `d x d` deviation matrix.
        pulse: The evolution pulse.
        sys: The spin system.
        mode: Evolution regime.
        relax: Optional relaxation model.
        transients: Number of transients; a multiple of 4 and `phase_steps`.
        phase_steps: Cycle length.

    Returns:
        The `d x d` transient-averaged density matrix.
    """
    AcquisitionConfig(transients=transients, phase_steps=phase_steps).validate(sys)
    # every full cycle contributes the same average
    states = [
        evolve(rho, pulse.with_phase_shift(float(phi)), sys, mode, relax)
        for phi in cycle_phases(phase_steps)
    ]
    return torch.stack(states).mean(dim=0)


def line_decay_rates(
    sys: SpinSystem,
    relax: Optional[RelaxationModel],
    broadening_hz: float,
) -> Tensor:
    r"""Exponential decay rate `pi (FWHM_k + broadening)` of every line (1/s)."""
    rates = torch.full((sys.n_transitions,), math.pi * broadening_hz, dtype=REAL_DTYPE)
    if relax is not None:
        rates = rates + relax.rates
    return rates


def synthesize_fid(
    rho: Tensor,
    sys: SpinSystem,
    relax: Optional[RelaxationModel] = None,
    acq: AcquisitionConfig = AcquisitionConfig(),
) -> FreeInductionDecay:
    r"""Free induction decay of the single-quantum coherences of `rho`.

    The signal is `s(t) = sum_k c_k exp(i 2 pi f_k t) exp(-R_k t)` with
    `c_k = d_k rho_{k, k+1}` and `R_k = pi (FWHM_k + broadening)`.

    Args:
        rho: A `(b) x d x d` density matrix after the reading pulse.
        sys: The spin system.
        relax: Relaxation model providing the line widths; None means
            broadening only.
        acq: Acquisition settings.

    Returns:
        The FreeInductionDecay; `signal` is `(b) x n_points`.
    """
    rho = check_hermitian(rho)
    acq.validate(sys)
    t = acq.dwell * torch.arange(acq.n_points, dtype=REAL_DTYPE)
    upper = torch.diagonal(rho, offset=1, dim1=-2, dim2=-1)
    c = sys.transitions.matrix_elements * upper
    freqs = sys.transitions.frequencies_hz
    rates = line_decay_rates(sys, relax, acq.broadening_hz)
    # K x n
    basis = torch.polar(
        torch.exp(-rates.unsqueeze(-1) * t), 2 * math.pi * freqs.unsqueeze(-1) * t
    )
    return FreeInductionDecay(time=t, signal=c.to(COMPLEX_DTYPE) @ basis)


def acquire(
    rho: Tensor,
    sys: SpinSystem,
    relax: Optional[RelaxationModel] = None,
    acq: AcquisitionConfig = AcquisitionConfig(),
) -> FreeInductionDecay:
    r"""Apply the reading pulse to `rho` and record the FID."""
    return synthesize_fid(reading_pulse(rho, acq.reading_angle, sys), sys, relax, acq)


def as_windows(values: Sequence[Sequence[float]]) -> Tuple[Tuple[float, float], ...]:
    return tuple((float(lo), float(hi)) for lo, hi in values)
