#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Multi-tone shaped RF pulses.

A shaped pulse is a sum of harmonics, each with a rotating-frame offset (Hz),
a nutation amplitude (rad/s, before weighting by the spin matrix element) and
a phase. A linearly polarized term `a cos(w t + phi)` contributes `a / 2` to
the rotating-frame matrix element, so a harmonic of amplitude `a` on
transition `k` couples levels `k` and `k + 1` with strength `a d_k / 2`.
"""

import math
from typing import NamedTuple, Tuple

import torch
from torch import Tensor

from ..exceptions.errors import InvalidArgumentError, InvalidPulseError
from ..spins.system import SpinSystem
from ..utils.linalg import REAL_DTYPE


class RfHarmonic(NamedTuple):
    frequency_hz: float
    amplitude: float
    phase: float = 0.0


class ShapedPulse(NamedTuple):
    r"""A sum of RF harmonics applied for `duration` seconds."""

    harmonics: Tuple[RfHarmonic, ...]
    duration: float

    def validate(self) -> "ShapedPulse":
        r"""Check amplitudes, duration and frequency uniqueness.

        Returns:
            The pulse itself, for chaining.

        Raises:
            InvalidPulseError: If any invariant is violated.
        """
        if self.duration < 0:
            raise InvalidPulseError(
                f"Pulse duration must be >= 0, got {self.duration}."
            )
        freqs = [h.frequency_hz for h in self.harmonics]
        if len(set(freqs)) != len(freqs):
            raise InvalidPulseError(f"Harmonic frequencies must be distinct: {freqs}.")
        for h in self.harmonics:
            if h.amplitude < 0:
                raise InvalidPulseError(
                    f"Harmonic amplitude must be >= 0, got {h.amplitude}."
                )
        return self

    def with_phase_shift(self, phi: float) -> "ShapedPulse":
        r"""Return a copy with `phi` added to the phase of every harmonic."""
        return self._replace(
            harmonics=tuple(h._replace(phase=h.phase + phi) for h in self.harmonics)
        )

    def with_duration(self, duration: float) -> "ShapedPulse":
        return self._replace(duration=float(duration))

    @property
    def frequencies(self) -> Tensor:
        return torch.tensor([h.frequency_hz for h in self.harmonics], dtype=REAL_DTYPE)

    @property
    def amplitudes(self) -> Tensor:
        return torch.tensor([h.amplitude for h in self.harmonics], dtype=REAL_DTYPE)

    @property
    def phases(self) -> Tensor:
        return torch.tensor([h.phase for h in self.harmonics], dtype=REAL_DTYPE)

    @property
    def max_amplitude(self) -> float:
        return max((h.amplitude for h in self.harmonics), default=0.0)


def dimensionless_time(omega1: float, duration: float) -> float:
    r"""Chain time `tau = lambda_eff * t` with `lambda_eff = omega1 / 2`."""
    return 0.5 * omega1 * duration


def duration_for_tau(omega1: float, tau: float) -> float:
    r"""Pulse length realizing the chain time `tau` at strength `omega1`."""
    if omega1 <= 0:
        raise InvalidArgumentError(f"omega1 must be positive, got {omega1}.")
    return 2.0 * tau / omega1


def chain_emulation_pulse(
    sys: SpinSystem, omega1: float, duration: float, phase: float = 0.0
) -> ShapedPulse:
    r"""Pulse whose RWA Hamiltonian is the hopping chain with `lambda = omega1/2`.

    One harmonic sits on every single-quantum transition with amplitude
    `omega1 / d_k`, so that all couplings `a_k d_k / 2` are equal.

    Args:
        sys: The spin system.
        omega1: Nutation strength (rad/s); zero gives a do-nothing pulse.
        duration: Pulse length (s).
        phase: Common phase of all harmonics (rad).

    Returns:
        A ShapedPulse with `2I` harmonics.

    Example:
        >>> sys = SpinSystem()
        >>> pulse = chain_emulation_pulse(sys, omega1=5.0e3, duration=600e-6)
    """
    if omega1 < 0 or not math.isfinite(omega1):
        raise InvalidArgumentError(f"omega1 must be finite and >= 0, got {omega1}.")
    table = sys.transitions
    harmonics = tuple(
        RfHarmonic(frequency_hz=float(f), amplitude=float(omega1 / d), phase=phase)
        for f, d in zip(table.frequencies_hz.tolist(), table.matrix_elements.tolist())
    )
    return ShapedPulse(harmonics=harmonics, duration=float(duration)).validate()
