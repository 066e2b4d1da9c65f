#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Time evolution of a spin density matrix under a shaped pulse.

Two regimes are supported. `IDEAL_RWA` keeps only the resonant term of every
harmonic, which yields a time-independent Hamiltonian. `FULL` keeps the
off-resonant driving of every harmonic on every transition and integrates the
resulting time-dependent Hamiltonian with midpoint piecewise-constant steps.

States are kept in the interaction frame of the static quadrupolar
Hamiltonian, with the clock reset at the start of every pulse. Populations are
the same in the rotating and interaction frames.
"""

import logging
import math
import warnings
from enum import Enum
from typing import NamedTuple, Optional

import torch
from torch import Tensor

from ..exceptions.errors import (
    ConfigurationError,
    InvalidPulseError,
    InvalidStateError,
)
from ..exceptions.warnings import SelectivityWarning
from ..relaxation import RelaxationModel, apply_decay
from ..spins.system import SpinSystem
from ..utils.linalg import COMPLEX_DTYPE, REAL_DTYPE, check_hermitian, conjugate_by
from .shapes import ShapedPulse


logger = logging.getLogger(__name__)

# Largest tolerated ratio of the nutation frequency to the splitting before a
# SelectivityWarning is issued.
SELECTIVITY_RATIO = 0.25


class EvolutionKind(Enum):
    IDEAL_RWA = "ideal"
    FULL = "full"


class EvolutionMode(NamedTuple):
    r"""Evolution regime and optional step control.

    Attributes:
        kind: IDEAL_RWA or FULL.
        max_step: Largest integration step (s). For IDEAL_RWA it only matters
            when relaxation is interleaved. None selects a default.
    """

    kind: EvolutionKind = EvolutionKind.IDEAL_RWA
    max_step: Optional[float] = None

    @classmethod
    def ideal(cls, max_step: Optional[float] = None) -> "EvolutionMode":
        return cls(kind=EvolutionKind.IDEAL_RWA, max_step=max_step)

    @classmethod
    def full(cls, max_step: Optional[float] = None) -> "EvolutionMode":
        return cls(kind=EvolutionKind.FULL, max_step=max_step)

    @classmethod
    def from_name(cls, name: str, max_step: Optional[float] = None) -> "EvolutionMode":
        try:
            kind = EvolutionKind(name.lower())
        except ValueError:
            raise ConfigurationError(
                f"Unknown evolution mode {name!r}; expected 'ideal' or 'full'."
            )
        return cls(kind=kind, max_step=max_step)


def max_frequency_offset(pulse: ShapedPulse, sys: SpinSystem) -> float:
    r"""Largest `|f_h - f_k|` (Hz) over harmonics `h` and transitions `k`."""
    if not pulse.harmonics:
        return 0.0
    diff = pulse.frequencies.unsqueeze(-1) - sys.transitions.frequencies_hz
    return float(diff.abs().max())


def max_allowed_step(pulse: ShapedPulse, sys: SpinSystem) -> float:
    r"""Largest FULL integration step, `1 / (50 f_max)`; `inf` if `f_max = 0`."""
    f_max = max_frequency_offset(pulse, sys)
    return math.inf if f_max == 0 else 1.0 / (50.0 * f_max)


def default_step(pulse: ShapedPulse, sys: SpinSystem) -> float:
    r"""Default step `min(1 / (100 splitting), 1 / (50 f_max))`."""
    if sys.splitting_hz == 0:
        by_splitting = math.inf
    else:
        by_splitting = 1.0 / (100.0 * sys.splitting_hz)
    return min(by_splitting, max_allowed_step(pulse, sys))


def _matched_transitions(pulse: ShapedPulse, sys: SpinSystem) -> Tensor:
    table = sys.transitions
    idcs = []
    for h in pulse.harmonics:
        k = table.index_of(h.frequency_hz)
        if k is None:
            raise InvalidPulseError(
                f"Harmonic at {h.frequency_hz} Hz matches no transition of {sys}."
            )
        idcs.append(k)
    return torch.tensor(idcs, dtype=torch.long)


def effective_hamiltonian_rwa(pulse: ShapedPulse, sys: SpinSystem) -> Tensor:
    r"""Rotating-wave Hamiltonian of a shaped pulse.

    Args:
        pulse: A shaped pulse whose harmonics each sit on a transition.
        sys: The spin system.

    Returns:
        A `d x d` complex Hermitian tensor (rad/s) with element `(k, k+1)`
        equal to `a_k d_k / 2 exp(i phi_k)` and a zero diagonal.

    Raises:
        InvalidPulseError: If a harmonic sits on no transition.
    """
    pulse.validate()
    idcs = _matched_transitions(pulse, sys)
    d = sys.transitions.matrix_elements
    coupling = torch.zeros(sys.n_transitions, dtype=COMPLEX_DTYPE)
    if idcs.numel() > 0:
        values = torch.polar(0.5 * pulse.amplitudes * d[idcs], pulse.phases)
        for k, value in zip(idcs.tolist(), values):
            coupling[k] += value
    upper = torch.diag_embed(coupling, offset=1)
    return upper + upper.transpose(-2, -1).conj()


def full_hamiltonian(pulse: ShapedPulse, sys: SpinSystem, t: Tensor) -> Tensor:
    r"""Interaction-frame Hamiltonian of a shaped pulse at times `t`.

    Every harmonic drives every transition with a phase that rotates at its
    frequency offset from that transition. Counter-rotating terms are dropped.

    Args:
        pulse: A shaped pulse.
        sys: The spin system.
        t: A `n`-dim tensor of times (s) since the start of the pulse.

    Returns:
        A `n x d x d` complex Hermitian tensor (rad/s).
    """
    t = torch.as_tensor(t, dtype=REAL_DTYPE).reshape(-1)
    if not pulse.harmonics:
        return torch.zeros(t.numel(), sys.dim, sys.dim, dtype=COMPLEX_DTYPE)
    two_pi = 2 * math.pi
    w_h = two_pi * pulse.frequencies
    w_k = two_pi * sys.transitions.frequencies_hz
    # n x H x K
    phase = (w_h.unsqueeze(-1) - w_k).unsqueeze(0) * t.view(-1, 1, 1)
    phase = phase + pulse.phases.view(1, -1, 1)
    weight = 0.5 * pulse.amplitudes.unsqueeze(-1) * sys.transitions.matrix_elements
    coupling = torch.polar(weight.expand_as(phase), phase).sum(dim=-2)
    upper = torch.diag_embed(coupling, offset=1)
    return upper + upper.transpose(-2, -1).conj()


def nutation_frequency_hz(pulse: ShapedPulse, sys: SpinSystem) -> float:
    r"""Largest `a_h d_k / 2 pi` over harmonics and the transitions they sit on.

    For a chain-emulation pulse of strength `omega1` this is `omega1 / 2 pi`.
    Harmonics off every transition are weighted with the largest `d_k`.
    """
    d = sys.transitions.matrix_elements
    best = 0.0
    for h in pulse.harmonics:
        k = sys.transitions.index_of(h.frequency_hz)
        d_h = float(d.max()) if k is None else float(d[k])
        best = max(best, h.amplitude * d_h)
    return best / (2 * math.pi)


def check_selectivity(pulse: ShapedPulse, sys: SpinSystem) -> bool:
    r"""Warn if the pulse is too strong for the rotating-wave picture to hold.

    Returns:
        True if the pulse is selective, False if a SelectivityWarning was issued.
    """
    nu = nutation_frequency_hz(pulse, sys)
    if nu > SELECTIVITY_RATIO * sys.splitting_hz:
        warnings.warn(
            f"Nutation frequency {nu:.1f} Hz exceeds {SELECTIVITY_RATIO} x the "
            f"splitting ({sys.splitting_hz:.1f} Hz); neighboring lines are driven.",
            SelectivityWarning,
        )
        return False
    return True


def _n_steps(duration: float, step: float) -> int:
    if not math.isfinite(step):
        return 1
    return max(1, int(math.ceil(duration / step - 1e-9)))


def _evolve_ideal(
    rho: Tensor,
    pulse: ShapedPulse,
    sys: SpinSystem,
    mode: EvolutionMode,
    relax: Optional[RelaxationModel],
) -> Tensor:
    H = effective_hamiltonian_rwa(pulse, sys)
    if relax is None:
        U = torch.linalg.matrix_exp(-1j * pulse.duration * H)
        return conjugate_by(U, rho)
    step = mode.max_step
    if step is None:
        step = math.inf if sys.splitting_hz == 0 else 1.0 / (100.0 * sys.splitting_hz)
    n = _n_steps(pulse.duration, step)
    dt = pulse.duration / n
    U = torch.linalg.matrix_exp(-1j * dt * H)
    logger.debug(f"IDEAL_RWA evolution with relaxation: {n} steps of {dt:.3e} s.")
    for _ in range(n):
        rho = apply_decay(rho, relax, 0.5 * dt)
        rho = conjugate_by(U, rho)
        rho = apply_decay(rho, relax, 0.5 * dt)
    return rho


def _evolve_full(
    rho: Tensor,
    pulse: ShapedPulse,
    sys: SpinSystem,
    mode: EvolutionMode,
    relax: Optional[RelaxationModel],
) -> Tensor:
    limit = max_allowed_step(pulse, sys)
    step = default_step(pulse, sys) if mode.max_step is None else mode.max_step
    if step > limit * (1 + 1e-12):
        raise ConfigurationError(
            f"FULL step {step:.3e} s exceeds the limit {limit:.3e} s set by the "
            "largest harmonic-transition offset."
        )
    if not math.isfinite(step):
        # offsets all vanish, so the Hamiltonian is constant
        step = pulse.duration
    n = _n_steps(pulse.duration, step)
    dt = pulse.duration / n
    logger.debug(f"FULL evolution: {n} steps of {dt:.3e} s.")
    midpoints = (torch.arange(n, dtype=REAL_DTYPE) + 0.5) * dt
    Us = torch.linalg.matrix_exp(-1j * dt * full_hamiltonian(pulse, sys, midpoints))
    if relax is None:
        U = torch.eye(sys.dim, dtype=COMPLEX_DTYPE)
        for U_j in Us:
            U = U_j @ U
        return conjugate_by(U, rho)
    for U_j in Us:
        rho = apply_decay(conjugate_by(U_j, rho), relax, dt)
    return rho


def evolve(
    rho: Tensor,
    pulse: ShapedPulse,
    sys: SpinSystem,
    mode: EvolutionMode = EvolutionMode(),
    relax: Optional[RelaxationModel] = None,
) -> Tensor:
    r"""Evolve a density matrix under a shaped pulse.

    Args:
        rho: A `(b) x d x d` Hermitian tensor.
        pulse: The shaped pulse.
        sys: The spin system.
        mode: Evolution regime and step control.
        relax: Optional relaxation model, applied between propagation steps.

    Returns:
        The evolved `(b) x d x d` density matrix (interaction frame).

    Raises:
        InvalidStateError: If `rho` is not Hermitian or its dimension does not
            match `sys`.
        InvalidPulseError: If the pulse is malformed (or, for IDEAL_RWA, if a
            harmonic sits on no transition).
        ConfigurationError: If a FULL step exceeds `max_allowed_step`.

    Example:
        >>> sys = SpinSystem()
        >>> pulse = chain_emulation_pulse(sys, 5.0e3, 520e-6)
        >>> rho = evolve(diagonal_state(torch.eye(8)[0]), pulse, sys)
    """
    rho = check_hermitian(rho)
    pulse.validate()
    if rho.shape[-1] != sys.dim:
        raise InvalidStateError(
            f"State of dimension {rho.shape[-1]} cannot be driven on {sys}."
        )
    if pulse.duration == 0:
        return rho
    if mode.max_step is not None and not mode.max_step > 0:
        raise ConfigurationError(f"max_step must be positive, got {mode.max_step}.")
    if mode.kind == EvolutionKind.IDEAL_RWA:
        check_selectivity(pulse, sys)
        rho = _evolve_ideal(rho, pulse, sys, mode, relax)
    else:
        rho = _evolve_full(rho, pulse, sys, mode, relax)
    return 0.5 * (rho + rho.transpose(-2, -1).conj())
