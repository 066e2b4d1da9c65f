#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Pseudopure ground state preparation.

A multi-tone pulse irradiates every transition except the one involving the
level that becomes the chain's occupied site. For the right duration the
populations of all irradiated levels cross, i.e. they become equal; removing
the coherences afterwards leaves a state in which only the site-0 level stands
out. That state reads as `|0><0|` on the chain.
"""

import logging
import math
from typing import NamedTuple, Optional, Tuple

import torch
from scipy.optimize import minimize_scalar
from torch import Tensor

from .exceptions.errors import InvalidArgumentError, NoCrossingError
from .pulses.evolution import (
    EvolutionKind,
    EvolutionMode,
    default_step,
    effective_hamiltonian_rwa,
    evolve,
    full_hamiltonian,
    max_allowed_step,
)
from .pulses.shapes import RfHarmonic, ShapedPulse
from .spins.system import SpinSystem, equilibrium_state
from .utils.linalg import (
    COMPLEX_DTYPE,
    REAL_DTYPE,
    conjugate_by,
    diagonal_part,
    populations,
    spectral_propagator,
)


logger = logging.getLogger(__name__)

DEFAULT_RELATIVE_AMPLITUDES = (0.7, 0.9, 1.0, 1.0, 0.9, 0.7)
DEFAULT_BASE_STRENGTH = 9.0e3
DEFAULT_MAX_DURATION = 1.2e-3
MIN_GRID_POINTS = 400

# absolute precision (s) of the refined crossing time
CROSSING_XTOL = 1e-9


class PreparationPulseSpec(NamedTuple):
    r"""Shape of the preparation pulse.

    Attributes:
        relative_amplitudes: One positive weight per irradiated transition
            (transitions 1 to d - 2).
        base_strength: Nutation strength (rad/s) of a unit weight.
        max_duration: Upper end (s) of the crossing search.
        grid_points: Number of samples of the crossing search.
    """

    relative_amplitudes: Tuple[float, ...] = DEFAULT_RELATIVE_AMPLITUDES
    base_strength: float = DEFAULT_BASE_STRENGTH
    max_duration: float = DEFAULT_MAX_DURATION
    grid_points: int = MIN_GRID_POINTS

    @classmethod
    def nutation_profile(cls, sys: SpinSystem, **kwargs) -> "PreparationPulseSpec":
        r"""Spec whose weights make the irradiated levels rotate as one spin.

        The `d - 1` irradiated levels form a multiplet of spin `J = I - 1/2`;
        weights `sqrt((J + m)(J - m + 1))`, normalized to a maximum of one,
        turn the pulse into a rotation of that multiplet, which equalizes the
        populations exactly at a quarter turn.

        Example:
            >>> spec = PreparationPulseSpec.nutation_profile(SpinSystem())
            >>> spec.relative_amplitudes  # close to (0.7, 0.9, 1, 1, 0.9, 0.7)
        """
        J = sys.spin - 0.5
        m = J - torch.arange(sys.dim - 2, dtype=REAL_DTYPE)
        weights = torch.sqrt((J + m) * (J - m + 1))
        weights = weights / weights.max()
        return cls(relative_amplitudes=tuple(weights.tolist()), **kwargs)

    def validate(self, sys: SpinSystem) -> "PreparationPulseSpec":
        if len(self.relative_amplitudes) != sys.dim - 2:
            raise InvalidArgumentError(
                f"Expected {sys.dim - 2} relative amplitudes for {sys}, got "
                f"{len(self.relative_amplitudes)}."
            )
        if any(not r > 0 for r in self.relative_amplitudes):
            raise InvalidArgumentError(
                f"Relative amplitudes must be positive: {self.relative_amplitudes}."
            )
        if self.base_strength < 0:
            raise InvalidArgumentError(
                f"Base strength must be >= 0, got {self.base_strength}."
            )
        if not self.max_duration > 0:
            raise InvalidArgumentError(
                f"Maximum duration must be positive, got {self.max_duration}."
            )
        if self.grid_points < MIN_GRID_POINTS:
            raise InvalidArgumentError(
                f"The crossing search needs at least {MIN_GRID_POINTS} grid points."
            )
        return self


class Crossing(NamedTuple):
    duration: float
    spread: float


class PseudopureState(NamedTuple):
    r"""Prepared deviation matrix.

    Attributes:
        density: The diagonal `d x d` deviation matrix.
        crossing: The crossing the preparation pulse was stopped at.
        excess: Site-0 population minus the mean of the other levels.
    """

    density: Tensor
    crossing: Crossing
    excess: float


def preparation_pulse(
    spec: PreparationPulseSpec, sys: SpinSystem, duration: Optional[float] = None
) -> ShapedPulse:
    r"""Build the preparation pulse.

    Args:
        spec: The pulse shape.
        sys: The spin system.
        duration: Pulse length (s); defaults to `spec.max_duration`.

    Returns:
        A ShapedPulse with one harmonic on every transition from 1 to d - 2
        and amplitude `base_strength * r_k / d_k`.
    """
    spec.validate(sys)
    table = sys.transitions
    harmonics = tuple(
        RfHarmonic(
            frequency_hz=float(table.frequencies_hz[k]),
            amplitude=spec.base_strength * r / float(table.matrix_elements[k]),
        )
        for k, r in zip(range(1, sys.dim - 1), spec.relative_amplitudes)
    )
    if duration is None:
        duration = spec.max_duration
    return ShapedPulse(harmonics=harmonics, duration=float(duration)).validate()


def population_spread(rho: Tensor) -> Tensor:
    r"""`max - min` of the populations of levels 1 to d - 1."""
    p = populations(rho)[..., 1:]
    return p.max(dim=-1).values - p.min(dim=-1).values


def _grid_states_ideal(pulse: ShapedPulse, sys: SpinSystem, t: Tensor) -> Tensor:
    E, V = torch.linalg.eigh(effective_hamiltonian_rwa(pulse, sys))
    U = spectral_propagator(E, V, t)
    return conjugate_by(U, equilibrium_state(sys))


def _grid_states_full(
    pulse: ShapedPulse, sys: SpinSystem, mode: EvolutionMode, t: Tensor
) -> Tensor:
    # Propagate once across the grid, recording the state at every sample.
    spacing = float(t[0])
    step = default_step(pulse, sys) if mode.max_step is None else mode.max_step
    step = min(step, max_allowed_step(pulse, sys), spacing)
    n_sub = int(math.ceil(spacing / step - 1e-9))
    dt = spacing / n_sub
    midpoints = (torch.arange(t.numel() * n_sub, dtype=REAL_DTYPE) + 0.5) * dt
    Us = torch.linalg.matrix_exp(-1j * dt * full_hamiltonian(pulse, sys, midpoints))
    U = torch.eye(sys.dim, dtype=COMPLEX_DTYPE)
    states = []
    rho0 = equilibrium_state(sys)
    for j, U_j in enumerate(Us):
        U = U_j @ U
        if (j + 1) % n_sub == 0:
            states.append(conjugate_by(U, rho0))
    return torch.stack(states)


def find_crossing(
    spec: PreparationPulseSpec,
    sys: SpinSystem,
    mode: EvolutionMode = EvolutionMode(),
) -> Crossing:
    r"""Find the pulse length that equalizes the irradiated populations.

    The spread of the populations of levels 1 to d - 1 is sampled on a uniform
    grid over `(0, max_duration]`; the grid minimum is then refined by a
    golden-section search within its two neighbors.

    Args:
        spec: The preparation pulse shape.
        sys: The spin system.
        mode: Evolution regime.

    Returns:
        The Crossing (duration and remaining spread).

    Raises:
        NoCrossingError: If the grid minimum lies on the edge of the grid.
    """
    pulse = preparation_pulse(spec, sys)
    n = spec.grid_points
    t = spec.max_duration * torch.arange(1, n + 1, dtype=REAL_DTYPE) / n
    if mode.kind == EvolutionKind.IDEAL_RWA:
        states = _grid_states_ideal(pulse, sys, t)
    else:
        states = _grid_states_full(pulse, sys, mode, t)
    spreads = population_spread(states)
    i = int(spreads.argmin())
    if i == 0 or i == n - 1:
        raise NoCrossingError(
            f"No interior population crossing within {spec.max_duration:.3e} s "
            f"(grid minimum at the edge, spread {float(spreads[i]):.3e})."
        )
    rho_eq = equilibrium_state(sys)

    def spread_at(duration: float) -> float:
        rho = evolve(rho_eq, pulse.with_duration(duration), sys, mode)
        return float(population_spread(rho))

    t_lo, t_mid, t_hi = float(t[i - 1]), float(t[i]), float(t[i + 1])
    try:
        res = minimize_scalar(
            spread_at,
            bracket=(t_lo, t_mid, t_hi),
            method="golden",
            tol=CROSSING_XTOL / (2 * t_mid),
        )
        duration, spread = float(res.x), float(res.fun)
        if not t_lo <= duration <= t_hi or spread > float(spreads[i]):
            duration, spread = t_mid, float(spreads[i])
    except ValueError:
        # the grid minimum is flat against a neighbor; keep it
        duration, spread = t_mid, float(spreads[i])
    logger.debug(f"Population crossing at {duration:.6e} s, spread {spread:.3e}.")
    return Crossing(duration=duration, spread=spread)


def crush_coherences(rho: Tensor) -> Tensor:
    r"""Remove all coherences, as a field-gradient crusher does."""
    return diagonal_part(rho)


def prepare_pseudopure(
    sys: SpinSystem,
    spec: Optional[PreparationPulseSpec] = None,
    mode: EvolutionMode = EvolutionMode(),
) -> PseudopureState:
    r"""Prepare the pseudopure state that reads as site 0 occupied.

    Args:
        sys: The spin system.
        spec: The preparation pulse shape; defaults to PreparationPulseSpec().
        mode: Evolution regime of the preparation pulse.

    Returns:
        The PseudopureState.

    Example:
        >>> sys = SpinSystem()
        >>> state = prepare_pseudopure(sys, PreparationPulseSpec.nutation_profile(sys))
        >>> state.excess  # about 4
    """
    spec = PreparationPulseSpec() if spec is None else spec
    crossing = find_crossing(spec, sys, mode)
    pulse = preparation_pulse(spec, sys, duration=crossing.duration)
    rho = crush_coherences(evolve(equilibrium_state(sys), pulse, sys, mode))
    p = populations(rho)
    excess = float(p[0] - p[1:].mean())
    logger.info(
        f"Prepared pseudopure state: pulse {crossing.duration * 1e6:.2f} us, "
        f"spread {crossing.spread:.3e}, excess {excess:.4f}."
    )
    return PseudopureState(density=rho, crossing=crossing, excess=excess)


def chain_populations(deviation_populations: Tensor, excess: float) -> Tensor:
    r"""Map level deviation populations to chain-site populations.

    Args:
        deviation_populations: A `(b) x d` tensor of level populations (site
            order).
        excess: Excess of the prepared site-0 population.

    Returns:
        A `(b) x d` tensor `(p - mean(p)) / excess + 1 / d`; each row sums to 1.
    """
    if excess == 0:
        raise InvalidArgumentError("The pseudopure excess must be nonzero.")
    p = torch.as_tensor(deviation_populations, dtype=REAL_DTYPE)
    d = p.shape[-1]
    return (p - p.mean(dim=-1, keepdim=True)) / excess + 1.0 / d

