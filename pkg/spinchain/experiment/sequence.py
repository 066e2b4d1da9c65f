#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
The full pulse sequence and the sweeps built on it.

One sequence run is: pseudopure preparation, chain emulation pulse (phase
cycled), reading pulse, FID, spectrum, peak integration, reconstruction of the
level populations and their conversion to chain-site populations. The exact
chain dynamics at the same dimensionless time is evaluated alongside.
"""

import logging
import math
import os
import warnings
from typing import List, NamedTuple, Optional, Sequence, Tuple

import torch
from torch import Tensor

from ..chain import reference_populations
from ..exceptions.warnings import DurationWarning, SelectivityWarning
from ..preparation import PseudopureState, chain_populations, prepare_pseudopure
from ..pulses.evolution import EvolutionMode, evolve
from ..pulses.shapes import chain_emulation_pulse, duration_for_tau
from ..readout.acquisition import acquire, phase_cycled_state
from ..readout.calibration import (
    ReadoutCalibration,
    calibrate_readout,
    populations_from_integrals,
)
from ..readout.spectrum import Spectrum, integrate_peaks, spectrum, write_spectrum
from ..relaxation import RelaxationModel
from ..spins.system import equilibrium_state
from ..utils.linalg import REAL_DTYPE, populations
from .config import ExperimentConfig
from .io import write_level_populations, write_peak_table, write_sweep_table


logger = logging.getLogger(__name__)


class ExperimentRecord(NamedTuple):
    r"""One point of a sweep.

    Attributes:
        tau: Dimensionless chain time.
        duration: Length of the chain emulation pulse (s).
        recovered: Chain-site populations read from the spectrum.
        reference: Exact chain populations at `tau`.
        abs_error: `|recovered - reference|` per site.
        spectrum: The spectrum the populations were read from, if kept.
    """

    tau: float
    duration: float
    recovered: Tensor
    reference: Tensor
    abs_error: Tensor
    spectrum: Optional[Spectrum] = None


class SweepSummary(NamedTuple):
    max_error: float
    rms_error: float


class SequenceContext(NamedTuple):
    r"""State shared by all points of a sweep.

    Attributes:
        prepared: The pseudopure state.
        calibration: The readout calibration.
        relax: Relaxation during the pulses (None if switched off).
        lines: Line widths seen by the receiver.
    """

    prepared: PseudopureState
    calibration: ReadoutCalibration
    relax: Optional[RelaxationModel]
    lines: RelaxationModel


class EquilibriumReport(NamedTuple):
    spectrum: Spectrum
    integrals: Tensor
    ratios: Tensor


def prepare_context(cfg: ExperimentConfig) -> SequenceContext:
    r"""Prepare the pseudopure state and calibrate the readout once."""
    cfg.validate()
    sys = cfg.system()
    prepared = prepare_pseudopure(sys, cfg.preparation_spec(sys), cfg.evolution_mode())
    lines = cfg.line_model()
    calibration = calibrate_readout(
        sys, lines, cfg.acquisition, full_response=cfg.full_response
    )
    return SequenceContext(
        prepared=prepared,
        calibration=calibration,
        relax=cfg.relaxation_model(),
        lines=lines,
    )


def evolved_state(
    cfg: ExperimentConfig, tau: float, context: SequenceContext
) -> Tuple[Tensor, float]:
    r"""Phase-cycled state after the chain emulation pulse for time `tau`.

    Returns:
        The transient-averaged deviation matrix and the pulse duration (s).
    """
    sys = cfg.system()
    duration = duration_for_tau(cfg.omega1_rad_s, tau)
    if duration > cfg.max_duration_s:
        warnings.warn(
            f"Evolution pulse of {duration * 1e6:.1f} us exceeds the configured "
            f"maximum of {cfg.max_duration_s * 1e6:.1f} us.",
            DurationWarning,
        )
    pulse = chain_emulation_pulse(sys, cfg.omega1_rad_s, duration)
    rho = phase_cycled_state(
        context.prepared.density,
        pulse,
        sys,
        cfg.evolution_mode(),
        context.relax,
        transients=cfg.acquisition.transients,
        phase_steps=cfg.acquisition.phase_steps,
    )
    return rho, duration


def run_sequence(
    cfg: ExperimentConfig,
    tau: float,
    context: Optional[SequenceContext] = None,
    keep_spectrum: bool = False,
) -> ExperimentRecord:
    r"""Run the pulse sequence for one dimensionless time.

    Args:
        cfg: The experiment configuration.
        tau: Dimensionless chain time (nonnegative).
        context: Shared preparation and calibration; computed if omitted.
        keep_spectrum: Attach the spectrum to the record.

    Returns:
        The ExperimentRecord.

    Example:
        >>> record = run_sequence(ExperimentConfig(), 0.13)
        >>> record.recovered[0]  # about 0.98
    """
    context = prepare_context(cfg) if context is None else context
    sys = cfg.system()
    acq = cfg.acquisition
    rho, duration = evolved_state(cfg, tau, context)
    spec = spectrum(acquire(rho, sys, context.lines, acq))
    integrals = integrate_peaks(spec, acq, sys)
    levels = populations_from_integrals(integrals, sys, context.calibration)
    recovered = chain_populations(levels, context.prepared.excess)
    reference = reference_populations([tau], n_sites=sys.dim)[0]
    return ExperimentRecord(
        tau=float(tau),
        duration=duration,
        recovered=recovered,
        reference=reference,
        abs_error=(recovered - reference).abs(),
        spectrum=spec if keep_spectrum else None,
    )


def summarize(records: Sequence[ExperimentRecord]) -> SweepSummary:
    r"""Largest and root-mean-square error over all sites and sweep points."""
    if not records:
        return SweepSummary(max_error=0.0, rms_error=0.0)
    errors = torch.stack([r.abs_error for r in records])
    return SweepSummary(
        max_error=float(errors.max()), rms_error=float(errors.pow(2).mean().sqrt())
    )


def run_sweep(
    cfg: ExperimentConfig, context: Optional[SequenceContext] = None
) -> Tuple[List[ExperimentRecord], SweepSummary]:
    r"""Run the sequence for every point of the tau grid, in grid order."""
    cfg.validate()
    taus = cfg.taus().tolist()
    if not taus:
        return [], SweepSummary(max_error=0.0, rms_error=0.0)
    context = prepare_context(cfg) if context is None else context
    records = []
    for i, tau in enumerate(taus):
        records.append(run_sequence(cfg, tau, context))
        logger.info(
            f"tau {tau:.4f} ({i + 1}/{len(taus)}): max error "
            f"{float(records[-1].abs_error.max()):.3e}"
        )
    summary = summarize(records)
    logger.info(
        f"Sweep done: max error {summary.max_error:.3e}, RMS {summary.rms_error:.3e}."
    )
    return records, summary


def emit_sweep(
    cfg: ExperimentConfig, out_dir: str, context: Optional[SequenceContext] = None
) -> Tuple[List[ExperimentRecord], SweepSummary]:
    r"""Run the sweep and write `populations.csv` into `out_dir`."""
    records, summary = run_sweep(cfg, context)
    os.makedirs(out_dir, exist_ok=True)
    write_sweep_table(os.path.join(out_dir, "populations.csv"), records)
    return records, summary


def emit_equilibrium_report(cfg: ExperimentConfig, out_dir: str) -> EquilibriumReport:
    r"""Simulate the equilibrium spectrum and tabulate its peaks.

    Writes `equilibrium_spectrum.csv` and `equilibrium_peaks.csv` into
    `out_dir`. Ratios are scaled so the central peak reads `d_c^2` (16 for a
    spin 7/2).
    """
    cfg.validate()
    sys = cfg.system()
    acq = cfg.acquisition
    spec = spectrum(acquire(equilibrium_state(sys), sys, cfg.line_model(), acq))
    integrals = integrate_peaks(spec, acq, sys)
    central = sys.n_transitions // 2
    d2 = sys.transitions.matrix_elements ** 2
    ratios = integrals / integrals[central] * d2[central]
    os.makedirs(out_dir, exist_ok=True)
    write_spectrum(os.path.join(out_dir, "equilibrium_spectrum.csv"), spec)
    write_peak_table(
        os.path.join(out_dir, "equilibrium_peaks.csv"),
        sys.transitions.frequencies_hz,
        integrals,
        ratios,
    )
    logger.info(
        "Equilibrium ratios: " + ":".join(f"{r:.2f}" for r in ratios.tolist())
    )
    return EquilibriumReport(spectrum=spec, integrals=integrals, ratios=ratios)


def emit_landmark_spectra(
    cfg: ExperimentConfig,
    out_dir: str,
    taus: Sequence[float] = (0.13, 1.3),
    context: Optional[SequenceContext] = None,
) -> List[ExperimentRecord]:
    r"""Spectra and level populations at selected chain times.

    For every `tau` writes `spectrum_tau_<tau>.csv` and
    `levels_tau_<tau>.csv` (`level,m,population`, chain-site populations).
    """
    cfg.validate()
    context = prepare_context(cfg) if context is None else context
    sys = cfg.system()
    os.makedirs(out_dir, exist_ok=True)
    records = []
    for tau in taus:
        record = run_sequence(cfg, tau, context, keep_spectrum=True)
        tag = f"{tau:.2f}"
        spec_path = os.path.join(out_dir, f"spectrum_tau_{tag}.csv")
        write_spectrum(spec_path, record.spectrum)
        write_level_populations(
            os.path.join(out_dir, f"levels_tau_{tag}.csv"),
            sys.magnetic_numbers,
            record.recovered,
        )
        records.append(record)
    return records


def selectivity_scan(
    cfg: ExperimentConfig,
    omega1_hz: Sequence[float] = (250.0, 500.0, 1000.0, 2000.0),
    tau: float = 1.0,
    prepared: Optional[PseudopureState] = None,
) -> Tensor:
    r"""Deviation of FULL from IDEAL_RWA dynamics as the pulse strength grows.

    Both regimes start from the same pseudopure state and run without
    relaxation; the chain-site populations are compared directly.

    Args:
        cfg: The experiment configuration (spin system and preparation).
        omega1_hz: Nutation frequencies `omega1 / 2 pi` to scan (Hz).
        tau: Dimensionless chain time.
        prepared: Pseudopure state to start from; prepared in IDEAL_RWA mode
            if omitted.

    Returns:
        A tensor with the RMS population deviation per nutation frequency.
    """
    cfg.validate()
    sys = cfg.system()
    if prepared is None:
        prepared = prepare_pseudopure(sys, cfg.preparation_spec(sys))
    full = EvolutionMode.full(cfg.max_step_s)
    deviations = []
    for nu in omega1_hz:
        omega1 = 2 * math.pi * nu
        pulse = chain_emulation_pulse(sys, omega1, duration_for_tau(omega1, tau))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SelectivityWarning)
            ideal = evolve(prepared.density, pulse, sys, EvolutionMode.ideal())
        exact = evolve(prepared.density, pulse, sys, full)
        p_ideal = chain_populations(populations(ideal), prepared.excess)
        p_full = chain_populations(populations(exact), prepared.excess)
        deviations.append(float((p_full - p_ideal).pow(2).mean().sqrt()))
        logger.info(f"omega1 / 2pi = {nu:.1f} Hz: RMS deviation {deviations[-1]:.3e}")
    return torch.tensor(deviations, dtype=REAL_DTYPE)
