#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from .config import ExperimentConfig, config_from_dict, dump_config, load_config
from .sequence import (
    EquilibriumReport,
    ExperimentRecord,
    SequenceContext,
    SweepSummary,
    emit_equilibrium_report,
    emit_landmark_spectra,
    emit_sweep,
    prepare_context,
    run_sequence,
    run_sweep,
    selectivity_scan,
)


__all__ = [
    "EquilibriumReport",
    "ExperimentConfig",
    "ExperimentRecord",
    "SequenceContext",
    "SweepSummary",
    "config_from_dict",
    "dump_config",
    "emit_equilibrium_report",
    "emit_landmark_spectra",
    "emit_sweep",
    "load_config",
    "prepare_context",
    "run_sequence",
    "run_sweep",
    "selectivity_scan",
]
