#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from .acquisition import (
    AcquisitionConfig,
    FreeInductionDecay,
    acquire,
    peak_windows,
    phase_cycled_state,
    reading_pulse,
    synthesize_fid,
)
from .calibration import (
    ReadoutCalibration,
    calibrate_readout,
    populations_from_integrals,
    read_integrals,
)
from .spectrum import (
    Spectrum,
    fourier_transform,
    integrate_peaks,
    spectrum,
    write_fid,
    write_spectrum,
)


__all__ = [
    "AcquisitionConfig",
    "FreeInductionDecay",
    "ReadoutCalibration",
    "Spectrum",
    "acquire",
    "calibrate_readout",
    "fourier_transform",
    "integrate_peaks",
    "peak_windows",
    "phase_cycled_state",
    "populations_from_integrals",
    "read_integrals",
    "reading_pulse",
    "spectrum",
    "synthesize_fid",
    "write_fid",
    "write_spectrum",
]
