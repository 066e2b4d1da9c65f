#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Fourier transform, spectrum phasing and peak integration.
"""

import csv
from typing import NamedTuple

import torch
from torch import Tensor

from ..spins.system import SpinSystem
from .acquisition import AcquisitionConfig, FreeInductionDecay, peak_windows


class Spectrum(NamedTuple):
    r"""Real absorption spectrum on an ascending frequency axis (Hz)."""

    frequency_hz: Tensor
    intensity: Tensor


def fourier_transform(
    fid: FreeInductionDecay, halve_first_point: bool = True
) -> Spectrum:
    r"""Complex spectrum of an FID, scaled by the dwell time.

    With `halve_first_point=False` the result satisfies Parseval's relation
    `sum |S|^2 df = dwell * sum |s|^2`.

    Args:
        fid: The free induction decay; `signal` may carry batch dimensions.
        halve_first_point: Halve `s(0)`, which makes the discrete transform
            match the one-sided continuous integral.

    Returns:
        A Spectrum with complex `intensity` on the shifted (ascending) axis.
    """
    n = fid.signal.shape[-1]
    dwell = float(fid.time[1] - fid.time[0])
    s = fid.signal
    if halve_first_point:
        s = s.clone()
        s[..., 0] = 0.5 * s[..., 0]
    S = torch.fft.fftshift(torch.fft.fft(s, dim=-1), dim=-1) * dwell
    f = torch.fft.fftshift(torch.fft.fftfreq(n, d=dwell, dtype=fid.time.dtype))
    return Spectrum(frequency_hz=f, intensity=S)


def spectrum(fid: FreeInductionDecay) -> Spectrum:
    r"""Absorption-mode spectrum of an FID.

    The FID is Fourier transformed with the first point halved, then a
    zero-order phase of `-i` turns the reading-pulse coherences into positive
    absorption lines.

    Example:
        >>> spec = spectrum(acquire(equilibrium_state(sys), sys))
    """
    S = fourier_transform(fid)
    return Spectrum(frequency_hz=S.frequency_hz, intensity=(-1j * S.intensity).real)


def integrate_peaks(
    spec: Spectrum, acq: AcquisitionConfig, sys: SpinSystem
) -> Tensor:
    r"""Trapezoidal integral of the spectrum over every peak window.

    Args:
        spec: A real spectrum; `intensity` may carry batch dimensions.
        acq: Acquisition settings (windows).
        sys: The spin system.

    Returns:
        A `(b) x 2I` tensor of integrals in transition order.

    Raises:
        ConfigurationError: If the windows overlap.
    """
    integrals = []
    for lo, hi in peak_windows(sys, acq):
        mask = (spec.frequency_hz >= lo) & (spec.frequency_hz <= hi)
        if int(mask.sum()) < 2:
            integrals.append(torch.zeros(spec.intensity.shape[:-1]).to(spec.intensity))
            continue
        integrals.append(
            torch.trapz(spec.intensity[..., mask], spec.frequency_hz[mask], dim=-1)
        )
    return torch.stack(integrals, dim=-1)


def write_spectrum(path: str, spec: Spectrum) -> None:
    r"""Write a real spectrum as CSV with header `freq_hz,intensity`."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["freq_hz", "intensity"])
        for nu, y in zip(spec.frequency_hz.tolist(), spec.intensity.tolist()):
            writer.writerow([f"{nu:.10g}", f"{y:.10g}"])


def write_fid(path: str, fid: FreeInductionDecay) -> None:
    r"""Write an FID as CSV with header `t_s,re,im`."""
    t = fid.time.tolist()
    re = fid.signal.real.tolist()
    im = fid.signal.imag.tolist()
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["t_s", "re", "im"])
        for row in zip(t, re, im):
            writer.writerow([f"{v:.10g}" for v in row])
