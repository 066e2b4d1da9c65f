#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

import math
import os
import tempfile
import unittest

import torch
from spinchain.exceptions.errors import ConfigurationError
from spinchain.preparation import PreparationPulseSpec, prepare_pseudopure
from spinchain.readout.acquisition import AcquisitionConfig, acquire, synthesize_fid
from spinchain.readout.spectrum import (
    fourier_transform,
    integrate_peaks,
    spectrum,
    write_fid,
    write_spectrum,
)
from spinchain.relaxation import RelaxationModel
from spinchain.spins.system import SpinSystem, equilibrium_state
from spinchain.utils.sampling import manual_seed, random_density_matrix


EQUILIBRIUM_RATIOS = (7.0, 12.0, 15.0, 16.0, 15.0, 12.0, 7.0)


def central_coherence(dim=8, value=0.25j):
    rho = torch.zeros(dim, dim, dtype=torch.cdouble)
    rho[3, 4] = value
    rho[4, 3] = value.conjugate()
    return rho


class TestFourierTransform(unittest.TestCase):
    def test_axis(self):
        sys = SpinSystem()
        acq = AcquisitionConfig()
        S = fourier_transform(synthesize_fid(central_coherence(), sys, acq=acq))
        f = S.frequency_hz
        self.assertEqual(f.shape, torch.Size([8192]))
        self.assertEqual(f.dtype, torch.double)
        self.assertTrue((f[1:] > f[:-1]).all())
        self.assertAlmostEqual(f[0].item(), -50e3, places=6)
        df = 1 / (8192 * 1e-5)
        self.assertAlmostEqual((f[1] - f[0]).item(), df, places=9)

    def test_parseval(self):
        sys = SpinSystem()
        acq = AcquisitionConfig(n_points=2048)
        with manual_seed(8):
            rho = random_density_matrix(8)[0]
        fid = synthesize_fid(rho, sys, RelaxationModel(), acq)
        S = fourier_transform(fid, halve_first_point=False)
        df = (S.frequency_hz[1] - S.frequency_hz[0]).item()
        lhs = (S.intensity.abs() ** 2).sum().item() * df
        rhs = acq.dwell * (fid.signal.abs() ** 2).sum().item()
        self.assertAlmostEqual(lhs / rhs, 1.0, places=10)


class TestSpectrum(unittest.TestCase):
    def test_lorentzian_line(self):
        sys = SpinSystem()
        acq = AcquisitionConfig(broadening_hz=0.0)
        lines = RelaxationModel([200.0] * 7)
        spec = spectrum(synthesize_fid(central_coherence(), sys, lines, acq))
        df = (spec.frequency_hz[1] - spec.frequency_hz[0]).item()
        peak = int(spec.intensity.argmax())
        self.assertLess(abs(spec.frequency_hz[peak].item()), df)
        self.assertGreater(spec.intensity[peak].item(), 0.0)
        above = spec.intensity >= 0.5 * spec.intensity[peak]
        fwhm = int(above.sum()) * df
        self.assertLess(abs(fwhm - 200.0), 2 * df)
        # area of the absorption line is half the initial amplitude
        area = torch.trapz(spec.intensity, spec.frequency_hz).item()
        self.assertAlmostEqual(area, 0.5, delta=0.01)

    def test_equilibrium_spectrum(self):
        sys = SpinSystem()
        acq = AcquisitionConfig()
        spec = spectrum(acquire(equilibrium_state(sys), sys, RelaxationModel(), acq))
        integrals = integrate_peaks(spec, acq, sys)
        self.assertEqual(integrals.shape, torch.Size([7]))
        self.assertTrue((integrals > 0).all())
        ratios = 16.0 * integrals / integrals[3]
        for r, e in zip(ratios.tolist(), EQUILIBRIUM_RATIOS):
            self.assertLess(abs(r - e) / e, 0.02)
        # maxima sit one splitting apart
        df = (spec.frequency_hz[1] - spec.frequency_hz[0]).item()
        maxima = []
        for f in sys.transitions.frequencies_hz.tolist():
            mask = (spec.frequency_hz - f).abs() <= 3e3
            idx = int(spec.intensity[mask].argmax())
            maxima.append(spec.frequency_hz[mask][idx].item())
        for lo, hi in zip(maxima[:-1], maxima[1:]):
            self.assertLessEqual(abs(hi - lo - 6e3), df + 1e-9)

    def test_pseudopure_spectrum(self):
        sys = SpinSystem()
        acq = AcquisitionConfig()
        prepared = prepare_pseudopure(sys, PreparationPulseSpec.nutation_profile(sys))
        spec = spectrum(acquire(prepared.density, sys, RelaxationModel(), acq))
        integrals = integrate_peaks(spec, acq, sys)
        main = integrals[0].abs().item()
        self.assertGreater(main, 0.0)
        self.assertLess(integrals[1:].abs().max().item(), 0.03 * main)

    def test_batched_integrals(self):
        sys = SpinSystem()
        acq = AcquisitionConfig(n_points=4096, dwell=2e-5)
        rho = torch.stack([equilibrium_state(sys), 2 * equilibrium_state(sys)])
        integrals = integrate_peaks(spectrum(acquire(rho, sys, acq=acq)), acq, sys)
        self.assertEqual(integrals.shape, torch.Size([2, 7]))
        self.assertTrue(torch.allclose(integrals[1], 2 * integrals[0], rtol=1e-10))

    def test_overlapping_windows(self):
        sys = SpinSystem()
        acq = AcquisitionConfig(window_half_width_hz=4e3)
        spec = spectrum(acquire(equilibrium_state(sys), sys))
        with self.assertRaises(ConfigurationError):
            integrate_peaks(spec, acq, sys)


class TestWriters(unittest.TestCase):
    def test_write_spectrum_and_fid(self):
        sys = SpinSystem()
        acq = AcquisitionConfig(n_points=64, dwell=2e-5)
        fid = acquire(equilibrium_state(sys), sys, acq=acq)
        spec = spectrum(fid)
        with tempfile.TemporaryDirectory() as tmp:
            spec_path = os.path.join(tmp, "spectrum.csv")
            fid_path = os.path.join(tmp, "fid.csv")
            write_spectrum(spec_path, spec)
            write_fid(fid_path, fid)
            with open(spec_path) as f:
                spec_lines = f.read().splitlines()
            with open(fid_path) as f:
                fid_lines = f.read().splitlines()
        self.assertEqual(spec_lines[0], "freq_hz,intensity")
        self.assertEqual(len(spec_lines), 65)
        self.assertEqual(fid_lines[0], "t_s,re,im")
        self.assertEqual(len(fid_lines), 65)
        t, re, im = (float(v) for v in fid_lines[1].split(","))
        self.assertEqual(t, 0.0)
        self.assertTrue(math.isclose(im, fid.signal[0].imag.item(), rel_tol=1e-9))
