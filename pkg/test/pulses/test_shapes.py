#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

import math
import unittest

import torch
from spinchain.exceptions.errors import InvalidArgumentError, InvalidPulseError
from spinchain.pulses.shapes import (
    RfHarmonic,
    ShapedPulse,
    chain_emulation_pulse,
    dimensionless_time,
    duration_for_tau,
)
from spinchain.spins.system import SpinSystem


class TestShapedPulse(unittest.TestCase):
    def test_validate(self):
        pulse = ShapedPulse(
            harmonics=(RfHarmonic(0.0, 1.0), RfHarmonic(6e3, 2.0, 0.5)), duration=1e-4
        )
        self.assertIs(pulse.validate(), pulse)
        self.assertEqual(pulse.max_amplitude, 2.0)
        self.assertEqual(pulse.frequencies.tolist(), [0.0, 6e3])
        self.assertEqual(pulse.phases.tolist(), [0.0, 0.5])
        with self.assertRaises(InvalidPulseError):
            pulse.with_duration(-1.0).validate()
        with self.assertRaises(InvalidPulseError):
            ShapedPulse((RfHarmonic(0.0, 1.0), RfHarmonic(0.0, 2.0)), 1e-4).validate()
        with self.assertRaises(InvalidPulseError):
            ShapedPulse((RfHarmonic(0.0, -1.0),), 1e-4).validate()
        self.assertEqual(ShapedPulse((), 0.0).max_amplitude, 0.0)

    def test_phase_shift_and_duration(self):
        pulse = ShapedPulse((RfHarmonic(0.0, 1.0, 0.25), RfHarmonic(6e3, 1.0)), 1e-4)
        shifted = pulse.with_phase_shift(math.pi / 2)
        self.assertEqual(shifted.phases.tolist(), [0.25 + math.pi / 2, math.pi / 2])
        self.assertEqual(shifted.amplitudes.tolist(), pulse.amplitudes.tolist())
        self.assertEqual(pulse.with_duration(2e-4).duration, 2e-4)
        # the original is untouched
        self.assertEqual(pulse.duration, 1e-4)


class TestChainEmulationPulse(unittest.TestCase):
    def test_chain_emulation_pulse(self):
        sys = SpinSystem()
        pulse = chain_emulation_pulse(sys, omega1=5.0e3, duration=600e-6, phase=0.3)
        self.assertEqual(len(pulse.harmonics), 7)
        self.assertTrue(torch.equal(pulse.frequencies, sys.transitions.frequencies_hz))
        products = pulse.amplitudes * sys.transitions.matrix_elements
        self.assertTrue(torch.allclose(products, torch.full_like(products, 5.0e3)))
        self.assertTrue(all(h.phase == 0.3 for h in pulse.harmonics))
        self.assertEqual(pulse.duration, 600e-6)
        zero = chain_emulation_pulse(sys, omega1=0.0, duration=1e-4)
        self.assertEqual(zero.max_amplitude, 0.0)
        with self.assertRaises(InvalidArgumentError):
            chain_emulation_pulse(sys, omega1=-1.0, duration=1e-4)

    def test_dimensionless_time(self):
        self.assertAlmostEqual(dimensionless_time(5.0e3, 600e-6), 1.5, places=12)
        self.assertAlmostEqual(duration_for_tau(5.0e3, 1.5), 600e-6, places=15)
        self.assertEqual(duration_for_tau(5.0e3, 0.0), 0.0)
        with self.assertRaises(InvalidArgumentError):
            duration_for_tau(0.0, 1.0)
