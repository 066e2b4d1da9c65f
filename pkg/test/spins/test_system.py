#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

import math
import unittest

import torch
from spinchain.exceptions.errors import InvalidArgumentError
from spinchain.spins.system import (
    SpinSystem,
    diagonal_state,
    equilibrium_state,
    static_hamiltonian,
    transition_frequencies_from_energies,
)
from spinchain.utils.linalg import populations, trace


class TestSpinSystem(unittest.TestCase):
    def test_defaults(self):
        sys = SpinSystem()
        self.assertEqual(sys.spin, 3.5)
        self.assertEqual(sys.splitting_hz, 6.0e3)
        self.assertEqual(sys.dim, 8)
        self.assertEqual(sys.n_transitions, 7)
        freqs = sys.transitions.frequencies_hz.tolist()
        self.assertEqual(freqs, [-18e3, -12e3, -6e3, 0.0, 6e3, 12e3, 18e3])
        self.assertEqual(sys, SpinSystem(3.5, 6.0e3))
        self.assertEqual(hash(sys), hash(SpinSystem(3.5, 6.0e3)))
        self.assertNotEqual(sys, SpinSystem(3.5, 5.0e3))
        self.assertIn("3.5", repr(sys))

    def test_level_map(self):
        sys = SpinSystem()
        for site in range(8):
            self.assertEqual(sys.m_to_site(sys.site_to_m(site)), site)
        self.assertEqual(sys.site_to_m(0), 3.5)
        self.assertEqual(sys.site_to_m(7), -3.5)
        with self.assertRaises(InvalidArgumentError):
            sys.site_to_m(8)
        with self.assertRaises(InvalidArgumentError):
            sys.m_to_site(0.0)
        with self.assertRaises(InvalidArgumentError):
            sys.m_to_site(4.5)

    def test_invalid_system(self):
        with self.assertRaises(InvalidArgumentError):
            SpinSystem(spin=1.2)
        with self.assertRaises(InvalidArgumentError):
            SpinSystem(splitting_hz=-1.0)

    def test_transition_table(self):
        table = SpinSystem().transitions
        self.assertEqual(table.index_of(-18e3), 0)
        self.assertEqual(table.index_of(0.0), 3)
        self.assertEqual(table.index_of(6e3 + 1e-7), 4)
        self.assertIsNone(table.index_of(3e3))
        # zero splitting makes every transition degenerate
        self.assertIsNone(SpinSystem(splitting_hz=0.0).transitions.index_of(0.0))

    def test_static_hamiltonian(self):
        sys = SpinSystem()
        H = static_hamiltonian(sys)
        self.assertEqual(H.dtype, torch.double)
        self.assertEqual(torch.count_nonzero(H - torch.diag(torch.diagonal(H))), 0)
        self.assertAlmostEqual(H[0, 0].item(), math.pi * 6.0e3 * 3.5 ** 2, places=6)
        f = transition_frequencies_from_energies(H)
        self.assertTrue(torch.allclose(f, sys.transitions.frequencies_hz, atol=1e-8))
        spacing = f[1:] - f[:-1]
        self.assertTrue(torch.allclose(spacing, torch.full_like(spacing, 6.0e3)))
        self.assertTrue(torch.allclose(f, -f.flip(0), atol=1e-8))
        flat = SpinSystem(splitting_hz=0.0)
        f0 = transition_frequencies_from_energies(static_hamiltonian(flat))
        self.assertEqual(f0.abs().max().item(), 0.0)

    def test_equilibrium_state(self):
        sys = SpinSystem()
        rho = equilibrium_state(sys)
        p = populations(rho)
        self.assertEqual(p.tolist(), [3.5, 2.5, 1.5, 0.5, -0.5, -1.5, -2.5, -3.5])
        self.assertEqual(trace(rho).abs().item(), 0.0)
        self.assertEqual(torch.count_nonzero(rho - torch.diag_embed(p).to(rho)), 0)
        d2 = sys.transitions.matrix_elements ** 2
        areas = d2 * (p[:-1] - p[1:])
        expected = torch.tensor([7, 12, 15, 16, 15, 12, 7], dtype=torch.double)
        self.assertTrue(torch.allclose(areas, expected, atol=1e-12))

    def test_diagonal_state(self):
        rho = diagonal_state(torch.tensor([1.0, -1.0]))
        self.assertEqual(rho.dtype, torch.cdouble)
        self.assertEqual(populations(rho).tolist(), [1.0, -1.0])
