#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

import unittest

import torch
from spinchain.exceptions.errors import InvalidArgumentError
from spinchain.spins.operators import (
    casimir,
    ladder_elements,
    magnetic_numbers,
    multiplet_center,
    spin_operators,
    validate_spin,
)
from spinchain.utils.linalg import commutator


class TestSpinOperators(unittest.TestCase):
    def test_validate_spin(self):
        self.assertEqual(validate_spin(3.5), 8)
        self.assertEqual(validate_spin(0.5), 2)
        self.assertEqual(validate_spin(1), 3)
        for bad in (0, -0.5, 1.3):
            with self.assertRaises(InvalidArgumentError):
                validate_spin(bad)

    def test_magnetic_numbers_and_ladder(self):
        m = magnetic_numbers(3.5)
        self.assertEqual(m.tolist(), [3.5, 2.5, 1.5, 0.5, -0.5, -1.5, -2.5, -3.5])
        d2 = ladder_elements(3.5) ** 2
        expected = torch.tensor([7, 12, 15, 16, 15, 12, 7], dtype=torch.double)
        self.assertTrue(torch.allclose(d2, expected, atol=1e-12))
        self.assertEqual(multiplet_center(3.5), 3.0)

    def test_commutation_relations(self):
        for spin in (0.5, 1.0, 1.5, 3.5):
            ops = spin_operators(spin)
            dim = validate_spin(spin)
            self.assertTrue(
                torch.allclose(commutator(ops.Iz, ops.Iplus), ops.Iplus, atol=1e-12)
            )
            self.assertTrue(
                torch.allclose(commutator(ops.Iz, ops.Iminus), -ops.Iminus, atol=1e-12)
            )
            self.assertTrue(
                torch.allclose(commutator(ops.Ix, ops.Iy), 1j * ops.Iz, atol=1e-12)
            )
            C = ops.Ix @ ops.Ix + ops.Iy @ ops.Iy + ops.Iz @ ops.Iz
            eye = torch.eye(dim, dtype=torch.cdouble)
            self.assertTrue(torch.allclose(C, casimir(spin) * eye, atol=1e-12))

    def test_matrix_layout(self):
        ops = spin_operators(3.5)
        d = ladder_elements(3.5)
        self.assertAlmostEqual(ops.Iplus[0, 1].real.item(), d[0].item(), places=14)
        self.assertAlmostEqual(ops.Iminus[1, 0].real.item(), d[0].item(), places=14)
        self.assertEqual(ops.Iminus[0, 1].item(), 0)
        self.assertTrue(torch.allclose(ops.Ix, ops.Ix.conj().transpose(-2, -1)))
        self.assertTrue(torch.allclose(ops.Iy, ops.Iy.conj().transpose(-2, -1)))
