#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

import math
import os
import tempfile
import unittest

import torch
from spinchain.chain import (
    ChainState,
    build_chain_hamiltonian,
    propagate_exact,
    reference_populations,
    write_population_table,
)
from spinchain.exceptions.errors import InvalidArgumentError, InvalidStateError
from spinchain.utils.linalg import dagger, purity, trace
from spinchain.utils.sampling import manual_seed, random_density_matrix


P_TAU_1_3 = (
    0.131165585847961,
    0.498594268959819,
    0.294833494311549,
    0.066822841949127,
    0.007967152857381,
    0.000586273139943,
    0.000029269826608,
    0.000001113107611,
)


class TestChainHamiltonian(unittest.TestCase):
    def test_build_chain_hamiltonian(self):
        H = build_chain_hamiltonian(8, 1.0)
        self.assertEqual(H.matrix.shape, torch.Size([8, 8]))
        for i in range(8):
            for j in range(8):
                expected = 1.0 if abs(i - j) == 1 else 0.0
                self.assertEqual(H.matrix[i, j].item(), expected)
        # site reversal symmetry
        self.assertTrue(torch.equal(H.matrix, H.matrix.flip(0).flip(1)))
        H2 = build_chain_hamiltonian(2, 1.0)
        self.assertEqual(H2.matrix.tolist(), [[0.0, 1.0], [1.0, 0.0]])
        H3 = build_chain_hamiltonian(4, 0.5)
        self.assertEqual(H3.matrix[1, 2].item(), 0.5)

    def test_eigenvalues(self):
        H = build_chain_hamiltonian(8, 1.0)
        expected = sorted(2 * math.cos(k * math.pi / 9) for k in range(1, 9))
        self.assertTrue(
            torch.allclose(
                H.eigenvalues, torch.tensor(expected, dtype=torch.double), atol=1e-12
            )
        )
        V = H.eigenvectors
        residual = H.matrix.to(V) @ V - V * H.eigenvalues.to(V)
        self.assertLess(residual.abs().max().item(), 1e-10)

    def test_invalid_chain(self):
        with self.assertRaises(InvalidArgumentError):
            build_chain_hamiltonian(1)
        with self.assertRaises(InvalidArgumentError):
            ChainState.localized(4, 4)


class TestPropagateExact(unittest.TestCase):
    def setUp(self):
        self.H = build_chain_hamiltonian(8, 1.0)
        self.rho0 = ChainState.localized(8, 0)

    def test_identity_at_zero(self):
        out = propagate_exact(self.H, self.rho0, 0.0)
        self.assertTrue(torch.allclose(out.density, self.rho0.density, atol=1e-12))

    def test_two_sites(self):
        H = build_chain_hamiltonian(2, 1.0)
        tau = torch.linspace(0, 3, 13, dtype=torch.double)
        P = propagate_exact(H, ChainState.localized(2, 0), tau).populations
        self.assertTrue(torch.allclose(P[:, 1], torch.sin(tau) ** 2, atol=1e-12))

    def test_reference_values(self):
        P = reference_populations([0.13, 1.0, 1.3, 1.5, 0.5])
        self.assertAlmostEqual(P[0, 0].item(), 0.983218536081073, places=12)
        self.assertAlmostEqual(P[0, 1].item(), 0.016710529165683, places=12)
        self.assertAlmostEqual(P[0, 2].item(), 0.000070801437860, places=12)
        self.assertAlmostEqual(P[1, 0].item(), 0.332611503882150, places=12)
        self.assertAlmostEqual(P[1, 1].item(), 0.497967406997580, places=12)
        self.assertAlmostEqual(P[1, 2].item(), 0.149637254256825, places=12)
        self.assertAlmostEqual(P[1, 3].item(), 0.018491343484608, places=12)
        for site, expected in enumerate(P_TAU_1_3):
            self.assertAlmostEqual(P[2, site].item(), expected, places=12)
        self.assertAlmostEqual(P[3, 0].item(), 0.051093767701473, places=12)
        self.assertAlmostEqual(P[3, 1].item(), 0.420061713478680, places=12)
        self.assertAlmostEqual(P[3, 2].item(), 0.382079061556727, places=12)
        self.assertAlmostEqual(P[3, 3].item(), 0.123968201860211, places=12)
        self.assertAlmostEqual(P[3, 4].item(), 0.020571558426241, places=12)
        self.assertAlmostEqual(P[4, 0].item(), 0.774578072057836, places=12)
        self.assertAlmostEqual(P[4, 1].item(), 0.211244973591928, places=12)

    def test_short_times(self):
        P = reference_populations([0.01])
        self.assertAlmostEqual(P[0, 1].item(), 0.000099993333528, places=13)
        self.assertAlmostEqual(P[0, 1].item() / 0.01 ** 2, 1.0, places=3)

    def test_rows_sum_to_one(self):
        tau = torch.linspace(0, 5, 51, dtype=torch.double)
        P = reference_populations(tau)
        self.assertEqual(P.shape, torch.Size([51, 8]))
        ones = torch.ones(51, dtype=torch.double)
        self.assertTrue(torch.allclose(P.sum(-1), ones, atol=1e-12))
        self.assertEqual(reference_populations([]).shape, torch.Size([0, 8]))

    def test_unitarity_and_purity(self):
        with manual_seed(7):
            rho0 = ChainState(random_density_matrix(8)[0])
        tau = torch.tensor([0.2, 1.3, 4.0], dtype=torch.double)
        rho = propagate_exact(self.H, rho0, tau).density
        self.assertTrue(torch.allclose(rho, dagger(rho), atol=1e-12))
        ones = torch.ones(3, dtype=torch.double)
        self.assertTrue(torch.allclose(trace(rho).real, ones, atol=1e-10))
        eigenvalues = torch.linalg.eigvalsh(rho)
        self.assertTrue((eigenvalues > -1e-10).all())
        self.assertTrue((eigenvalues < 1 + 1e-10).all())
        p0 = purity(rho0.density).expand(3)
        self.assertTrue(torch.allclose(purity(rho), p0, atol=1e-10))

    def test_mirror_symmetry(self):
        tau = torch.linspace(0, 3, 7, dtype=torch.double)
        P_first = propagate_exact(self.H, ChainState.localized(8, 0), tau).populations
        P_last = propagate_exact(self.H, ChainState.localized(8, 7), tau).populations
        self.assertTrue(torch.allclose(P_first, P_last.flip(-1), atol=1e-10))

    def test_composition(self):
        rho1 = propagate_exact(self.H, self.rho0, 0.4)
        rho2 = propagate_exact(self.H, rho1, 0.9)
        direct = propagate_exact(self.H, self.rho0, 1.3)
        self.assertTrue(torch.allclose(rho2.density, direct.density, atol=1e-10))

    def test_invalid_inputs(self):
        bad = torch.zeros(8, 8, dtype=torch.cdouble)
        bad[0, 1] = 1.0
        with self.assertRaises(InvalidStateError):
            propagate_exact(self.H, ChainState(bad), 0.1)
        with self.assertRaises(InvalidArgumentError):
            propagate_exact(self.H, self.rho0, -0.1)


class TestWritePopulationTable(unittest.TestCase):
    def test_write_population_table(self):
        taus = [0.0, 0.13]
        table = reference_populations(taus)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "oracle.csv")
            write_population_table(path, taus, table)
            with open(path) as f:
                lines = f.read().splitlines()
        self.assertEqual(lines[0], "tau,p0,p1,p2,p3,p4,p5,p6,p7")
        self.assertEqual(len(lines), 3)
        fields = lines[2].split(",")
        self.assertEqual(fields[0], "0.13")
        self.assertAlmostEqual(float(fields[1]), 0.983218536081073, places=13)
