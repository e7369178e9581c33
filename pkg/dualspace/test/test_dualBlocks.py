#!/usr/bin/env python3

import sys
import os
import unittest

import numpy as np
import numpy.testing as npt

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars
from blaschke import BlaschkeProduct
from modelspace import CircleFunction
from dualspace import LaurentWindow, WindowSections, window_bases, dtto_blocks, dz_block, apply_by_multiplication
from dualspace import conjugation_permutation, shift_matrix, shift_invariance_residual
from dualspace import IdattoCase, idatto_classify, interior_commutator_residual, rank2_identity_residual
from dualspace import KmutantCase, case_for, kmutant_symbols, kmutant_intertwine_residual
from dualspace import block_operator, kmutant_build, c18_conditions, reference_intertwiners
from pymskit.mskitException import CaseMismatch, GridMismatch

z_ = BlaschkeProduct.monomial(1)
z2_ = BlaschkeProduct.monomial(2)


class TestDualBlocks(unittest.TestCase):
    def setUp(self):
        config_vars.clear()
        self.window = LaurentWindow.create(-16, 24, 2, grid_size=256)

    def test_identity_symbol(self):
        D = dtto_blocks(CircleFunction.constant(1.0, 256), z2_, z2_, self.window)
        npt.assert_allclose(np.eye(D.matrix.shape[0]), D.matrix, atol=1e-12)
        self.assertEqual(z2_, D.theta)
        self.assertEqual(self.window, D.window)

    def test_blocks_match_multiplication(self):
        phi = CircleFunction.from_laurent([0.5, 1j, 2.0, -1.0, 0.25], -2, 256)
        sections = window_bases(z_, z2_, self.window)
        D = dtto_blocks(phi, z_, z2_, self.window, sections)
        self.assertEqual((sections.alpha_sections.dim, sections.theta_sections.dim), D.matrix.shape)
        rng = np.random.default_rng(5)
        v = rng.normal(size=sections.theta_sections.dim) + 1j * rng.normal(size=sections.theta_sections.dim)
        npt.assert_allclose(apply_by_multiplication(phi, v, sections), D.matrix @ v, atol=1e-10)

    def test_blocks_match_multiplication_for_mobius(self):
        theta, alpha = BlaschkeProduct([0.3]), BlaschkeProduct([0.3, -0.2j])
        window = LaurentWindow.create(-32, 64, 4)
        phi = CircleFunction.from_laurent([1.0, -0.5j, 2.0], -1, window.grid_size)
        sections = window_bases(theta, alpha, window)
        D = dtto_blocks(phi, theta, alpha, window, sections)
        rng = np.random.default_rng(6)
        v = rng.normal(size=sections.theta_sections.dim) + 1j * rng.normal(size=sections.theta_sections.dim)
        npt.assert_allclose(apply_by_multiplication(phi, v, sections), D.matrix @ v, atol=1e-9)

    def test_grid_mismatch(self):
        with self.assertRaises(GridMismatch):
            dtto_blocks(CircleFunction.constant(1.0, 512), z_, z2_, self.window)

    def test_dz_block(self):
        sections = WindowSections(z2_, self.window)
        npt.assert_allclose(shift_matrix(sections), dz_block(z2_, self.window, sections).matrix)
        theta = BlaschkeProduct([0.5])
        window = LaurentWindow.create(-32, 64, 4)
        D = dz_block(theta, window)
        self.assertAlmostEqual(0.5, D.gamma_check[0, 0], delta=1e-14)
        self.assertEqual({"t_hat", "gamma_check", "gamma_hat", "t_check"}, set(D.block_norms()))

    def test_conjugation_permutation(self):
        sections = WindowSections(z2_, self.window)
        permutation, has_image = conjugation_permutation(sections)
        # theta z**j -> conj(z)**(j+1) exists for j < 16, every check vector has an image
        self.assertEqual(16 + 16, int(np.sum(has_image)))
        self.assertEqual(1.0, permutation[sections.hat_size, 0])
        self.assertEqual(1.0, permutation[0, sections.hat_size])

    def test_shift_invariance(self):
        phi = CircleFunction.from_laurent([1.0, 2j, -1.0, 0.5], -2, 256)
        self.assertLess(shift_invariance_residual(dtto_blocks(phi, z2_, z2_, self.window)), 1e-12)


class TestCommutation(unittest.TestCase):
    def setUp(self):
        config_vars.clear()
        self.window = LaurentWindow.create(-16, 24, 2, grid_size=256)

    def test_classify(self):
        N = 256
        self.assertEqual(IdattoCase.TRIVIAL, idatto_classify(CircleFunction.constant(0.0, N), z2_, z2_))
        polynomial = CircleFunction.from_laurent([1.0, 1.0], 0, N)
        self.assertEqual(IdattoCase.CASE1, idatto_classify(polynomial, z2_, z2_))
        self.assertEqual(IdattoCase.NONE, idatto_classify(CircleFunction.monomial(-1, N), z2_, z2_))
        theta = BlaschkeProduct([0.5])
        self.assertEqual(IdattoCase.CASE2, idatto_classify(CircleFunction.constant(1.0, 4096), theta, theta))
        self.assertEqual("case2", IdattoCase.CASE2.value)

    def test_identity_commutes(self):
        phi = CircleFunction.constant(1.0, 256)
        self.assertLess(interior_commutator_residual(phi, z2_, z2_, self.window), 1e-12)

    def test_rank_two_identity(self):
        phi = CircleFunction.from_laurent([0.5, 1j, 2.0, -1.0, 0.25], -2, 256)
        self.assertLess(rank2_identity_residual(phi, z_, z_, self.window), 1e-10)

    def test_intertwine_residual_checks_products(self):
        D = dtto_blocks(CircleFunction.constant(1.0, 256), z2_, z2_, self.window)
        with self.assertRaises(ValueError):
            kmutant_intertwine_residual(D, theta=z_)
        with self.assertRaises(ValueError):
            kmutant_intertwine_residual(D, window=LaurentWindow.create(-32, 24, 2, grid_size=256))


class TestKmutant(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_case_for(self):
        self.assertEqual(KmutantCase.CASE_I, case_for(BlaschkeProduct([0.5]), z_))
        self.assertEqual(KmutantCase.CASE_II, case_for(z_, BlaschkeProduct([0.5])))
        self.assertEqual(KmutantCase.CASE_III, case_for(z_, z2_))

    def test_case_mismatch(self):
        with self.assertRaises(CaseMismatch):
            kmutant_symbols("i", z_, z2_, 256, psi4=CircleFunction.constant(1.0, 256))
        with self.assertRaises(ValueError):
            kmutant_symbols("i", BlaschkeProduct([0.5]), z_, 256)
        with self.assertRaises(ValueError):
            kmutant_symbols("ii", z_, BlaschkeProduct([0.5]), 256)

    def test_case_two_symbols(self):
        symbols = kmutant_symbols(KmutantCase.CASE_II, z_, BlaschkeProduct([0.5]), 256, psi1=CircleFunction.monomial(1, 256))
        self.assertEqual(0.0, symbols.psi2.norm())
        self.assertEqual(0.0, symbols.psi4.norm())

    def test_case_three_defaults(self):
        symbols = kmutant_symbols("iii", z_, z2_, 256, psi4=CircleFunction.monomial(1, 256))
        self.assertEqual(0.0, symbols.psi1.norm())
        self.assertEqual(0.0, symbols.psi3.norm())
        self.assertAlmostEqual(1.0, symbols.psi4.norm(), delta=1e-14)

    def test_case_one_symbols_meet_c18(self):
        theta, alpha = BlaschkeProduct([0.5]), BlaschkeProduct([0.3j, -0.2])
        psi4 = CircleFunction.from_laurent([1.0, 0.5, 2j], -1, 256)
        symbols = kmutant_symbols("i", theta, alpha, 256, psi4=psi4)
        result = c18_conditions(*symbols, theta, alpha)
        self.assertTrue(result.all_below(1e-10), result.residuals)
        self.assertAlmostEqual(0.0, abs(result.c), delta=1e-10)

    def test_c18_detects_broken_psi2(self):
        theta, alpha = BlaschkeProduct([0.5]), BlaschkeProduct([0.3j, -0.2])
        symbols = kmutant_symbols("i", theta, alpha, 256, psi4=CircleFunction.from_laurent([1.0, 0.5, 2j], -1, 256))
        alpha_z = CircleFunction.from_blaschke(alpha, 256) * CircleFunction.monomial(1, 256)
        result = c18_conditions(symbols.psi1, symbols.psi2 + alpha_z, symbols.psi3, symbols.psi4, theta, alpha)
        self.assertLess(max(result.residuals[:2]), 1e-10)
        self.assertAlmostEqual(1.0, result.residuals[2], delta=1e-9)
        self.assertAlmostEqual(1.0, result.residuals[3], delta=1e-9)
        self.assertFalse(result.all_below(1e-3))

    def test_build_is_block_operator_of_symbols(self):
        theta, alpha = BlaschkeProduct([0.5]), BlaschkeProduct([0.5])
        window = LaurentWindow.for_products(theta, alpha, 1)
        psi4 = CircleFunction.from_laurent([1.0, 0.25], -1, window.grid_size)
        D = kmutant_build({"psi4": psi4}, "i", theta, alpha, window)
        symbols = kmutant_symbols("i", theta, alpha, window.grid_size, psi4=psi4)
        expected = block_operator(*symbols, theta, alpha, window)
        npt.assert_allclose(expected.matrix, D.matrix, atol=1e-14)

    def test_reference_intertwiner_names(self):
        half = BlaschkeProduct([0.5])
        for theta, alpha, names in ((half, half, ["d1a-theta", "d1a-zbar", "d1a-zbar-theta", "remark"]),
                                    (half, z_, ["d1b-theta", "d1b-zbar", "d1b-zbar-theta"]),
                                    (z_, half, ["d2-alpha", "d2-theta-bar", "d2-zbar-theta-bar"]),
                                    (z_, z2_, ["de4-psi1", "de4-psi3", "de4-psi4"])):
            window = LaurentWindow.for_products(theta, alpha, 1)
            built = reference_intertwiners(theta, alpha, window)
            self.assertEqual(names, [name for name, _, _ in built])
            for _, D, _ in built:
                self.assertEqual(window, D.window)


if __name__ == '__main__':
    unittest.main()
