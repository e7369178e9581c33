#!/usr/bin/env python3

import sys
import os
import unittest

import numpy as np
import numpy.testing as npt

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars
from blaschke import BlaschkeProduct
from modelspace import CircleFunction, model_bases
from intertwine import commutator_defect, cancellation_test, rank_one, intersection_subspace, subspace_distance

N = 1024
theta_ = BlaschkeProduct([0.3, 0.5j, -0.2 + 0.1j])
alpha_ = BlaschkeProduct([0.3, -0.4])


class TestCommutator(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_rank_one(self):
        x, y = np.array([1.0, 2j]), np.array([1j, 1.0, 0.0])
        M = rank_one(x, y)
        f = np.array([0.5, -1.0, 3.0])
        npt.assert_allclose(np.vdot(y, f) * x, M @ f)

    def test_formula(self):
        phi = CircleFunction.from_laurent([0.5, -1j, 2.0, 1.0, 0.25j, -0.5, 1.0], -3, N)
        defect = commutator_defect(phi, theta_, alpha_, model_bases(theta_, alpha_, N))
        self.assertLess(defect.formula_residual, 1e-9)
        self.assertGreater(defect.norm, 1e-3)

    def test_alpha_symbol_cancels(self):
        phi = CircleFunction.from_blaschke(alpha_, N)
        defect = commutator_defect(phi, theta_, alpha_)
        self.assertLess(defect.norm, 1e-9)
        cancellation = cancellation_test(phi, theta_, alpha_)
        self.assertTrue(cancellation.cancels)
        self.assertAlmostEqual(0.0, abs(cancellation.c), delta=1e-9)

    def test_coanalytic_theta_symbol_cancels(self):
        h = CircleFunction.from_laurent([2.0, 1j, -1.0], 0, N)
        phi = (CircleFunction.from_blaschke(theta_, N) * h).conj()
        cancellation = cancellation_test(phi, theta_, alpha_)
        self.assertTrue(cancellation.cancels)
        self.assertAlmostEqual(2.0, cancellation.c, delta=1e-9)
        self.assertLess(commutator_defect(phi, theta_, alpha_).norm, 1e-9)

    def test_constant_symbol_does_not_cancel(self):
        phi = CircleFunction.constant(1.0, N)
        cancellation = cancellation_test(phi, theta_, alpha_)
        self.assertFalse(cancellation.cancels)
        self.assertGreater(commutator_defect(phi, theta_, alpha_).norm, 1e-3)
        self.assertEqual({"cancels", "c", "residual"}, set(cancellation.to_json()))


class TestLattice(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_shared_zero(self):
        result = intersection_subspace(theta_, alpha_, N)
        self.assertEqual(1, result.dimension)
        self.assertEqual(1, result.expected_dimension)
        self.assertLess(result.residual, 1e-8)

    def test_z_times_mobius_against_z_squared(self):
        theta = BlaschkeProduct.monomial(1) * BlaschkeProduct.mobius(0.4 - 0.2j)
        result = intersection_subspace(theta, BlaschkeProduct.monomial(2), N)
        self.assertEqual(1, result.dimension)
        self.assertLess(result.residual, 1e-8)

    def test_coprime(self):
        result = intersection_subspace(theta_, BlaschkeProduct([-0.6]), N)
        self.assertEqual(0, result.dimension)
        self.assertEqual(0.0, result.residual)

    def test_subspace_distance(self):
        e1 = np.array([[1.0], [0.0]], dtype=complex)
        e2 = np.array([[0.0], [1.0]], dtype=complex)
        self.assertAlmostEqual(0.0, subspace_distance(e1, 1j * e1), delta=1e-14)
        self.assertAlmostEqual(1.0, subspace_distance(e1, e2), delta=1e-14)
        self.assertEqual(1.0, subspace_distance(e1, np.zeros((2, 0))))


if __name__ == '__main__':
    unittest.main()
