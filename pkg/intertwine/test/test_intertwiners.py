#!/usr/bin/env python3

import sys
import os
import unittest

import numpy as np
import numpy.testing as npt

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars
from blaschke import BlaschkeProduct
from modelspace import model_bases
from operators import OperatorMatrix, adjoint, compressed_shift
from intertwine import sylvester_nullspace, sylvester_operator, operator_scale, solve_intertwiners, starred_intertwiners
from intertwine import hankel_intertwiners, hankel_star_intertwiners, symbol_of_intertwiner, membership_residual, intertwining_residual
from intertwine import reconstruction_residual, span_rank, star_transform, hankel_transform, sst_transform
from pymskit.mskitException import NotAnIntertwiner

N = 1024
theta_ = BlaschkeProduct([0.3, 0.5j, -0.2 + 0.1j])
alpha_ = BlaschkeProduct([0.3, -0.4, 0.5j])


class TestSylvester(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_commuting_diagonals(self):
        L = np.diag([1.0, 2.0])
        solutions = sylvester_nullspace(L, L)
        self.assertEqual(2, len(solutions))
        for X in solutions:
            npt.assert_allclose(L @ X, X @ L, atol=1e-12)
            self.assertAlmostEqual(1.0, np.linalg.norm(X), delta=1e-12)

    def test_disjoint_spectra(self):
        self.assertEqual([], sylvester_nullspace(np.diag([1.0, 2.0]), np.diag([3.0, 4.0, 5.0])))

    def test_system_null_up_to_round_off(self):
        self.assertEqual(1, len(sylvester_nullspace([[1e-17]], [[0.0]])))
        self.assertEqual(1, len(sylvester_nullspace([[0.3 + 1e-16j]], [[0.3]])))
        self.assertEqual(0, len(sylvester_nullspace([[1e-3]], [[0.0]])))
        self.assertEqual(1.0, operator_scale(np.zeros((1, 1)), np.zeros((1, 1))))

    def test_rectangular_solution(self):
        # L X = X R with L 3x3 and R 2x2 sharing the eigenvalue 2
        L, R = np.diag([2.0, 5.0, 7.0]), np.diag([1.0, 2.0])
        solutions = sylvester_nullspace(L, R)
        self.assertEqual(1, len(solutions))
        self.assertEqual((3, 2), solutions[0].shape)
        self.assertAlmostEqual(1.0, abs(solutions[0][0, 1]), delta=1e-12)
        self.assertEqual((6, 6), sylvester_operator(L, R).shape)


class TestIntertwiners(unittest.TestCase):
    def setUp(self):
        config_vars.clear()
        self.bases = model_bases(theta_, alpha_, N)

    def test_dimension_is_gcd_degree(self):
        self.assertEqual(2, len(solve_intertwiners(theta_, alpha_, self.bases)))
        self.assertEqual(2, len(starred_intertwiners(theta_, alpha_, self.bases)))
        coprime = BlaschkeProduct([-0.6, 0.1j])
        self.assertEqual(0, len(solve_intertwiners(theta_, coprime, model_bases(theta_, coprime, N))))
        self.assertEqual(3, len(solve_intertwiners(theta_, theta_, model_bases(theta_, theta_, N))))

    def test_degree_one_pair_with_matching_sharp_zero(self):
        a = -0.74486 - 0.42565j
        theta, alpha = BlaschkeProduct([a]), BlaschkeProduct([a.conjugate()])
        bases = model_bases(theta, alpha, N)
        self.assertEqual(1, len(hankel_intertwiners(theta, alpha, bases)))
        self.assertEqual(1, len(hankel_star_intertwiners(theta, alpha, bases)))
        transformed = sst_transform(hankel_intertwiners(theta, alpha, bases)[0], theta, alpha, bases)
        self.assertEqual((1, 1), transformed.entries.shape)
        self.assertAlmostEqual(1.0, abs(transformed.entries[0, 0]), delta=1e-9)

    def test_symbols_of_solutions(self):
        solutions = solve_intertwiners(theta_, alpha_, self.bases)
        self.assertEqual(2, span_rank(solutions))
        for A in solutions:
            phi = symbol_of_intertwiner(A, theta_, alpha_, self.bases)
            self.assertLess(membership_residual(phi, theta_, alpha_), 1e-8)
            self.assertLess(reconstruction_residual(A, phi, theta_, alpha_, self.bases), 1e-8)

    def test_not_an_intertwiner(self):
        solutions = solve_intertwiners(theta_, alpha_, self.bases)
        identity_like = OperatorMatrix(np.eye(3), solutions[0].domain, solutions[0].codomain)
        with self.assertRaises(NotAnIntertwiner):
            symbol_of_intertwiner(identity_like, theta_, alpha_, self.bases)

    def test_star_transform(self):
        s_alpha = compressed_shift(alpha_, self.bases.alpha_basis)
        s_theta = compressed_shift(theta_, self.bases.theta_basis)
        starred = [star_transform(A, theta_, alpha_, self.bases) for A in solve_intertwiners(theta_, alpha_, self.bases)]
        self.assertEqual(2, span_rank(starred))
        for A in starred:
            self.assertFalse(A.antilinear)
            self.assertLess(intertwining_residual(A, adjoint(s_alpha), adjoint(s_theta)), 1e-8)

    def test_hankel_and_sst_transform(self):
        alpha = BlaschkeProduct([0.3j, -0.4])
        theta = BlaschkeProduct([-0.3j, 0.5])
        sharp_bases = model_bases(theta, alpha.jsharp(), N)
        bases = model_bases(theta, alpha, N)
        solutions = solve_intertwiners(theta, alpha.jsharp(), sharp_bases)
        self.assertEqual(1, len(solutions))
        B = hankel_transform(solutions[0], theta, alpha, bases)
        s_alpha = compressed_shift(alpha, bases.alpha_basis)
        s_theta = compressed_shift(theta, bases.theta_basis)
        self.assertLess(intertwining_residual(B, s_alpha, adjoint(s_theta)), 1e-8)
        self.assertEqual(1, len(hankel_intertwiners(theta, alpha, bases)))
        B_prime = sst_transform(B, theta, alpha, bases)
        self.assertLess(intertwining_residual(B_prime, adjoint(s_alpha), s_theta), 1e-8)


if __name__ == '__main__':
    unittest.main()
