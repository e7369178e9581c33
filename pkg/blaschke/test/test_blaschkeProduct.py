#!/usr/bin/env python3

import sys
import os
import cmath
import unittest

import numpy as np
import numpy.testing as npt

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars
from blaschke import BlaschkeProduct, evaluate, multiply, divide, gcd, lcm, divides, same_zeros, random_blaschke
from pymskit.mskitException import NotDivisible, PoleHit

z_ = BlaschkeProduct.monomial(1)


def phi_a(a=0.5):
    return BlaschkeProduct.mobius(a)


class TestBlaschkeProduct(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_construction(self):
        B = BlaschkeProduct([0.5, 0.5, -0.25j], 2.0)
        self.assertEqual(3, B.degree)
        self.assertEqual(1.0, abs(B.constant))
        self.assertEqual([(-0.25j, 1), (0.5, 2)], list(B.zeros))
        with self.assertRaises(ValueError):
            BlaschkeProduct([1.0])
        with self.assertRaises(ValueError):
            BlaschkeProduct([0.5], 0)
        with self.assertRaises(AttributeError):
            B.constant = 1.0

    def test_close_zeros_merge(self):
        B = BlaschkeProduct([0.3, 0.3 + 1e-12])
        self.assertEqual(1, len(B.zeros))
        self.assertEqual(2, B.degree)

    def test_evaluate(self):
        self.assertAlmostEqual(1j, z_(1j), delta=1e-15)
        self.assertAlmostEqual(0.5, phi_a(0.5)(0), delta=1e-15)
        self.assertEqual(0j, BlaschkeProduct.monomial(3).value_at_zero())

    def test_unimodular_on_circle(self):
        B = random_blaschke(5, seed=3)
        self.assertAlmostEqual(1.0, abs(evaluate(B, cmath.exp(1j * cmath.pi / 7))), delta=1e-12)
        circle = np.exp(2j * np.pi * np.arange(64) / 64)
        npt.assert_allclose(np.abs(B(circle)), 1.0, atol=1e-12)

    def test_pole(self):
        with self.assertRaises(PoleHit):
            evaluate(phi_a(0.5), 2.0)

    def test_multiply(self):
        self.assertTrue(same_zeros(BlaschkeProduct([(0j, 2)]), z_ * z_))
        npt.assert_allclose((z_ * z_)(0.3j), (0.3j) ** 2, atol=1e-15)
        B = random_blaschke(3, seed=1)
        self.assertEqual(B.zeros, multiply(BlaschkeProduct.unit(), B).zeros)
        self.assertTrue(same_zeros(z_ * z_ * phi_a(), multiply(z_ * phi_a(), z_)))

    def test_multiplicative_evaluation(self):
        B1, B2 = random_blaschke(3, seed=4), random_blaschke(2, seed=5)
        w = 0.2 - 0.6j
        self.assertAlmostEqual(0.0, abs((B1 * B2)(w) - B1(w) * B2(w)), delta=1e-12)

    def test_divide(self):
        self.assertTrue(same_zeros(z_ * phi_a(), divide(z_ * z_ * phi_a(), z_)))
        B = random_blaschke(4, seed=2)
        self.assertTrue(divide(B, B).is_unit)
        with self.assertRaises(NotDivisible) as context:
            divide(z_ * z_, phi_a())
        self.assertEqual(0.5, context.exception.unmatched_zero)

    def test_divide_undoes_multiply(self):
        B1, B2 = random_blaschke(3, seed=11), random_blaschke(4, seed=12)
        quotient = (B1 * B2) / B2
        self.assertTrue(same_zeros(B1, quotient))
        self.assertAlmostEqual(0.0, abs(quotient.constant - B1.constant), delta=1e-12)

    def test_gcd_lcm(self):
        gamma = gcd(z_ * phi_a(), z_ * z_)
        self.assertTrue(same_zeros(z_, gamma))
        self.assertEqual(1.0, gamma.constant)
        self.assertTrue(same_zeros(z_ * z_ * phi_a(), lcm(z_ * phi_a(), z_ * z_)))
        self.assertTrue(same_zeros(BlaschkeProduct.monomial(2), gcd(BlaschkeProduct.monomial(2), BlaschkeProduct.monomial(3))))
        self.assertTrue(same_zeros(BlaschkeProduct.monomial(3), lcm(BlaschkeProduct.monomial(2), BlaschkeProduct.monomial(3))))
        self.assertTrue(gcd(phi_a(0.5), phi_a(-0.5j)).is_unit)

    def test_gcd_properties(self):
        for seed in range(5):
            shared = random_blaschke(2, seed=100 + seed)
            B1 = shared * random_blaschke(2, seed=200 + seed)
            B2 = shared * random_blaschke(3, seed=300 + seed)
            gamma = gcd(B1, B2)
            self.assertTrue(divides(gamma, B1))
            self.assertTrue(divides(gamma, B2))
            self.assertTrue(same_zeros(gamma, gcd(B2, B1)))
            self.assertTrue(same_zeros(B1 * B2, lcm(B1, B2) * gamma))
            self.assertTrue(divides(B1, lcm(B1, B2)))

    def test_divides(self):
        self.assertTrue(divides(z_, z_ * z_))
        self.assertFalse(divides(z_ * z_, z_))
        self.assertTrue(divides(BlaschkeProduct.unit(), random_blaschke(2, seed=1)))

    def test_random_blaschke(self):
        self.assertEqual(random_blaschke(3, seed=7, max_radius=0.9).zeros, random_blaschke(3, seed=7, max_radius=0.9).zeros)
        self.assertEqual(random_blaschke(3, seed=7).constant, random_blaschke(3, seed=7).constant)
        theta = random_blaschke(1, seed=1, max_radius=0.9, force_zero_at_origin=True)
        self.assertEqual([0j], theta.zero_list())
        self.assertLessEqual(random_blaschke(4, seed=9, max_radius=0.9).max_modulus(), 0.9)
        with self.assertRaises(ValueError):
            random_blaschke(0, seed=1)

    def test_jsharp(self):
        B = BlaschkeProduct([0.5j, 0.25 + 0.1j], 1j)
        sharp = B.jsharp()
        w = 0.3 + 0.2j
        self.assertAlmostEqual(0.0, abs(sharp(w) - np.conj(B(np.conj(w)))), delta=1e-14)

    def test_key_ignores_constant(self):
        self.assertEqual(BlaschkeProduct([0.5], 1j).key(), BlaschkeProduct([0.5], -1).key())
        self.assertNotEqual(BlaschkeProduct([0.5]).key(), BlaschkeProduct([0.25]).key())

    def test_json(self):
        B = BlaschkeProduct([(0.5, 2), -0.25j], 1j)
        as_json = B.to_json()
        self.assertEqual([0.0, 1.0], as_json["constant"])
        again = BlaschkeProduct.from_json(as_json)
        self.assertEqual(B.zeros, again.zeros)
        self.assertEqual(B.constant, again.constant)
        self.assertEqual(1.0, BlaschkeProduct.from_json({"zeros": [{"point": [0.5, 0]}]}).constant)
        with self.assertRaises(ValueError):
            BlaschkeProduct.from_json({"zeros": [{"pt": [0.5, 0]}]})


if __name__ == '__main__':
    unittest.main(verbosity=3)
