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
from dualspace import LaurentWindow, WindowSections, window_bases, decay_length
from pymskit.mskitException import GridMismatch, WindowTooSmall

z_ = BlaschkeProduct.monomial(1)
z2_ = BlaschkeProduct.monomial(2)


class TestLaurentWindow(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_create(self):
        window = LaurentWindow.create(-64, 64, 4)
        self.assertEqual(LaurentWindow(-64, 64, 4, 4096), window)
        self.assertEqual(16384, LaurentWindow.create(-3000, 3000, 4).grid_size)
        self.assertEqual(256, LaurentWindow.create(-16, 24, 2, grid_size=256).grid_size)
        self.assertEqual({"lo": -64, "hi": 64, "guard": 4, "grid_size": 4096}, window.to_json())

    def test_create_rejects(self):
        with self.assertRaises(WindowTooSmall):
            LaurentWindow.create(8, 64, 2)
        with self.assertRaises(WindowTooSmall):
            LaurentWindow.create(-8, 8, 4)
        with self.assertRaises(WindowTooSmall):
            LaurentWindow.create(-8, 8, 0)
        with self.assertRaises(WindowTooSmall):
            LaurentWindow(-64, 64, 4, 128).validate()

    def test_doubled(self):
        doubled = LaurentWindow.create(-600, 800, 8).doubled()
        self.assertEqual((-1200, 1600, 8), doubled[:3])
        self.assertEqual(8192, doubled.grid_size)

    def test_decay_length(self):
        self.assertEqual(3, decay_length(z2_, 256))
        self.assertEqual(1, decay_length(BlaschkeProduct.unit(), 256))
        # |c_k| of a single factor decays like rho**k
        self.assertGreater(decay_length(BlaschkeProduct([0.5]), 4096), decay_length(BlaschkeProduct([0.2]), 4096))

    def test_for_products(self):
        self.assertEqual(LaurentWindow(-128, 192, 5, 4096), LaurentWindow.for_products(z_, z2_, 2))
        self.assertEqual(LaurentWindow(-256, 384, 103, 4096), LaurentWindow.for_products(z_, z2_, 100))

    def test_window_bases_validates(self):
        with self.assertRaises(WindowTooSmall):
            window_bases(z_, z2_, LaurentWindow(-8, 8, 4, 256))


class TestWindowSections(unittest.TestCase):
    def setUp(self):
        config_vars.clear()
        self.window = LaurentWindow.create(-16, 24, 2, grid_size=256)

    def test_sizes(self):
        sections = WindowSections(z2_, self.window)
        self.assertEqual(3, sections.decay)
        self.assertEqual(21, sections.hat_size)
        self.assertEqual(16, sections.check_size)
        self.assertEqual(37, sections.dim)
        self.assertEqual(19 + 14, int(np.sum(sections.interior_mask())))
        with self.assertRaises(WindowTooSmall):
            WindowSections(BlaschkeProduct.monomial(22), self.window)

    def test_unit_vectors(self):
        sections = WindowSections(z2_, self.window)
        z = CircleFunction.monomial(1, 256)
        npt.assert_allclose(sections.unit_vector("hat", 3), sections.coordinates(CircleFunction.monomial(5, 256)), atol=1e-12)
        npt.assert_allclose(sections.unit_vector("check", 1), sections.coordinates(z.conj()), atol=1e-12)
        self.assertEqual(21, np.flatnonzero(sections.unit_vector("check", 1))[0])

    def test_coordinates_drop_model_part(self):
        # K_{z^2} is spanned by 1 and z, invisible to the sections
        sections = WindowSections(z2_, self.window)
        f = CircleFunction.from_laurent([2.0, 1j, 3.0, 1.0, -1.0], -2, 256)
        coordinates = sections.coordinates(f)
        expected = np.zeros(sections.dim, dtype=complex)
        expected[0] = -1.0
        expected[21], expected[22] = 1j, 2.0
        npt.assert_allclose(expected, coordinates, atol=1e-12)
        with self.assertRaises(GridMismatch):
            sections.coordinates(CircleFunction.monomial(1, 512))

    def test_combine(self):
        sections = WindowSections(BlaschkeProduct([0.3]), LaurentWindow.create(-32, 64, 4))
        rng = np.random.default_rng(11)
        coordinates = rng.normal(size=sections.dim) + 1j * rng.normal(size=sections.dim)
        npt.assert_allclose(coordinates, sections.coordinates(sections.combine(coordinates)), atol=1e-10)


if __name__ == '__main__':
    unittest.main()
