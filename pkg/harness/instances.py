#!/usr/bin/env python3

"""
    Random instances for the checks, every draw taken from the trial's own generator.
"""

from typing import List, Optional, Tuple

import numpy as np

from blaschke import BlaschkeProduct, divide, gcd
from configVar import tolerance
from modelspace import CircleFunction, ModelBasis, k0


def random_unimodular(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.uniform()))


def random_points(rng: np.random.Generator, count: int, max_radius: float, min_radius: float = 0.0) -> List[complex]:
    radii = np.sqrt(rng.uniform(min_radius ** 2, max_radius ** 2, size=count))
    return list(radii * np.exp(2j * np.pi * rng.uniform(size=count)))


def random_product(rng: np.random.Generator, degree: int, max_radius: Optional[float] = None,
                   zero_at_origin: bool = False, min_radius: float = 0.0) -> BlaschkeProduct:
    max_radius = tolerance("MAX_ZERO_RADIUS", max_radius)
    if zero_at_origin:
        points = random_points(rng, degree - 1, max_radius, min_radius) + [0j]
    else:
        points = random_points(rng, degree, max_radius, min_radius)
    return BlaschkeProduct(points, random_unimodular(rng))


def random_degree(rng: np.random.Generator, degree_range: Tuple[int, int]) -> int:
    return int(rng.integers(degree_range[0], degree_range[1] + 1))


def random_pair(rng: np.random.Generator, degree_range: Tuple[int, int], max_radius: Optional[float] = None,
                shared: Optional[int] = None, conjugate_shared: bool = False,
                theta_zero_at_origin: bool = False, alpha_zero_at_origin: bool = False,
                min_radius: float = 0.0) -> Tuple[BlaschkeProduct, BlaschkeProduct]:
    """ (theta, alpha) with `shared` common zeros (random count when None);
        conjugate_shared makes the common zeros of alpha the conjugates of theta's
    """
    max_radius = tolerance("MAX_ZERO_RADIUS", max_radius)
    theta_degree, alpha_degree = random_degree(rng, degree_range), random_degree(rng, degree_range)
    if shared is None:
        shared = int(rng.integers(0, min(theta_degree, alpha_degree) + 1))
    shared = max(0, min(shared, theta_degree - int(theta_zero_at_origin), alpha_degree - int(alpha_zero_at_origin)))
    common = random_points(rng, shared, max_radius, min_radius)
    theta_points = common + random_points(rng, theta_degree - shared - int(theta_zero_at_origin), max_radius, min_radius)
    alpha_common = [p.conjugate() for p in common] if conjugate_shared else common
    alpha_points = alpha_common + random_points(rng, alpha_degree - shared - int(alpha_zero_at_origin), max_radius, min_radius)
    if theta_zero_at_origin:
        theta_points.append(0j)
    if alpha_zero_at_origin:
        alpha_points.append(0j)
    return BlaschkeProduct(theta_points, random_unimodular(rng)), BlaschkeProduct(alpha_points, random_unimodular(rng))


def random_complex(rng: np.random.Generator, size) -> np.ndarray:
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def random_laurent(rng: np.random.Generator, lo: int, hi: int, grid_size: int, scale: float = 1.0) -> CircleFunction:
    """ Laurent polynomial with coefficients c_lo .. c_hi """
    return CircleFunction.from_laurent(scale * random_complex(rng, hi - lo + 1), lo, grid_size)


def random_model_element(rng: np.random.Generator, inner: BlaschkeProduct, grid_size: int) -> CircleFunction:
    """ unit-norm random element of K_inner, 0 for a unit product """
    if inner.degree == 0:
        return CircleFunction.constant(0.0, grid_size)
    coefficients = random_complex(rng, inner.degree)
    return ModelBasis(inner, grid_size).combine(coefficients / np.linalg.norm(coefficients))


def random_intertwiner_symbol(rng: np.random.Generator, theta: BlaschkeProduct, alpha: BlaschkeProduct, grid_size: int) -> CircleFunction:
    """ random element of (alpha / gcd) K_gcd """
    gamma = gcd(alpha, theta)
    factor = CircleFunction.from_blaschke(divide(alpha, gamma), grid_size)
    return factor * random_model_element(rng, gamma, grid_size)


def random_case1_symbol(rng: np.random.Generator, theta: BlaschkeProduct, alpha: BlaschkeProduct, grid_size: int) -> CircleFunction:
    """ random element of (alpha / gcd) K_{z gcd} """
    gamma = gcd(alpha, theta)
    factor = CircleFunction.from_blaschke(divide(alpha, gamma), grid_size)
    return factor * random_model_element(rng, gamma * BlaschkeProduct.monomial(1), grid_size)


def random_case2_symbol(rng: np.random.Generator, theta: BlaschkeProduct, grid_size: int) -> CircleFunction:
    """ random element of (k0_theta)^-1 K_{z theta} """
    return random_model_element(rng, theta * BlaschkeProduct.monomial(1), grid_size) / k0(theta, grid_size)


def symbol_band(phi: CircleFunction) -> int:
    lo, hi = phi.effective_band(tolerance("FOURIER_TAIL_TOL"))
    return max(-lo, hi)


def describe(**products) -> dict:
    """ instance description for a report: each product as json """
    return {name: product.to_json() for name, product in products.items()}


def regrid(phi: CircleFunction, grid_size: int) -> CircleFunction:
    """ the same Laurent coefficients on a finer grid """
    if phi.grid_size == grid_size:
        return phi
    if grid_size < phi.grid_size:
        raise ValueError(f"cannot move a function from a grid of {phi.grid_size} to a coarser grid of {grid_size}")
    half = phi.grid_size // 2 - 1
    return CircleFunction.from_laurent(phi.laurent(-half, half), -half, grid_size)
