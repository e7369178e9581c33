#!/usr/bin/env python3

"""
    Takenaka-Malmquist bases of model spaces K_theta = H^2 minus theta H^2,
    reproducing kernels, projections and the conjugation C_theta f = theta conj(z f).

    e_k(z) = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z) * prod_{j<k} (z - a_j) / (1 - conj(a_j) z)
    so that theta = z**n gives the monomials 1, z, ..., z**(n-1).
"""

import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np

from blaschke import BlaschkeProduct
from configVar import int_var, tolerance
from pymskit.mskitException import DegreeZero, GridMismatch
from .circleFunction import CircleFunction, grid_points
from .spaceTag import SpaceTag

log = logging.getLogger(__name__)


def required_grid_size(*products: BlaschkeProduct, base: Optional[int] = None) -> int:
    """ smallest power-of-two doubling of base with rho**(N/4) / (1 - rho) below FOURIER_TAIL_TOL """
    grid_size = int_var("DEFAULT_GRID_SIZE", base)
    rho = max((B.max_modulus() for B in products), default=0.0)
    tail_tol = tolerance("FOURIER_TAIL_TOL")
    while rho > 0 and rho ** (grid_size / 4) / (1 - rho) >= tail_tol:
        grid_size *= 2
        log.debug(f"grid doubled to {grid_size} for zero modulus {rho:.6f}")
    return grid_size


class ModelBasis:
    """ orthonormal basis of K_theta sampled on a grid, immutable """
    __slots__ = ("theta", "grid_size", "samples")

    def __init__(self, theta: BlaschkeProduct, grid_size: int) -> None:
        if theta.degree == 0:
            raise DegreeZero()
        z = grid_points(grid_size)
        rows = list()
        running = np.ones(grid_size, dtype=complex)
        for a in theta.zero_list():
            denominator = 1.0 - a.conjugate() * z
            rows.append(np.sqrt(1.0 - abs(a) ** 2) / denominator * running)
            running = running * (z - a) / denominator
        samples = np.array(rows)
        samples.setflags(write=False)
        self.theta = theta
        self.grid_size = grid_size
        self.samples = samples

    @property
    def dim(self) -> int:
        return self.samples.shape[0]

    @property
    def tag(self) -> SpaceTag:
        return SpaceTag("model", self.theta.key(), self.dim)

    def element(self, j: int) -> CircleFunction:
        return CircleFunction(self.samples[j])

    def gram(self) -> np.ndarray:
        return self.samples.conj() @ self.samples.T / self.grid_size

    def coefficients(self, f: CircleFunction) -> np.ndarray:
        """ <f, e_j> for every j, the coordinates of P_theta f """
        if f.grid_size != self.grid_size:
            raise GridMismatch(self.grid_size, f.grid_size)
        return self.samples.conj() @ f.samples / self.grid_size

    def coefficient_matrix(self, samples_rows: np.ndarray) -> np.ndarray:
        """ coordinates of several sampled functions (one per row) as columns """
        samples_rows = np.atleast_2d(samples_rows)
        if samples_rows.shape[1] != self.grid_size:
            raise GridMismatch(self.grid_size, samples_rows.shape[1])
        return self.samples.conj() @ samples_rows.T / self.grid_size

    def combine(self, coefficients) -> CircleFunction:
        return CircleFunction(np.asarray(coefficients, dtype=complex) @ self.samples)

    def evaluate(self, j: int, w: complex) -> complex:
        """ e_j at a point of the open disk, from the closed form """
        zeros = self.theta.zero_list()
        value = np.sqrt(1.0 - abs(zeros[j]) ** 2) / (1.0 - zeros[j].conjugate() * w)
        for a in zeros[:j]:
            value *= (w - a) / (1.0 - a.conjugate() * w)
        return complex(value)

    def rational_form(self, j: int) -> Tuple[np.ndarray, np.ndarray]:
        """ e_j = numerator(z) / prod(z - pole), numerator highest power first """
        zeros = self.theta.zero_list()
        numerator = np.sqrt(1.0 - abs(zeros[j]) ** 2) * np.atleast_1d(np.poly(zeros[:j]))
        poles = list()
        for a in zeros[:j + 1]:
            if a != 0:
                # 1 - conj(a) z = -conj(a) (z - 1/conj(a))
                numerator = numerator / (-a.conjugate())
                poles.append(1.0 / a.conjugate())
        return np.asarray(numerator, dtype=complex), np.asarray(poles, dtype=complex)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.theta.key()}, N={self.grid_size})"


class ModelBases(NamedTuple):
    """ bases of K_theta and K_alpha on a shared grid """
    theta_basis: ModelBasis
    alpha_basis: ModelBasis

    @property
    def grid_size(self) -> int:
        return self.theta_basis.grid_size


def tm_basis(theta: BlaschkeProduct, grid_size: Optional[int] = None) -> ModelBasis:
    return ModelBasis(theta, required_grid_size(theta, base=grid_size))


def model_bases(theta: BlaschkeProduct, alpha: BlaschkeProduct, grid_size: Optional[int] = None) -> ModelBases:
    grid_size = required_grid_size(theta, alpha, base=grid_size)
    return ModelBases(ModelBasis(theta, grid_size), ModelBasis(alpha, grid_size))


def reproducing_kernel(theta: BlaschkeProduct, w: complex, grid_size: int) -> CircleFunction:
    """ k_w(z) = (1 - conj(theta(w)) theta(z)) / (1 - conj(w) z) """
    if not abs(w) < 1:
        raise ValueError(f"kernel point {w} is not inside the unit disk")
    z = grid_points(grid_size)
    return CircleFunction((1.0 - np.conj(theta(w)) * theta(z)) / (1.0 - np.conj(w) * z))


def k0(theta: BlaschkeProduct, grid_size: int) -> CircleFunction:
    """ k_0 = P_theta 1 = 1 - conj(theta(0)) theta """
    return reproducing_kernel(theta, 0j, grid_size)


def k0_tilde(theta: BlaschkeProduct, grid_size: int) -> CircleFunction:
    """ C_theta k_0 = conj(z) (theta - theta(0)) """
    if theta.degree == 0:
        raise DegreeZero()
    z = grid_points(grid_size)
    return CircleFunction(z.conj() * (theta(z) - theta.value_at_zero()))


def project_model(f: CircleFunction, basis: ModelBasis) -> np.ndarray:
    return basis.coefficients(f)


class LaurentProjections(NamedTuple):
    plus: CircleFunction
    minus: CircleFunction
    alpha_part: Optional[CircleFunction]


def projections_laurent(f: CircleFunction, alpha: Optional[BlaschkeProduct] = None) -> LaurentProjections:
    """ P+ f, P- f and, when alpha is given, P_{alpha H^2} f """
    return LaurentProjections(f.plus(), f.minus(), f.project_onto(alpha) if alpha is not None else None)


def conjugation_apply(theta: BlaschkeProduct, f: CircleFunction) -> CircleFunction:
    """ C_theta f = theta conj(z) conj(f) """
    z = grid_points(f.grid_size)
    return CircleFunction(theta(z) * z.conj() * f.samples.conj())


def conjugation_matrix(basis: ModelBasis):
    """ antilinear representative: coordinates c -> C @ conj(c) """
    from operators.operatorMatrix import OperatorMatrix
    z = grid_points(basis.grid_size)
    images = basis.theta(z) * z.conj() * basis.samples.conj()
    return OperatorMatrix(basis.coefficient_matrix(images), basis.tag, basis.tag, antilinear=True)


def jsharp_map(f: CircleFunction) -> CircleFunction:
    return f.jsharp()


def jsharp_blaschke(B: BlaschkeProduct) -> BlaschkeProduct:
    return B.jsharp()


def jsharp_matrix(source_basis: ModelBasis, target_basis: ModelBasis):
    """ J# from K_alpha onto K_{alpha#}, antilinear: J[i, j] = <J# e_j, f_i> """
    from operators.operatorMatrix import OperatorMatrix
    if source_basis.grid_size != target_basis.grid_size:
        raise GridMismatch(source_basis.grid_size, target_basis.grid_size)
    reflected = np.mod(-np.arange(source_basis.grid_size), source_basis.grid_size)
    images = source_basis.samples[:, reflected].conj()
    return OperatorMatrix(target_basis.coefficient_matrix(images), source_basis.tag, target_basis.tag, antilinear=True)


def model_subspace_residual(phi: CircleFunction, inner: BlaschkeProduct, factor: Optional[BlaschkeProduct] = None) -> float:
    """ relative distance of phi to factor * K_inner, 0 for phi = 0 """
    phi_norm = phi.norm()
    if phi_norm == 0.0:
        return 0.0
    if inner.degree == 0:
        return 1.0
    # multiplication by an inner function is unitary on L^2
    g = phi if factor is None else CircleFunction.from_blaschke(factor, phi.grid_size).conj() * phi
    basis = ModelBasis(inner, phi.grid_size)
    projection = basis.combine(basis.coefficients(g))
    return (g - projection).norm() / phi_norm
