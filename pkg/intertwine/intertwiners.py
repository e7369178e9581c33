#!/usr/bin/env python3

"""
    Intertwiners of compressed shifts and their transforms.

    plain:    S_alpha A = A S_theta
    starred:  S_alpha* A = A S_theta*
    hankel:   S_alpha B = B S_theta*
    companion of hankel: S_alpha* B = B S_theta
"""

import logging
from typing import List, Optional

import numpy as np

from blaschke import BlaschkeProduct, divide, gcd
from configVar import tolerance
from modelspace import CircleFunction, ModelBasis, ModelBases, model_bases, k0
from modelspace import conjugation_matrix, jsharp_matrix, model_subspace_residual
from operators import OperatorMatrix, adjoint, atto_matrix, compressed_shift, operator_norm
from pymskit.mskitException import NotAnIntertwiner
from .sylvester import sylvester_nullspace

log = logging.getLogger(__name__)


def _bases(theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases]) -> ModelBases:
    return bases if bases is not None else model_bases(theta, alpha)


def _shifts(bases: ModelBases):
    theta_basis, alpha_basis = bases
    return compressed_shift(alpha_basis.theta, alpha_basis), compressed_shift(theta_basis.theta, theta_basis)


def intertwining_residual(A: OperatorMatrix, left: OperatorMatrix, right: OperatorMatrix) -> float:
    """ || left A - A right || relative to max(1, ||A||) """
    difference = (left @ A).entries - (A @ right).entries
    return operator_norm(difference) / max(1.0, operator_norm(A))


def _solutions(left: OperatorMatrix, right: OperatorMatrix, domain, codomain) -> List[OperatorMatrix]:
    return [OperatorMatrix(X, domain, codomain) for X in sylvester_nullspace(left.entries, right.entries)]


def solve_intertwiners(theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> List[OperatorMatrix]:
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    return _solutions(s_alpha, s_theta, bases.theta_basis.tag, bases.alpha_basis.tag)


def starred_intertwiners(theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> List[OperatorMatrix]:
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    return _solutions(adjoint(s_alpha), adjoint(s_theta), bases.theta_basis.tag, bases.alpha_basis.tag)


def hankel_intertwiners(theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> List[OperatorMatrix]:
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    return _solutions(s_alpha, adjoint(s_theta), bases.theta_basis.tag, bases.alpha_basis.tag)


def hankel_star_intertwiners(theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> List[OperatorMatrix]:
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    return _solutions(adjoint(s_alpha), s_theta, bases.theta_basis.tag, bases.alpha_basis.tag)


def _require(residual: float, what: str):
    if residual >= tolerance("POSITIVE_TOL"):
        raise NotAnIntertwiner(residual, what=what)


def symbol_of_intertwiner(A: OperatorMatrix, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> CircleFunction:
    """ phi = A k0_theta, expanded in the K_alpha basis """
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    _require(intertwining_residual(A, s_alpha, s_theta), "S_alpha A = A S_theta")
    theta_basis, alpha_basis = bases
    k0_coefficients = theta_basis.coefficients(k0(theta, theta_basis.grid_size))
    return alpha_basis.combine(A.apply(k0_coefficients))


def membership_residual(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct) -> float:
    """ relative distance of phi to (alpha / gcd) K_gcd """
    gamma = gcd(alpha, theta)
    return model_subspace_residual(phi, gamma, divide(alpha, gamma))


def star_transform(A: OperatorMatrix, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> OperatorMatrix:
    """ C_alpha A C_theta, taking solutions of the plain system to the starred one """
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    _require(intertwining_residual(A, s_alpha, s_theta), "S_alpha A = A S_theta")
    transformed = conjugation_matrix(bases.alpha_basis) @ A @ conjugation_matrix(bases.theta_basis)
    _require(intertwining_residual(transformed, adjoint(s_alpha), adjoint(s_theta)), "S_alpha* A' = A' S_theta*")
    return transformed


def hankel_transform(A: OperatorMatrix, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> OperatorMatrix:
    """ B = J# A C_theta for A : K_theta -> K_{alpha#} intertwining S_{alpha#} and S_theta, B : K_theta -> K_alpha """
    bases = _bases(theta, alpha, bases)
    theta_basis, alpha_basis = bases
    sharp_basis = ModelBasis(alpha.jsharp(), theta_basis.grid_size)
    s_alpha, s_theta = _shifts(bases)
    _require(intertwining_residual(A, compressed_shift(sharp_basis.theta, sharp_basis), s_theta), "S_alpha# A = A S_theta")
    transformed = jsharp_matrix(sharp_basis, alpha_basis) @ A @ conjugation_matrix(theta_basis)
    _require(intertwining_residual(transformed, s_alpha, adjoint(s_theta)), "S_alpha B = B S_theta*")
    return transformed


def sst_transform(B: OperatorMatrix, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> OperatorMatrix:
    """ C_alpha B C_theta, taking solutions of S_alpha B = B S_theta* to S_alpha* B' = B' S_theta """
    bases = _bases(theta, alpha, bases)
    s_alpha, s_theta = _shifts(bases)
    _require(intertwining_residual(B, s_alpha, adjoint(s_theta)), "S_alpha B = B S_theta*")
    transformed = conjugation_matrix(bases.alpha_basis) @ B @ conjugation_matrix(bases.theta_basis)
    _require(intertwining_residual(transformed, adjoint(s_alpha), s_theta), "S_alpha* B' = B' S_theta")
    return transformed


def span_rank(operators: List[OperatorMatrix], rank_tol: Optional[float] = None) -> int:
    """ numerical rank of a family of operators, each flattened to a row """
    if not operators:
        return 0
    stacked = np.array([A.entries.ravel() for A in operators])
    singular_values = np.linalg.svd(stacked, compute_uv=False)
    return int(np.sum(singular_values > tolerance("RANK_TOL", rank_tol) * singular_values[0])) if singular_values[0] > 0 else 0


def reconstruction_residual(A: OperatorMatrix, phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: ModelBases) -> float:
    """ || atto(phi) - A || for a recovered symbol """
    return operator_norm(atto_matrix(phi, theta, alpha, bases).entries - A.entries)
