#!/usr/bin/env python3

"""
    Matrices of A_phi = P_alpha M_phi restricted to K_theta, compressed shifts
    and the analytic defect A - S_alpha A S_theta*.
"""

import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np

from blaschke import BlaschkeProduct
from configVar import tolerance
from modelspace import CircleFunction, ModelBasis, ModelBases, k0
from pymskit.mskitException import GridMismatch
from .operatorMatrix import OperatorMatrix, adjoint

log = logging.getLogger(__name__)


def bases_for(phi_grid_size: int, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases]) -> ModelBases:
    if bases is None:
        bases = ModelBases(ModelBasis(theta, phi_grid_size), ModelBasis(alpha, phi_grid_size))
    if bases.theta_basis.grid_size != phi_grid_size or bases.alpha_basis.grid_size != phi_grid_size:
        raise GridMismatch(phi_grid_size, bases.theta_basis.grid_size, bases.alpha_basis.grid_size)
    return bases


def atto_matrix(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> OperatorMatrix:
    """ entry (i, j) = <phi e_j, f_i>, e_j spanning K_theta and f_i spanning K_alpha """
    bases = bases_for(phi.grid_size, theta, alpha, bases)
    theta_basis, alpha_basis = bases
    entries = (alpha_basis.samples.conj() * phi.samples) @ theta_basis.samples.T / phi.grid_size
    return OperatorMatrix(entries, theta_basis.tag, alpha_basis.tag)


def compressed_shift(theta: BlaschkeProduct, basis: Optional[ModelBasis] = None) -> OperatorMatrix:
    """ S_theta = A_z on K_theta """
    if basis is None:
        from modelspace import tm_basis
        basis = tm_basis(theta)
    z = CircleFunction.monomial(1, basis.grid_size)
    return atto_matrix(z, theta, theta, ModelBases(basis, basis))


class DefectFactorization(NamedTuple):
    defect: np.ndarray
    is_rank_one: bool
    psi: Optional[CircleFunction]        # recovered psi in K_alpha, None when not rank one
    psi_coefficients: Optional[np.ndarray]
    singular_values: Tuple[float, float]
    residual: float                      # || D - psi (x) k0 ||

    def to_json(self) -> dict:
        return {"is_rank_one": self.is_rank_one, "sigma_1": self.singular_values[0],
                "sigma_2": self.singular_values[1], "residual": self.residual,
                "psi_coefficients": self.psi_coefficients}


def analytic_defect(A: OperatorMatrix, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: ModelBases) -> DefectFactorization:
    """ D = A - S_alpha A S_theta*, tested for the form psi (x) k0_theta """
    theta_basis, alpha_basis = bases
    s_alpha = compressed_shift(alpha, alpha_basis)
    s_theta = compressed_shift(theta, theta_basis)
    defect = A.entries - (s_alpha @ A @ adjoint(s_theta)).entries
    k0_coefficients = theta_basis.coefficients(k0(theta, theta_basis.grid_size))

    singular_values = np.linalg.svd(defect, compute_uv=False)
    sigma_1 = float(singular_values[0]) if singular_values.size else 0.0
    sigma_2 = float(singular_values[1]) if singular_values.size > 1 else 0.0

    if sigma_1 < tolerance("DEFECT_ZERO_NORM"):
        psi_coefficients = np.zeros(alpha_basis.dim, dtype=complex)
        return DefectFactorization(defect, True, alpha_basis.combine(psi_coefficients), psi_coefficients, (sigma_1, sigma_2), sigma_1)

    psi_coefficients = defect @ k0_coefficients / np.vdot(k0_coefficients, k0_coefficients).real
    residual = float(np.linalg.norm(defect - np.outer(psi_coefficients, k0_coefficients.conj()), 2))
    is_rank_one = sigma_2 / sigma_1 < tolerance("DEFECT_RANK_RATIO") and residual / sigma_1 < tolerance("POSITIVE_TOL")
    log.debug(f"analytic defect sigma_1={sigma_1:.3e} sigma_2={sigma_2:.3e} residual={residual:.3e}")
    if not is_rank_one:
        return DefectFactorization(defect, False, None, None, (sigma_1, sigma_2), residual)
    return DefectFactorization(defect, True, alpha_basis.combine(psi_coefficients), psi_coefficients, (sigma_1, sigma_2), residual)
