#!/usr/bin/env python3

"""
    When does a dual operator commute with the dual shifts: D D_z^theta = D_z^alpha D.
    Identities are compared on interior rows and columns of the sections only.
"""

import enum
import logging
from typing import Optional

import numpy as np

from blaschke import BlaschkeProduct, divide, gcd, same_zeros
from configVar import tolerance
from modelspace import CircleFunction, grid_points, k0, model_subspace_residual
from operators import operator_norm
from .dualBlocks import DualBlockOperator, dtto_blocks, dz_block
from .laurentWindow import LaurentWindow, WindowSections

log = logging.getLogger(__name__)


def _interior(matrix: np.ndarray, D: DualBlockOperator) -> np.ndarray:
    return matrix[np.ix_(D.sections.alpha_sections.interior_mask(), D.sections.theta_sections.interior_mask())]


def commutator_matrix(D: DualBlockOperator) -> np.ndarray:
    """ D D_z^theta - D_z^alpha D, exact on interior rows and columns """
    dz_theta = dz_block(D.theta, D.window, D.sections.theta_sections).matrix
    dz_alpha = dz_block(D.alpha, D.window, D.sections.alpha_sections).matrix
    return D.matrix @ dz_theta - dz_alpha @ D.matrix


def kmutant_intertwine_residual(D: DualBlockOperator, theta: Optional[BlaschkeProduct] = None,
                                alpha: Optional[BlaschkeProduct] = None, window: Optional[LaurentWindow] = None) -> float:
    """ operator norm of the interior part of D D_z^theta - D_z^alpha D """
    if theta is not None and theta.key() != D.theta.key():
        raise ValueError(f"operator domain is built on {D.theta.key()}, not {theta.key()}")
    if alpha is not None and alpha.key() != D.alpha.key():
        raise ValueError(f"operator codomain is built on {D.alpha.key()}, not {alpha.key()}")
    if window is not None and window != D.window:
        raise ValueError(f"operator is built on window {D.window}, not {window}")
    return operator_norm(_interior(commutator_matrix(D), D))


def interior_commutator_residual(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> float:
    return kmutant_intertwine_residual(dtto_blocks(phi, theta, alpha, window))


def rank2_identity_residual(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> float:
    """ D_phi D_z - D_z D_phi = alpha (x) C_theta P_theta^perp(theta conj(alpha) phi k0_alpha) - P_alpha^perp(phi k0_theta) (x) conj(z) """
    D = dtto_blocks(phi, theta, alpha, window)
    theta_sections, alpha_sections = D.sections
    grid_size = window.grid_size
    z = grid_points(grid_size)
    theta_samples = CircleFunction.from_blaschke(theta, grid_size)

    w = theta_samples * CircleFunction.from_blaschke(alpha, grid_size).conj() * phi * k0(alpha, grid_size)
    w_perp = w.minus() + theta_samples * (theta_samples.conj() * w).plus()
    x = theta_sections.coordinates(CircleFunction(theta_samples.samples * z.conj() * w_perp.samples.conj()))
    y = alpha_sections.coordinates(phi * k0(theta, grid_size))

    formula = np.outer(alpha_sections.unit_vector("hat", 0), x.conj()) - np.outer(y, theta_sections.unit_vector("check", 1).conj())
    return operator_norm(_interior(commutator_matrix(D) - formula, D))


def shift_matrix(sections: WindowSections) -> np.ndarray:
    """ M_z on vectors with no conj(z) component: hat j -> hat j+1, check k -> check k-1 """
    shift = np.zeros((sections.dim, sections.dim), dtype=complex)
    shift[:sections.hat_size, :sections.hat_size] = np.eye(sections.hat_size, k=-1)
    shift[sections.hat_size:, sections.hat_size:] = np.eye(sections.check_size, k=1)
    return shift


def shift_invariance_residual(D: DualBlockOperator) -> float:
    """ max |<D z f, z g> - <D f, g>| over interior basis vectors f, g orthogonal to conj(z) """
    theta_sections, alpha_sections = D.sections
    moved = shift_matrix(alpha_sections).conj().T @ D.matrix @ shift_matrix(theta_sections) - D.matrix
    rows = alpha_sections.interior_mask()
    rows[alpha_sections.hat_size] = False
    cols = theta_sections.interior_mask()
    cols[theta_sections.hat_size] = False
    selected = moved[np.ix_(rows, cols)]
    return float(np.max(np.abs(selected))) if selected.size else 0.0


class IdattoCase(str, enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    NONE = "none"
    TRIVIAL = "trivial"


def idatto_case1_residual(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct) -> float:
    """ relative distance of phi to (alpha / gcd) K_{z gcd} """
    gamma = gcd(alpha, theta)
    return model_subspace_residual(phi, gamma * BlaschkeProduct.monomial(1), divide(alpha, gamma))


def idatto_case2_residual(phi: CircleFunction, theta: BlaschkeProduct) -> float:
    """ relative distance of phi k0_theta to K_{z theta} """
    return model_subspace_residual(phi * k0(theta, phi.grid_size), theta * BlaschkeProduct.monomial(1))


def idatto_classify(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct) -> IdattoCase:
    if phi.norm() == 0.0:
        return IdattoCase.TRIVIAL
    value_tol = tolerance("VALUE_AT_ZERO_TOL")
    positive_tol = tolerance("POSITIVE_TOL")
    if abs(alpha.value_at_zero()) < value_tol and abs(theta.value_at_zero()) < value_tol:
        if idatto_case1_residual(phi, theta, alpha) < positive_tol:
            return IdattoCase.CASE1
    if same_zeros(alpha, theta) and idatto_case2_residual(phi, theta) < positive_tol:
        return IdattoCase.CASE2
    return IdattoCase.NONE
