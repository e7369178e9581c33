#!/usr/bin/env python3

"""
    Block operators K_theta^perp -> K_alpha^perp in the windowed sections:

        [ T^_psi1  G'_psi2 ]      T^[i, j] = c_{i-j}(psi1 theta conj(alpha))
        [ G^_psi3  T'_psi4 ]      G'[i, k] = c_{i+k}(psi2 conj(alpha))
                                  G^[k, j] = c_{-k-j}(psi3 theta)
                                  T'[l, k] = c_{k-l}(psi4)

    with hat indices i, j >= 0 and check indices k, l >= 1.
"""

import logging
from typing import Dict, NamedTuple, Optional

import numpy as np
import scipy.linalg

from blaschke import BlaschkeProduct
from modelspace import CircleFunction
from operators import operator_norm
from pymskit.mskitException import GridMismatch
from .laurentWindow import LaurentWindow, SectionPair, WindowSections, window_bases

log = logging.getLogger(__name__)

BLOCK_NAMES = ("t_hat", "gamma_check", "gamma_hat", "t_check")


class DualBlockOperator(NamedTuple):
    t_hat: np.ndarray
    gamma_check: np.ndarray
    gamma_hat: np.ndarray
    t_check: np.ndarray
    sections: SectionPair

    @property
    def theta(self) -> BlaschkeProduct:
        return self.sections.theta_sections.theta

    @property
    def alpha(self) -> BlaschkeProduct:
        return self.sections.alpha_sections.theta

    @property
    def window(self) -> LaurentWindow:
        return self.sections.theta_sections.window

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.t_hat, self.gamma_check], [self.gamma_hat, self.t_check]])

    def block_norms(self) -> Dict[str, float]:
        return {name: operator_norm(getattr(self, name)) for name in BLOCK_NAMES}

    def block_mismatch(self, other: "DualBlockOperator") -> Dict[str, float]:
        return {name: operator_norm(getattr(self, name) - getattr(other, name)) for name in BLOCK_NAMES}

    def to_json(self) -> dict:
        return {"window": self.window.to_json(), "block_norms": self.block_norms()}


def _checked(psi: CircleFunction, window: LaurentWindow) -> CircleFunction:
    if psi.grid_size != window.grid_size:
        raise GridMismatch(window.grid_size, psi.grid_size)
    return psi


def block_operator(psi1: CircleFunction, psi2: CircleFunction, psi3: CircleFunction, psi4: CircleFunction,
                   theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow,
                   sections: Optional[SectionPair] = None) -> DualBlockOperator:
    sections = sections if sections is not None else window_bases(theta, alpha, window)
    k_theta, k_alpha, size = sections.theta_sections.hat_size, sections.alpha_sections.hat_size, sections.theta_sections.check_size
    grid_size = window.grid_size
    theta_samples = CircleFunction.from_blaschke(theta, grid_size)
    alpha_bar = CircleFunction.from_blaschke(alpha, grid_size).conj()

    t_hat_symbol = _checked(psi1, window) * theta_samples * alpha_bar
    t_hat = scipy.linalg.toeplitz(t_hat_symbol.laurent(0, k_alpha - 1), t_hat_symbol.coefficient(-np.arange(k_theta)))

    gamma_check_symbol = _checked(psi2, window) * alpha_bar
    gamma_check = scipy.linalg.hankel(gamma_check_symbol.laurent(1, k_alpha), gamma_check_symbol.laurent(k_alpha, k_alpha + size - 1))

    gamma_hat_symbol = _checked(psi3, window) * theta_samples
    gamma_hat = scipy.linalg.hankel(gamma_hat_symbol.coefficient(-np.arange(1, size + 1)),
                                    gamma_hat_symbol.coefficient(-np.arange(size, size + k_theta)))

    psi4 = _checked(psi4, window)
    t_check = scipy.linalg.toeplitz(psi4.coefficient(-np.arange(size)), psi4.laurent(0, size - 1))
    return DualBlockOperator(t_hat, gamma_check, gamma_hat, t_check, sections)


def dtto_blocks(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow,
                sections: Optional[SectionPair] = None) -> DualBlockOperator:
    """ D_phi = P_alpha^perp M_phi on K_theta^perp """
    return block_operator(phi, phi, phi, phi, theta, alpha, window, sections)


def dz_block(theta: BlaschkeProduct, window: LaurentWindow, sections: Optional[WindowSections] = None) -> DualBlockOperator:
    """ D_z on K_theta^perp: shifts on both sections and the corner conj(theta(0)) theta (x) conj(z) """
    sections = sections if sections is not None else WindowSections(theta, window)
    hat_size, check_size = sections.hat_size, sections.check_size
    gamma_check = np.zeros((hat_size, check_size), dtype=complex)
    gamma_check[0, 0] = np.conj(theta.value_at_zero())
    return DualBlockOperator(np.eye(hat_size, k=-1, dtype=complex), gamma_check,
                             np.zeros((check_size, hat_size), dtype=complex),
                             np.eye(check_size, k=1, dtype=complex), SectionPair(sections, sections))


def apply_by_multiplication(phi: CircleFunction, coordinates, sections: SectionPair) -> np.ndarray:
    """ P_alpha^perp (phi f) for f given by theta-section coordinates, by sampling and projecting """
    f = sections.theta_sections.combine(coordinates)
    return sections.alpha_sections.coordinates(phi * f)


def conjugation_permutation(sections: WindowSections):
    """ C_theta on K_theta^perp: theta z**j -> z**-(j+1), z**-k -> theta z**(k-1).
        Returns the permutation matrix P (C v = P conj(v)) and the mask of columns whose image is inside the sections.
    """
    hat_size, check_size = sections.hat_size, sections.check_size
    permutation = np.zeros((sections.dim, sections.dim), dtype=complex)
    has_image = np.zeros(sections.dim, dtype=bool)
    for j in range(hat_size):
        if j + 1 <= check_size:
            permutation[hat_size + j, j] = 1.0
            has_image[j] = True
    for k in range(1, check_size + 1):
        if k - 1 < hat_size:
            permutation[k - 1, hat_size + k - 1] = 1.0
            has_image[hat_size + k - 1] = True
    return permutation, has_image


def dual_conjugation_residual(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> float:
    """ || P_alpha conj(D_phi) - D_psi P_theta || with psi = alpha conj(phi) conj(theta), on interior rows and columns """
    sections = window_bases(theta, alpha, window)
    grid_size = window.grid_size
    psi = CircleFunction.from_blaschke(alpha, grid_size) * phi.conj() * CircleFunction.from_blaschke(theta, grid_size).conj()
    d_phi = dtto_blocks(phi, theta, alpha, window, sections).matrix
    d_psi = dtto_blocks(psi, theta, alpha, window, sections).matrix
    p_alpha, alpha_has_image = conjugation_permutation(sections.alpha_sections)
    p_theta, theta_has_image = conjugation_permutation(sections.theta_sections)
    rows = np.any(p_alpha[:, alpha_has_image] != 0, axis=1) & sections.alpha_sections.interior_mask()
    cols = theta_has_image & sections.theta_sections.interior_mask()
    difference = p_alpha @ d_phi.conj() - d_psi @ p_theta
    return operator_norm(difference[np.ix_(rows, cols)])
