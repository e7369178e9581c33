#!/usr/bin/env python3

"""
    alpha K_theta and theta K_alpha as subspaces of K_{alpha theta},
    their intersection by principal angles, compared with lcm K_gcd.
"""

import logging
from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg

from blaschke import BlaschkeProduct, gcd, lcm
from configVar import tolerance
from modelspace import ModelBasis, grid_points, required_grid_size

log = logging.getLogger(__name__)


class LatticeResult(NamedTuple):
    basis: np.ndarray           # orthonormal columns in K_{alpha theta} coordinates
    dimension: int
    expected_dimension: int
    residual: float             # projector distance to lcm K_gcd

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "expected_dimension": self.expected_dimension, "residual": self.residual}


def _multiplied_span(multiplier: BlaschkeProduct, inner: BlaschkeProduct, ambient: ModelBasis) -> np.ndarray:
    """ orthonormal columns spanning multiplier K_inner inside the ambient model space """
    if inner.degree == 0:
        return np.zeros((ambient.dim, 0), dtype=complex)
    basis = ModelBasis(inner, ambient.grid_size)
    images = multiplier(grid_points(ambient.grid_size)) * basis.samples
    return scipy.linalg.orth(ambient.coefficient_matrix(images))


def subspace_distance(first: np.ndarray, second: np.ndarray) -> float:
    """ ||P_first - P_second||, 1 when the dimensions differ """
    if first.shape[1] != second.shape[1]:
        return 1.0
    if first.shape[1] == 0:
        return 0.0
    difference = first @ first.conj().T - second @ second.conj().T
    return float(np.linalg.norm(difference, 2))


def intersection_subspace(theta: BlaschkeProduct, alpha: BlaschkeProduct, grid_size: Optional[int] = None,
                          angle_tol: Optional[float] = None) -> LatticeResult:
    angle_tol = tolerance("PRINCIPAL_ANGLE_TOL", angle_tol)
    grid_size = required_grid_size(theta, alpha, base=grid_size)
    ambient = ModelBasis(alpha * theta, grid_size)
    q_alpha_theta = _multiplied_span(alpha, theta, ambient)
    q_theta_alpha = _multiplied_span(theta, alpha, ambient)
    left, cosines, _ = np.linalg.svd(q_alpha_theta.conj().T @ q_theta_alpha)
    log.debug(f"principal cosines {np.round(cosines, 12)}")
    intersection = q_alpha_theta @ left[:, :cosines.size][:, cosines > 1.0 - angle_tol]

    gamma = gcd(alpha, theta)
    expected = _multiplied_span(lcm(alpha, theta), gamma, ambient)
    residual = subspace_distance(intersection, expected)
    return LatticeResult(intersection, intersection.shape[1], gamma.degree, residual)
