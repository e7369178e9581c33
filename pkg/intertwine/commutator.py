#!/usr/bin/env python3

"""
    S_alpha A_phi - A_phi S_theta = P_alpha(phi theta) (x) k0~_theta - k0_alpha (x) P_theta(conj(z phi))
    where x (x) y : f -> <f, y> x, and when the right hand side cancels.
"""

import logging
from typing import NamedTuple, Optional

import numpy as np

from blaschke import BlaschkeProduct, lcm
from configVar import tolerance
from modelspace import CircleFunction, ModelBasis, ModelBases, model_bases, k0, k0_tilde
from operators import atto_matrix, compressed_shift, operator_norm

log = logging.getLogger(__name__)


def rank_one(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """ matrix of f -> <f, y> x in orthonormal coordinates """
    return np.outer(x, np.conj(y))


class CommutatorDefect(NamedTuple):
    defect: np.ndarray      # S_alpha A - A S_theta
    formula: np.ndarray     # the two rank one terms
    formula_residual: float

    @property
    def norm(self) -> float:
        return operator_norm(self.defect)


def commutator_defect(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, bases: Optional[ModelBases] = None) -> CommutatorDefect:
    if bases is None:
        bases = model_bases(theta, alpha, phi.grid_size)
    theta_basis, alpha_basis = bases
    grid_size = phi.grid_size
    A = atto_matrix(phi, theta, alpha, bases)
    defect = (compressed_shift(alpha, alpha_basis) @ A).entries - (A @ compressed_shift(theta, theta_basis)).entries

    theta_samples = CircleFunction.from_blaschke(theta, grid_size)
    z = CircleFunction.monomial(1, grid_size)
    left = rank_one(alpha_basis.coefficients(phi * theta_samples), theta_basis.coefficients(k0_tilde(theta, grid_size)))
    right = rank_one(alpha_basis.coefficients(k0(alpha, grid_size)), theta_basis.coefficients((z * phi).conj()))
    formula = left - right
    return CommutatorDefect(defect, formula, operator_norm(defect - formula))


class CancellationResult(NamedTuple):
    cancels: bool
    c: complex
    residual: float

    def to_json(self) -> dict:
        return {"cancels": self.cancels, "c": self.c, "residual": self.residual}


def cancellation_test(phi: CircleFunction, theta: BlaschkeProduct, alpha: BlaschkeProduct, tol: Optional[float] = None) -> CancellationResult:
    """ is there c with P_lcm(phi theta - c) = 0, c fitted by least squares against P_lcm 1 """
    eta = lcm(alpha, theta)
    eta_basis = ModelBasis(eta, phi.grid_size)
    projected = eta_basis.coefficients(phi * CircleFunction.from_blaschke(theta, phi.grid_size))
    kernel = eta_basis.coefficients(CircleFunction.constant(1.0, phi.grid_size))
    c = complex(np.vdot(kernel, projected) / np.vdot(kernel, kernel))
    residual = float(np.linalg.norm(projected - c * kernel))
    log.debug(f"cancellation c={c:.6g} residual={residual:.3e}")
    return CancellationResult(residual < tolerance("IDENTITY_TOL", tol), c, residual)
