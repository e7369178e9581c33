#!/usr/bin/env python3

"""
    Checks on model spaces and truncated Toeplitz matrices:
    model-basis, prop-2.1, lemma-2.4, prop-4.1-contractive, thm-4.2-norm
"""

import numpy as np

from blaschke import BlaschkeProduct
from modelspace import CircleFunction, ModelBasis, ModelBases, model_bases
from modelspace import conjugation_matrix, k0_tilde, model_subspace_residual, reproducing_kernel
from operators import OperatorMatrix, adjoint, analytic_defect, atto_matrix, dist_to_alpha_Hinf, operator_norm
from .checkBase import TheoremCheck
from .instances import describe, random_complex, random_intertwiner_symbol, random_laurent, random_model_element
from .instances import random_pair, random_points, random_product, random_degree
from .verificationReport import agrees, below


class ModelBasisCheck(TheoremCheck, theorem_id="model-basis", trials=50, degrees=(1, 8)):
    """ Gram matrix, reproducing property, C_theta involution and isometry, k0 tilde """

    def run_trial(self, index, rng, escalation):
        theta = random_product(rng, random_degree(rng, self.degree_range))
        grid_size = self.grid_size(theta, escalation=escalation)
        basis = ModelBasis(theta, grid_size)
        quadrature_tol = self.tol("QUADRATURE_TOL")
        identity_tol = self.tol("IDENTITY_TOL")

        gram_residual = operator_norm(basis.gram() - np.eye(basis.dim))

        w = random_points(rng, 1, 0.5)[0]
        f = random_model_element(rng, theta, grid_size)
        coefficients = basis.coefficients(f)
        value_at_w = sum(c * basis.evaluate(j, w) for j, c in enumerate(coefficients))
        kernel_residual = abs(f.inner(reproducing_kernel(theta, w, grid_size)) - value_at_w)

        C = conjugation_matrix(basis)
        involution_residual = operator_norm((C @ C).entries - np.eye(basis.dim))
        isometry_residual = operator_norm(C.entries.conj().T @ C.entries - np.eye(basis.dim))

        k0t = k0_tilde(theta, grid_size)
        theta_0 = theta.value_at_zero()
        k0t_norm_residual = abs(k0t.norm() - np.sqrt(1.0 - abs(theta_0) ** 2))

        residuals = [below("gram", gram_residual, quadrature_tol),
                     below("reproducing-kernel", kernel_residual, identity_tol),
                     below("conjugation-involution", involution_residual, quadrature_tol),
                     below("conjugation-isometry", isometry_residual, quadrature_tol),
                     below("k0-tilde-membership", model_subspace_residual(k0t, theta), identity_tol),
                     below("k0-tilde-norm", k0t_norm_residual, identity_tol)]
        return dict(describe(theta=theta), grid_size=grid_size), residuals, None


class SymbolKernelCheck(TheoremCheck, theorem_id="prop-2.1", trials=50, degrees=(1, 6)):
    """ adjoint swap, linearity, the symbol kernel and, for alpha dividing theta, the co-analytic Toeplitz compression """

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        quadrature_tol = self.tol("QUADRATURE_TOL")

        phi = random_laurent(rng, -4, 4, grid_size)
        psi = random_laurent(rng, -4, 4, grid_size)
        a, b = random_complex(rng, 2)
        A = atto_matrix(phi, theta, alpha, bases)

        swapped = atto_matrix(phi.conj(), alpha, theta, ModelBases(bases.alpha_basis, bases.theta_basis))
        swap_residual = operator_norm(adjoint(A).entries - swapped.entries)
        combined = atto_matrix(a * phi + b * psi, theta, alpha, bases)
        linearity_residual = operator_norm(combined.entries - a * A.entries - b * atto_matrix(psi, theta, alpha, bases).entries)

        alpha_samples = CircleFunction.from_blaschke(alpha, grid_size)
        theta_samples = CircleFunction.from_blaschke(theta, grid_size)
        h, p = random_laurent(rng, 0, 4, grid_size), random_laurent(rng, 0, 4, grid_size)
        shifted = phi + alpha_samples * h + (theta_samples * p.shift(1)).conj()
        kernel_residual = operator_norm(atto_matrix(shifted, theta, alpha, bases).entries - A.entries)
        vanishing_residual = operator_norm(atto_matrix(alpha_samples * h, theta, alpha, bases).entries)

        residuals = [below("adjoint-swap", swap_residual, quadrature_tol),
                     below("linearity", linearity_residual, quadrature_tol),
                     below("symbol-kernel", kernel_residual, quadrature_tol),
                     below("alpha-multiple-vanishes", vanishing_residual, quadrature_tol)]
        residuals.extend(self._coanalytic_compression(rng, grid_size))
        return describe(theta=theta, alpha=alpha), residuals, None

    def _coanalytic_compression(self, rng, grid_size):
        """ alpha | theta, analytic phi: adjoint of A_phi^{theta,alpha} is T_conj(phi) on K_alpha, landing in K_theta """
        alpha = random_product(rng, random_degree(rng, self.degree_range))
        theta = alpha * random_product(rng, random_degree(rng, self.degree_range))
        grid_size = max(grid_size, self.grid_size(theta))
        theta_basis, alpha_basis = model_bases(theta, alpha, grid_size)
        phi = random_laurent(rng, 0, 4, grid_size)
        A = atto_matrix(phi, theta, alpha, ModelBases(theta_basis, alpha_basis))
        toeplitz_images = np.array([(phi.conj() * alpha_basis.element(i)).plus().samples for i in range(alpha_basis.dim)])
        toeplitz = theta_basis.coefficient_matrix(toeplitz_images)
        landing = max((CircleFunction(row) - theta_basis.combine(theta_basis.coefficients(CircleFunction(row)))).norm()
                      for row in toeplitz_images)
        return [below("coanalytic-compression", operator_norm(adjoint(A).entries - toeplitz), self.tol("QUADRATURE_TOL")),
                below("coanalytic-image-in-model-space", landing, self.tol("IDENTITY_TOL"))]


class AnalyticDefectCheck(TheoremCheck, theorem_id="lemma-2.4", trials=50, degrees=(2, 6)):
    """ A - S_alpha A S_theta* = psi (x) k0_theta exactly for truncated Toeplitz A """
    fixed_cases = ("zero-operator",)

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        psi = random_model_element(rng, alpha, grid_size)
        A = atto_matrix(psi, theta, alpha, bases)
        factorization = analytic_defect(A, theta, alpha, bases)
        recovered = (factorization.psi - psi).norm() if factorization.is_rank_one else np.inf
        reconstruction = operator_norm(atto_matrix(factorization.psi, theta, alpha, bases).entries - A.entries) if factorization.is_rank_one else np.inf

        dense = OperatorMatrix(random_complex(rng, A.shape), A.domain, A.codomain)
        dense_factorization = analytic_defect(dense, theta, alpha, bases)
        residuals = [agrees("toeplitz-defect-rank-one", factorization.is_rank_one),
                     below("recovered-psi", recovered, self.tol("IDENTITY_TOL")),
                     below("reconstruction", reconstruction, self.tol("IDENTITY_TOL")),
                     agrees("dense-defect-not-rank-one", not dense_factorization.is_rank_one)]
        instance = dict(describe(theta=theta, alpha=alpha), dense_sigma_2=dense_factorization.singular_values[1])
        return instance, residuals, "rank-one" if factorization.is_rank_one else "not-rank-one"

    def fixed_case(self, name, rng, escalation):
        theta, alpha = BlaschkeProduct.monomial(3), BlaschkeProduct([0.5, -0.25j])
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        A = atto_matrix(CircleFunction.constant(0.0, grid_size), theta, alpha, bases)
        factorization = analytic_defect(A, theta, alpha, bases)
        residuals = [agrees("zero-defect-rank-one", factorization.is_rank_one),
                     below("zero-psi", factorization.psi.norm(), self.tol("IDENTITY_TOL"))]
        return describe(theta=theta, alpha=alpha), residuals, "zero"


class ContractivityCheck(TheoremCheck, theorem_id="prop-4.1-contractive", trials=200, degrees=(1, 6)):
    """ ||A_phi|| <= sup |phi| """

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        if index % 2:
            phi = random_laurent(rng, -6, 6, grid_size)
        else:
            # a bounded rational symbol
            phi = CircleFunction.from_blaschke(random_product(rng, 2), grid_size) * random_laurent(rng, -2, 2, grid_size)
        norm = operator_norm(atto_matrix(phi, theta, alpha, model_bases(theta, alpha, grid_size)))
        excess = max(0.0, norm - phi.sup_norm())
        instance = dict(describe(theta=theta, alpha=alpha), norm=norm, sup_norm=phi.sup_norm())
        return instance, [below("norm-excess", excess, self.tol("IDENTITY_TOL"))], None


class NormIdentityCheck(TheoremCheck, theorem_id="thm-4.2-norm", trials=20, degrees=(1, 5)):
    """ ||A_phi|| = dist(phi, alpha H^inf) for symbols of intertwiners """

    def run_trial(self, index, rng, escalation):
        degrees = self.degree_range
        shared = int(rng.integers(1, degrees[0] + 1))
        theta, alpha = random_pair(rng, degrees, shared=shared)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        phi = random_intertwiner_symbol(rng, theta, alpha, grid_size)
        norm = operator_norm(atto_matrix(phi, theta, alpha, model_bases(theta, alpha, grid_size)))
        distance = dist_to_alpha_Hinf(phi, alpha)
        residuals = [below("norm-identity", abs(norm - distance), self.tol("NORM_IDENTITY_TOL")),
                     below("norm-excess", max(0.0, norm - phi.sup_norm()), self.tol("IDENTITY_TOL"))]
        return dict(describe(theta=theta, alpha=alpha), norm=norm, distance=distance), residuals, None
