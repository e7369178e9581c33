#!/usr/bin/env python3

"""
    Checks on intertwiners of compressed shifts:
    lemma-3.1, eq-3.2, lemma-3.3, thm-inter, cor-inter2, cor-coprime-zero,
    cor-star, cor-hankel-sts, cor-hankel-sst
"""

import numpy as np

from blaschke import BlaschkeProduct, divide, gcd
from intertwine import cancellation_test, commutator_defect, intersection_subspace, intertwining_residual
from intertwine import hankel_intertwiners, hankel_star_intertwiners, hankel_transform, sst_transform
from intertwine import membership_residual, reconstruction_residual, solve_intertwiners, span_rank
from intertwine import star_transform, starred_intertwiners, symbol_of_intertwiner
from intertwine.commutator import rank_one
from modelspace import CircleFunction, ModelBasis, ModelBases, k0_tilde, model_bases, model_subspace_residual
from operators import adjoint, atto_matrix, compressed_shift, operator_norm
from .checkBase import TheoremCheck
from .instances import describe, random_complex, random_degree, random_intertwiner_symbol, random_laurent
from .instances import random_model_element, random_pair, random_points, random_product
from .verificationReport import agrees, below


def _max(values) -> float:
    return max(values, default=0.0)


class LatticeCheck(TheoremCheck, theorem_id="lemma-3.1", trials=50, degrees=(1, 6)):
    """ alpha K_theta intersected with theta K_alpha is lcm K_gcd """
    fixed_cases = ("z-phi_a-against-z2", "alpha-divides-theta", "coprime")

    def _lattice_residuals(self, theta, alpha, escalation, expected_dimension=None):
        result = intersection_subspace(theta, alpha, self.grid_size(theta, alpha, escalation=escalation))
        residuals = [below("subspace-distance", result.residual, self.tol("POSITIVE_TOL")),
                     agrees("dimension-is-deg-gcd", result.dimension == result.expected_dimension)]
        if expected_dimension is not None:
            residuals.append(agrees(f"dimension-is-{expected_dimension}", result.dimension == expected_dimension))
        instance = dict(describe(theta=theta, alpha=alpha), dimension=result.dimension)
        return instance, residuals, None

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        return self._lattice_residuals(theta, alpha, escalation)

    def fixed_case(self, name, rng, escalation):
        if name == "z-phi_a-against-z2":
            a = random_points(rng, 1, 0.8, 0.2)[0]
            theta = BlaschkeProduct.monomial(1) * BlaschkeProduct.mobius(a)
            return self._lattice_residuals(theta, BlaschkeProduct.monomial(2), escalation, 1)
        if name == "alpha-divides-theta":
            alpha = random_product(rng, 2)
            theta = alpha * random_product(rng, 2)
            return self._lattice_residuals(theta, alpha, escalation, alpha.degree)
        theta, alpha = random_pair(rng, (2, 4), shared=0)
        return self._lattice_residuals(theta, alpha, escalation, 0)


class CommutatorCheck(TheoremCheck, theorem_id="eq-3.2", trials=100, degrees=(1, 6)):
    """ S_alpha A_phi - A_phi S_theta = P_alpha(phi theta) (x) k0_tilde - k0_alpha (x) P_theta(conj(z phi)) """
    fixed_cases = ("constant-symbol",)

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        phi = random_laurent(rng, -3, 3, grid_size)
        defect = commutator_defect(phi, theta, alpha, model_bases(theta, alpha, grid_size))
        instance = dict(describe(theta=theta, alpha=alpha), defect_norm=defect.norm)
        return instance, [below("commutator-formula", defect.formula_residual, self.tol("IDENTITY_TOL"))], None

    def fixed_case(self, name, rng, escalation):
        theta, alpha = random_pair(rng, (2, 4))
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        c = complex(random_complex(rng, 1)[0])
        defect = commutator_defect(CircleFunction.constant(c, grid_size), theta, alpha, bases)
        expected = c * rank_one(bases.alpha_basis.coefficients(CircleFunction.from_blaschke(theta, grid_size)),
                                bases.theta_basis.coefficients(k0_tilde(theta, grid_size)))
        residuals = [below("commutator-formula", defect.formula_residual, self.tol("IDENTITY_TOL")),
                     below("constant-symbol-defect", operator_norm(defect.defect - expected), self.tol("IDENTITY_TOL"))]
        return describe(theta=theta, alpha=alpha), residuals, None


class CancellationCheck(TheoremCheck, theorem_id="lemma-3.3", trials=100, degrees=(2, 5)):
    """ the commutator vanishes exactly when P_lcm(phi theta - c) = 0 for some c;
        even trials build phi in conj(theta H^2) + alpha H^2 + (alpha/gcd) K_gcd, odd trials draw phi at random
    """

    def run_trial(self, index, rng, escalation):
        expect_cancel = index % 2 == 0
        theta, alpha = random_pair(rng, self.degree_range, shared=int(rng.integers(1, self.degree_range[0] + 1)) if expect_cancel else None)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        if expect_cancel:
            alpha_samples = CircleFunction.from_blaschke(alpha, grid_size)
            theta_samples = CircleFunction.from_blaschke(theta, grid_size)
            phi = (random_intertwiner_symbol(rng, theta, alpha, grid_size)
                   + alpha_samples * random_laurent(rng, 0, 3, grid_size)
                   + (theta_samples * random_laurent(rng, 0, 3, grid_size)).conj())
        else:
            phi = random_laurent(rng, -3, 3, grid_size)
        defect = commutator_defect(phi, theta, alpha, model_bases(theta, alpha, grid_size))
        cancellation = cancellation_test(phi, theta, alpha)
        commutes = defect.norm < self.tol("IDENTITY_TOL")
        residuals = [agrees("cancellation-matches-commutator", cancellation.cancels == commutes),
                     agrees("cancels" if expect_cancel else "does-not-cancel", cancellation.cancels == expect_cancel)]
        if expect_cancel:
            residuals.append(self.positive("commutator-norm", defect.norm, "IDENTITY_TOL"))
        else:
            residuals.append(self.negative("commutator-norm", defect.norm))
        instance = dict(describe(theta=theta, alpha=alpha), cancellation=cancellation.to_json())
        return instance, residuals, "cancels" if cancellation.cancels else "does-not-cancel"


class IntertwinerCheck(TheoremCheck, theorem_id="thm-inter", trials=100, degrees=(1, 8)):
    """ S_alpha A = A S_theta iff A = A_phi with phi in (alpha/gcd) K_gcd; the solution space has dimension deg gcd """

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        solutions = solve_intertwiners(theta, alpha, bases)
        expected = gcd(alpha, theta).degree
        reconstructions, memberships = list(), list()
        for A in solutions:
            phi = symbol_of_intertwiner(A, theta, alpha, bases)
            reconstructions.append(reconstruction_residual(A, phi, theta, alpha, bases))
            memberships.append(membership_residual(phi, theta, alpha))
        residuals = [agrees("dimension-is-deg-gcd", len(solutions) == expected),
                     below("symbol-reconstruction", _max(reconstructions), self.tol("POSITIVE_TOL")),
                     below("symbol-membership", _max(memberships), self.tol("POSITIVE_TOL"))]
        return dict(describe(theta=theta, alpha=alpha), dimension=len(solutions)), residuals, None


class DivisibilityIntertwinerCheck(TheoremCheck, theorem_id="cor-inter2", trials=60, degrees=(1, 5)):
    """ trial index mod 3 picks alpha | theta (symbols in K_alpha), theta | alpha (symbols in (alpha/theta) K_theta)
        or alpha = theta (symbols in K_theta); every symbol of the class also gives an intertwiner
    """

    def run_trial(self, index, rng, escalation):
        subcase = index % 3
        first = random_product(rng, random_degree(rng, self.degree_range))
        if subcase == 0:
            alpha, theta = first, first * random_product(rng, random_degree(rng, self.degree_range))
            inner, factor, label = alpha, None, "alpha-divides-theta"
        elif subcase == 1:
            theta, alpha = first, first * random_product(rng, random_degree(rng, self.degree_range))
            inner, factor, label = theta, divide(alpha, theta), "theta-divides-alpha"
        else:
            theta = first
            alpha = BlaschkeProduct(theta.zeros, complex(np.exp(2j * np.pi * rng.uniform())))
            inner, factor, label = theta, None, "alpha-equals-theta"
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        solutions = solve_intertwiners(theta, alpha, bases)
        class_residuals = [model_subspace_residual(symbol_of_intertwiner(A, theta, alpha, bases), inner, factor) for A in solutions]

        element = random_model_element(rng, inner, grid_size)
        if factor is not None:
            element = CircleFunction.from_blaschke(factor, grid_size) * element
        converse = intertwining_residual(atto_matrix(element, theta, alpha, bases),
                                         compressed_shift(alpha, bases.alpha_basis), compressed_shift(theta, bases.theta_basis))
        residuals = [agrees("dimension-is-deg-gcd", len(solutions) == inner.degree),
                     below("symbol-class", _max(class_residuals), self.tol("POSITIVE_TOL")),
                     below("class-symbol-intertwines", converse, self.tol("POSITIVE_TOL"))]
        return describe(theta=theta, alpha=alpha), residuals, label


class CoprimeCheck(TheoremCheck, theorem_id="cor-coprime-zero", trials=50, degrees=(1, 8)):
    """ coprime theta and alpha admit only the zero intertwiner """

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range, shared=0)
        bases = model_bases(theta, alpha, self.grid_size(theta, alpha, escalation=escalation))
        solutions = solve_intertwiners(theta, alpha, bases)
        residuals = [agrees("solution-space-empty", len(solutions) == 0),
                     agrees("gcd-is-unit", gcd(alpha, theta).degree == 0)]
        return dict(describe(theta=theta, alpha=alpha), dimension=len(solutions)), residuals, None


class StarIntertwinerCheck(TheoremCheck, theorem_id="cor-star", trials=50, degrees=(1, 6)):
    """ S_alpha* A = A S_theta*: dimension deg gcd, spanned by C_alpha I C_theta,
        and A* is a plain intertwiner, so A = A_{conj(psi)} with psi in (theta/gcd) K_gcd
    """

    def run_trial(self, index, rng, escalation):
        theta, alpha = random_pair(rng, self.degree_range)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        starred = starred_intertwiners(theta, alpha, bases)
        transformed = [star_transform(A, theta, alpha, bases) for A in solve_intertwiners(theta, alpha, bases)]

        swapped = ModelBases(bases.alpha_basis, bases.theta_basis)
        memberships, reconstructions = list(), list()
        for A in starred:
            psi = symbol_of_intertwiner(adjoint(A), alpha, theta, swapped)
            memberships.append(membership_residual(psi, alpha, theta))
            reconstructions.append(operator_norm(atto_matrix(psi.conj(), theta, alpha, bases).entries - A.entries))
        expected = gcd(alpha, theta).degree
        residuals = [agrees("dimension-is-deg-gcd", len(starred) == expected),
                     agrees("transforms-span-solutions", span_rank(starred + transformed) == len(starred) == len(transformed)),
                     below("adjoint-symbol-class", _max(memberships), self.tol("POSITIVE_TOL")),
                     below("conjugate-symbol-reconstruction", _max(reconstructions), self.tol("POSITIVE_TOL"))]
        return dict(describe(theta=theta, alpha=alpha), dimension=len(starred)), residuals, None


def _sharp_pair(check: TheoremCheck, rng):
    """ theta and alpha with some zeros of alpha conjugate to zeros of theta """
    return random_pair(rng, check.degree_range, conjugate_shared=True)


class HankelIntertwinerCheck(TheoremCheck, theorem_id="cor-hankel-sts", trials=50, degrees=(1, 6)):
    """ S_alpha B = B S_theta*: dimension deg gcd(alpha#, theta), spanned by J# A C_theta for A intertwining S_alpha# and S_theta """

    def run_trial(self, index, rng, escalation):
        theta, alpha = _sharp_pair(self, rng)
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        alpha_sharp = alpha.jsharp()
        sharp_bases = ModelBases(bases.theta_basis, ModelBasis(alpha_sharp, grid_size))
        hankel = hankel_intertwiners(theta, alpha, bases)
        transformed = [hankel_transform(A, theta, alpha, bases) for A in solve_intertwiners(theta, alpha_sharp, sharp_bases)]
        expected = gcd(alpha_sharp, theta).degree
        residuals = [agrees("dimension-is-deg-gcd-sharp", len(hankel) == expected),
                     agrees("transforms-span-solutions", span_rank(hankel + transformed) == len(hankel) == len(transformed))]
        return dict(describe(theta=theta, alpha=alpha), dimension=len(hankel)), residuals, None


class HankelStarIntertwinerCheck(TheoremCheck, theorem_id="cor-hankel-sst", trials=50, degrees=(1, 6)):
    """ S_alpha* B = B S_theta: dimension deg gcd(alpha#, theta), spanned by C_alpha B C_theta for the truncated Hankel solutions """

    def run_trial(self, index, rng, escalation):
        theta, alpha = _sharp_pair(self, rng)
        bases = model_bases(theta, alpha, self.grid_size(theta, alpha, escalation=escalation))
        companions = hankel_star_intertwiners(theta, alpha, bases)
        transformed = [sst_transform(B, theta, alpha, bases) for B in hankel_intertwiners(theta, alpha, bases)]
        expected = gcd(alpha.jsharp(), theta).degree
        residuals = [agrees("dimension-is-deg-gcd-sharp", len(companions) == expected),
                     agrees("transforms-span-solutions", span_rank(companions + transformed) == len(companions) == len(transformed))]
        return dict(describe(theta=theta, alpha=alpha), dimension=len(companions)), residuals, None
