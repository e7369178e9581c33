#!/usr/bin/env python3

"""
    Checks on dual truncated Toeplitz operators on K_theta^perp:
    lemma-5.1, thm-5.2-idatto, idatto-rank2, cor-5.3-wnios, lemma-6.1,
    shift-invariance, thm-6.3-kmutant, remark-6.5-nonsymbol

    Dual instances draw zeros from the smaller DUAL_MAX_ZERO_RADIUS disk so that
    theta's Fourier tail fits inside the default window.
"""

from typing import List, Optional, Tuple

import numpy as np

from blaschke import BlaschkeProduct
from dualspace import DualBlockOperator, IdattoCase, KmutantCase, LaurentWindow
from dualspace import block_operator, c18_conditions, case_for, dtto_blocks, dual_conjugation_residual
from dualspace import idatto_classify, interior_commutator_residual, kmutant_intertwine_residual, kmutant_symbols
from dualspace import rank2_identity_residual, reference_intertwiners, remark_mismatch, shift_invariance_residual
from modelspace import CircleFunction, conjugation_matrix, model_bases
from operators import atto_matrix, operator_norm
from .checkBase import TheoremCheck
from .instances import describe, random_case1_symbol, random_case2_symbol, random_complex, random_degree
from .instances import random_laurent, random_pair, random_product, random_unimodular, regrid, symbol_band
from .verificationReport import agrees, below

MIN_DUAL_RADIUS = 0.2   # lower bound on |a| for products with theta(0) != 0


class DualCheck(TheoremCheck):
    default_degrees = (1, 4)

    def dual_radius(self) -> float:
        return self.tol("DUAL_MAX_ZERO_RADIUS")

    def dual_pair(self, rng, **kwargs) -> Tuple[BlaschkeProduct, BlaschkeProduct]:
        return random_pair(rng, self.degree_range, max_radius=self.dual_radius(), **kwargs)

    def dual_product(self, rng, zero_at_origin: bool = False, min_radius: float = MIN_DUAL_RADIUS) -> BlaschkeProduct:
        degree = random_degree(rng, self.degree_range)
        return random_product(rng, degree, self.dual_radius(), zero_at_origin=zero_at_origin, min_radius=min_radius)

    def window_for(self, theta, alpha, symbols: List[CircleFunction], escalation: int) -> Tuple[LaurentWindow, List[CircleFunction]]:
        """ window wide enough for the symbols' bands, the symbols moved onto its grid """
        band = max((symbol_band(psi) for psi in symbols), default=0)
        window = self.window(theta, alpha, band, escalation)
        return window, [regrid(psi, window.grid_size) for psi in symbols]

    @staticmethod
    def base_grid(theta, alpha) -> int:
        return TheoremCheck.grid_size(theta, alpha)

    def kmutant_inputs(self, case_id: KmutantCase, theta, alpha, rng, grid_size: int) -> dict:
        """ the free symbols of each case, drawn at random """
        if case_id == KmutantCase.CASE_I:
            return {"psi4": random_laurent(rng, -3, 3, grid_size)}
        if case_id == KmutantCase.CASE_II:
            return {"psi1": random_laurent(rng, -3, 3, grid_size)}
        alpha_theta_bar = CircleFunction.from_blaschke(alpha, grid_size) * CircleFunction.from_blaschke(theta, grid_size).conj()
        return {"psi1": alpha_theta_bar * random_laurent(rng, 0, 3, grid_size),
                "psi3": random_laurent(rng, -3, 3, grid_size),
                "psi4": random_laurent(rng, 0, 3, grid_size)}

    def kmutant_operator(self, case_id, theta, alpha, rng, escalation: int, perturb: bool = False):
        grid_size = self.base_grid(theta, alpha)
        symbols = kmutant_symbols(case_id, theta, alpha, grid_size, **self.kmutant_inputs(case_id, theta, alpha, rng, grid_size))
        if perturb:
            # a conj(z) term in psi4 breaks the first condition by at least 0.5
            disturbance = CircleFunction.monomial(-1, grid_size) * 0.5 + random_laurent(rng, -2, 2, grid_size, scale=0.01)
            symbols = symbols._replace(psi4=symbols.psi4 + disturbance)
        window, regridded = self.window_for(theta, alpha, list(symbols), escalation)
        symbols = symbols._make(regridded)
        return block_operator(*symbols, theta, alpha, window), symbols

    def kmutant_residuals(self, prefix: str, D: DualBlockOperator, symbols, expect_intertwiner: bool = True):
        c18 = c18_conditions(*symbols, D.theta, D.alpha)
        residual = kmutant_intertwine_residual(D)
        if expect_intertwiner:
            records = [below(f"{prefix}c18", max(c18.residuals), self.tol("IDENTITY_TOL")),
                       self.positive(f"{prefix}intertwine", residual)]
        else:
            records = [self.negative(f"{prefix}c18", max(c18.residuals)),
                       self.negative(f"{prefix}intertwine", residual)]
        records.append(agrees(f"{prefix}c18-matches-intertwine",
                              c18.all_below(self.tol("IDENTITY_TOL")) == (residual < self.tol("POSITIVE_TOL"))))
        return records


class ConjugationCheck(DualCheck, theorem_id="lemma-5.1", trials=30):
    """ C_alpha A_phi = A_{alpha conj(phi) conj(theta)} C_theta, on K_theta and on K_theta^perp """

    def run_trial(self, index, rng, escalation):
        theta, alpha = self.dual_pair(rng)
        base_phi = random_laurent(rng, -3, 3, self.base_grid(theta, alpha))
        grid_size = self.grid_size(theta, alpha, escalation=escalation)
        bases = model_bases(theta, alpha, grid_size)
        phi = regrid(base_phi, grid_size)
        psi = CircleFunction.from_blaschke(alpha, grid_size) * phi.conj() * CircleFunction.from_blaschke(theta, grid_size).conj()
        left = conjugation_matrix(bases.alpha_basis) @ atto_matrix(phi, theta, alpha, bases)
        right = atto_matrix(psi, theta, alpha, bases) @ conjugation_matrix(bases.theta_basis)
        window, (phi,) = self.window_for(theta, alpha, [base_phi], escalation)
        residuals = [below("model-conjugation", operator_norm(left.entries - right.entries), self.tol("IDENTITY_TOL")),
                     below("dual-conjugation", dual_conjugation_residual(phi, theta, alpha, window), self.tol("IDENTITY_TOL"))]
        return dict(describe(theta=theta, alpha=alpha), window=window.to_json()), residuals, None


class DualCommutationCheck(DualCheck, theorem_id="thm-5.2-idatto", trials=120):
    """ D_phi D_z^theta = D_z^alpha D_phi iff phi is in one of the two symbol classes.
        trial index mod 4: 0 first class, 1 second class, 2 and 3 random symbols (3 with theta(0) = alpha(0) = 0)
    """

    def run_trial(self, index, rng, escalation):
        kind = index % 4
        if kind == 0:
            theta, alpha = self.dual_pair(rng, theta_zero_at_origin=True, alpha_zero_at_origin=True)
            phi = random_case1_symbol(rng, theta, alpha, self.base_grid(theta, alpha))
            expected = IdattoCase.CASE1
        elif kind == 1:
            theta = self.dual_product(rng)
            alpha = theta
            phi = random_case2_symbol(rng, theta, self.base_grid(theta, alpha))
            expected = IdattoCase.CASE2
        else:
            both_at_origin = kind == 3
            theta, alpha = self.dual_pair(rng, theta_zero_at_origin=both_at_origin, alpha_zero_at_origin=both_at_origin)
            phi = random_laurent(rng, -3, 3, self.base_grid(theta, alpha))
            expected = IdattoCase.NONE
        window, (phi,) = self.window_for(theta, alpha, [phi], escalation)
        classification = idatto_classify(phi, theta, alpha)
        residual = interior_commutator_residual(phi, theta, alpha, window)
        residuals = [agrees(f"classified-{expected.value}", classification == expected),
                     agrees("classification-matches-commutator",
                            (classification != IdattoCase.NONE) == (residual < self.tol("POSITIVE_TOL")))]
        if expected == IdattoCase.NONE:
            residuals.append(self.negative("interior-commutator", residual))
            wider = window.doubled()
            residuals.append(self.negative("interior-commutator-doubled-window",
                                           interior_commutator_residual(regrid(phi, wider.grid_size), theta, alpha, wider)))
        else:
            residuals.append(self.positive("interior-commutator", residual))
        instance = dict(describe(theta=theta, alpha=alpha), window=window.to_json())
        return instance, residuals, classification.value


class RankTwoCheck(DualCheck, theorem_id="idatto-rank2", trials=50):
    """ D_phi D_z - D_z D_phi = alpha (x) x - y (x) conj(z) """
    fixed_cases = ("zero-symbol",)

    def _residuals(self, theta, alpha, phi, escalation):
        window, (phi,) = self.window_for(theta, alpha, [phi], escalation)
        residual = rank2_identity_residual(phi, theta, alpha, window)
        return dict(describe(theta=theta, alpha=alpha), window=window.to_json()), [self.positive("rank-two-identity", residual)], None

    def run_trial(self, index, rng, escalation):
        theta, alpha = self.dual_pair(rng)
        return self._residuals(theta, alpha, random_laurent(rng, -3, 3, self.base_grid(theta, alpha)), escalation)

    def fixed_case(self, name, rng, escalation):
        theta, alpha = self.dual_pair(rng)
        return self._residuals(theta, alpha, CircleFunction.constant(0.0, self.base_grid(theta, alpha)), escalation)


class SelfCommutationCheck(DualCheck, theorem_id="cor-5.3-wnios", trials=40):
    """ alpha = theta: D_phi commutes with D_z iff phi k0_theta is in K_{z theta},
        and the intertwiners of D_z are the kmutant operators with psi1 = psi4 (theta(0) != 0) or psi1, psi4 analytic.
        trial index mod 4: 0 commuting symbol, 1 random symbol, 2 kmutant with theta(0) != 0, 3 kmutant with theta(0) = 0
    """

    def run_trial(self, index, rng, escalation):
        kind = index % 4
        theta = self.dual_product(rng, zero_at_origin=kind == 3)
        grid_size = self.base_grid(theta, theta)
        instance = describe(theta=theta)
        if kind in (0, 1):
            phi = random_case2_symbol(rng, theta, grid_size) if kind == 0 else random_laurent(rng, -3, 3, grid_size)
            window, (phi,) = self.window_for(theta, theta, [phi], escalation)
            classification = idatto_classify(phi, theta, theta)
            residual = interior_commutator_residual(phi, theta, theta, window)
            if kind == 0:
                residuals = [agrees("commuting-symbol-classified", classification in (IdattoCase.CASE1, IdattoCase.CASE2)),
                             self.positive("interior-commutator", residual)]
            else:
                residuals = [agrees("random-symbol-classified-none", classification == IdattoCase.NONE),
                             self.negative("interior-commutator", residual)]
            return dict(instance, window=window.to_json()), residuals, classification.value

        case_id = case_for(theta, theta)
        D, symbols = self.kmutant_operator(case_id, theta, theta, rng, escalation)
        residuals = self.kmutant_residuals("", D, symbols)
        if case_id == KmutantCase.CASE_I:
            theta_samples = CircleFunction.from_blaschke(theta, D.window.grid_size)
            expected_psi2 = np.conj(theta.value_at_zero()) * theta_samples * symbols.psi4.plus()
            residuals.extend([below("psi1-equals-psi4", (symbols.psi1 - symbols.psi4).norm(), self.tol("IDENTITY_TOL")),
                              below("psi2-form", (symbols.psi2 - expected_psi2).norm(), self.tol("IDENTITY_TOL"))])
        return dict(instance, window=D.window.to_json()), residuals, case_id.value


class BlockVanishingCheck(DualCheck, theorem_id="lemma-6.1", trials=40):
    """ G' vanishes for phi in alpha conj(H^2), G^ vanishes for phi in conj(theta) H^2, nonzero phi gives nonzero T^ """

    def run_trial(self, index, rng, escalation):
        theta, alpha = self.dual_pair(rng)
        grid_size = self.base_grid(theta, alpha)
        alpha_samples = CircleFunction.from_blaschke(alpha, grid_size)
        theta_samples = CircleFunction.from_blaschke(theta, grid_size)
        coanalytic = alpha_samples * random_laurent(rng, 0, 3, grid_size).conj()
        analytic = theta_samples.conj() * random_laurent(rng, 0, 3, grid_size)
        generic = random_laurent(rng, -3, 3, grid_size)
        window, symbols = self.window_for(theta, alpha, [coanalytic, analytic, generic], escalation)
        coanalytic_blocks, analytic_blocks, generic_blocks = (dtto_blocks(phi, theta, alpha, window) for phi in symbols)
        identity_tol = self.tol("IDENTITY_TOL")
        residuals = [below("gamma-check-vanishes", operator_norm(coanalytic_blocks.gamma_check), identity_tol),
                     below("gamma-hat-vanishes", operator_norm(analytic_blocks.gamma_hat), identity_tol),
                     self.negative("t-hat-nonzero", operator_norm(generic_blocks.t_hat)),
                     self.negative("gamma-check-nonzero", operator_norm(generic_blocks.gamma_check)),
                     self.negative("gamma-hat-nonzero", operator_norm(generic_blocks.gamma_hat))]
        return dict(describe(theta=theta, alpha=alpha), window=window.to_json()), residuals, None


class ShiftInvarianceCheck(DualCheck, theorem_id="shift-invariance", trials=30):
    """ <D z f, z g> = <D f, g> for dual truncated Toeplitz and kmutant operators, not for dense random ones """

    def run_trial(self, index, rng, escalation):
        theta, alpha = self.dual_pair(rng, min_radius=MIN_DUAL_RADIUS)
        window, (phi,) = self.window_for(theta, alpha, [random_laurent(rng, -3, 3, self.base_grid(theta, alpha))], escalation)
        dual = dtto_blocks(phi, theta, alpha, window)
        kmutant, _ = self.kmutant_operator(case_for(theta, alpha), theta, alpha, rng, escalation)
        shapes = [block.shape for block in dual[:4]]
        dense = DualBlockOperator(*(random_complex(rng, shape) for shape in shapes), dual.sections)
        residuals = [below("dual-toeplitz", shift_invariance_residual(dual), self.tol("IDENTITY_TOL")),
                     below("kmutant", shift_invariance_residual(kmutant), self.tol("IDENTITY_TOL")),
                     self.negative("dense-random", shift_invariance_residual(dense))]
        return dict(describe(theta=theta, alpha=alpha), window=window.to_json()), residuals, None


class KmutantCheck(DualCheck, theorem_id="thm-6.3-kmutant", trials=120):
    """ D D_z^theta = D_z^alpha D iff the symbols satisfy the four scalar conditions.
        trial index mod 3 picks case i, ii or iii, (index // 3) mod 2 perturbs psi4 out of the solution set
    """
    fixed_cases = ("reference-alpha0-nonzero", "reference-alpha0-zero", "reference-theta0-zero", "reference-both-zero")

    def case_pair(self, case_id: KmutantCase, rng, alpha_at_origin: Optional[bool] = None):
        if case_id == KmutantCase.CASE_I:
            if alpha_at_origin is None:
                alpha_at_origin = bool(rng.integers(2))
            return self.dual_pair(rng, alpha_zero_at_origin=alpha_at_origin, min_radius=MIN_DUAL_RADIUS)
        if case_id == KmutantCase.CASE_II:
            return self.dual_pair(rng, theta_zero_at_origin=True, min_radius=MIN_DUAL_RADIUS)
        return self.dual_pair(rng, theta_zero_at_origin=True, alpha_zero_at_origin=True, min_radius=MIN_DUAL_RADIUS)

    def run_trial(self, index, rng, escalation):
        case_id = list(KmutantCase)[index % 3]
        perturbed = (index // 3) % 2 == 1
        theta, alpha = self.case_pair(case_id, rng)
        D, symbols = self.kmutant_operator(case_id, theta, alpha, rng, escalation, perturb=perturbed)
        residuals = self.kmutant_residuals("", D, symbols, expect_intertwiner=not perturbed)
        instance = dict(describe(theta=theta, alpha=alpha), window=D.window.to_json(), perturbed=perturbed)
        return instance, residuals, case_id.value

    def fixed_case(self, name, rng, escalation):
        if name == "reference-alpha0-nonzero":
            theta, alpha = self.case_pair(KmutantCase.CASE_I, rng, alpha_at_origin=False)
        elif name == "reference-alpha0-zero":
            theta, alpha = self.case_pair(KmutantCase.CASE_I, rng, alpha_at_origin=True)
        elif name == "reference-theta0-zero":
            theta, alpha = self.case_pair(KmutantCase.CASE_II, rng)
        else:
            theta, alpha = self.case_pair(KmutantCase.CASE_III, rng)
        band = symbol_band(CircleFunction.from_blaschke(theta, self.base_grid(theta, alpha)))
        window = self.window(theta, alpha, band, escalation)
        residuals = list()
        names = list()
        for reference_name, D, symbols in reference_intertwiners(theta, alpha, window):
            residuals.extend(self.kmutant_residuals(f"{reference_name}-", D, symbols))
            names.append(reference_name)
        instance = dict(describe(theta=theta, alpha=alpha), window=window.to_json(), operators=names)
        return instance, residuals, case_for(theta, alpha).value


class RemarkCheck(DualCheck, theorem_id="remark-6.5-nonsymbol", trials=20, degrees=(1, 3)):
    """ alpha = lambda theta, theta(0) != 0: [T^_theta, G'_{conj(theta(0)) theta^2}; 0, T'_theta] intertwines
        the dual shifts but is not a dual truncated Toeplitz operator
    """

    def run_trial(self, index, rng, escalation):
        theta = random_product(rng, random_degree(rng, self.degree_range), 0.5, min_radius=0.3)
        alpha = BlaschkeProduct(theta.zeros, random_unimodular(rng))
        grid_size = self.base_grid(theta, alpha)
        symbols = kmutant_symbols(KmutantCase.CASE_I, theta, alpha, grid_size, psi4=CircleFunction.from_blaschke(theta, grid_size))
        window, regridded = self.window_for(theta, alpha, list(symbols), escalation)
        symbols = symbols._make(regridded)
        D = block_operator(*symbols, theta, alpha, window)
        mismatch = remark_mismatch(theta, alpha, window)
        theta_0 = abs(theta.value_at_zero())
        residuals = self.kmutant_residuals("", D, symbols)
        residuals.append(self.negative("single-symbol-mismatch", mismatch))
        instance = dict(describe(theta=theta, alpha=alpha), window=window.to_json(),
                        mismatch_lower_bound=theta_0 * np.sqrt(1.0 - theta_0 ** 2))
        return instance, residuals, "not-a-dual-toeplitz-operator"
