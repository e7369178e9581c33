#!/usr/bin/env python3

import logging

import numpy as np

from blaschke import BlaschkeProduct, gcd, lcm, divides
from configVar import config_vars, tolerance
from dualspace import LaurentWindow, dtto_blocks, dual_conjugation_residual, idatto_classify
from dualspace import idatto_case1_residual, idatto_case2_residual, interior_commutator_residual, rank2_identity_residual
from intertwine import membership_residual, reconstruction_residual, solve_intertwiners, symbol_of_intertwiner
from modelspace import CircleFunction, grid_points, model_bases, required_grid_size, tm_basis
from operators import atto_matrix, operator_norm
from .cmdOptions import parse_int, parse_window
from .mskitException import MskitUsageError
from .mskitInstanceBase import MskitInstanceBase

log = logging.getLogger(__name__)


class MskitCompute(MskitInstanceBase):
    """ single computations on products and symbols given as json on the command line """

    # payloads

    def product(self, var_name, what) -> BlaschkeProduct:
        payload = self.json_payload(var_name, what)
        try:
            return BlaschkeProduct.from_json(payload)
        except (ValueError, TypeError) as ex:
            raise MskitUsageError(f"{what}: {ex}", ex)

    def pair(self):
        return self.product("__THETA__", "--theta"), self.product("__ALPHA__", "--alpha")

    def symbol_payload(self) -> dict:
        payload = self.json_payload("__PHI__", "--phi")
        if not isinstance(payload, dict):
            raise MskitUsageError(f'--phi: expected {{"lo": k0, "coefficients": [...]}}, got {payload}')
        return payload

    @staticmethod
    def symbol(payload: dict, grid_size: int) -> CircleFunction:
        try:
            return CircleFunction.from_json(payload, grid_size)
        except ValueError as ex:
            raise MskitUsageError(f"--phi: {ex}", ex)

    @staticmethod
    def symbol_band(payload: dict) -> int:
        lo = int(payload.get("lo", 0))
        hi = lo + len(payload.get("coefficients", payload.get("coeffs", []))) - 1
        return max(-lo, hi, 0)

    def grid_size(self, *products) -> int:
        requested = self.optional_var("__GRID_SIZE__")
        base = parse_int(requested, "grid") if requested else None
        return required_grid_size(*products, base=base)

    # commands

    def do_version(self):
        config_vars["PRINT_COMMAND_TIME"] = "no"  # do not print time report
        print(self.get_version_str())

    def do_gcd(self):
        theta, alpha = self.pair()
        gamma = gcd(theta, alpha)
        self.write_json({"theta": theta.to_json(), "alpha": alpha.to_json(),
                         "gcd": gamma.to_json(), "gcd_degree": gamma.degree,
                         "lcm": lcm(theta, alpha).to_json(),
                         "theta_divides_alpha": divides(theta, alpha),
                         "alpha_divides_theta": divides(alpha, theta)})

    def do_basis(self):
        theta = self.product("__THETA__", "--theta")
        basis = tm_basis(theta, self.grid_size(theta))
        num_points = parse_int(self.optional_var("__BASIS_POINTS__") or config_vars["BASIS_SAMPLE_POINTS"].str(), "points")
        num_points = min(num_points, basis.grid_size)
        indices = np.linspace(0, basis.grid_size, num_points, endpoint=False).astype(int)
        gram_residual = operator_norm(basis.gram() - np.eye(basis.dim))
        self.write_json({"theta": theta.to_json(), "dim": basis.dim, "grid_size": basis.grid_size,
                         "tag": basis.tag.to_json(), "gram_residual": gram_residual,
                         "points": grid_points(basis.grid_size)[indices],
                         "samples": basis.samples[:, indices]})

    def do_atto(self):
        theta, alpha = self.pair()
        payload = self.symbol_payload()
        bases = model_bases(theta, alpha, self.grid_size(theta, alpha))
        phi = self.symbol(payload, bases.grid_size)
        A = atto_matrix(phi, theta, alpha, bases)
        self.write_json({"theta": theta.to_json(), "alpha": alpha.to_json(), "grid_size": bases.grid_size,
                         "matrix": A.to_json(), "norm": A.norm(), "symbol_sup_norm": phi.sup_norm()})

    def do_intertwine(self):
        theta, alpha = self.pair()
        bases = model_bases(theta, alpha, self.grid_size(theta, alpha))
        solutions = list()
        for A in solve_intertwiners(theta, alpha, bases):
            phi = symbol_of_intertwiner(A, theta, alpha, bases)
            solutions.append({"matrix": A.to_json(),
                              "symbol": phi.to_json(),
                              "membership_residual": membership_residual(phi, theta, alpha),
                              "reconstruction_residual": reconstruction_residual(A, phi, theta, alpha, bases)})
        expected = gcd(alpha, theta).degree
        if len(solutions) != expected:
            log.warning(f"solution space has dimension {len(solutions)}, deg gcd is {expected}")
        self.write_json({"theta": theta.to_json(), "alpha": alpha.to_json(), "grid_size": bases.grid_size,
                         "dimension": len(solutions), "gcd_degree": expected, "solutions": solutions})

    def window(self, theta, alpha, payload) -> LaurentWindow:
        requested = self.optional_var("__WINDOW__")
        if requested:
            lo, hi, guard = parse_window(requested)
            return LaurentWindow.create(lo, hi, guard, grid_size=required_grid_size(theta, alpha))
        return LaurentWindow.for_products(theta, alpha, self.symbol_band(payload))

    def do_dual(self):
        theta, alpha = self.pair()
        payload = self.symbol_payload()
        window = self.window(theta, alpha, payload)
        phi = self.symbol(payload, window.grid_size)
        classification = idatto_classify(phi, theta, alpha)
        commutator = interior_commutator_residual(phi, theta, alpha, window)
        self.write_json({"theta": theta.to_json(), "alpha": alpha.to_json(), "window": window.to_json(),
                         "classification": classification.value,
                         "commutes": commutator < tolerance("POSITIVE_TOL"),
                         "residuals": {"interior_commutator": commutator,
                                       "rank_two_identity": rank2_identity_residual(phi, theta, alpha, window),
                                       "conjugation": dual_conjugation_residual(phi, theta, alpha, window),
                                       "case1": idatto_case1_residual(phi, theta, alpha),
                                       "case2": idatto_case2_residual(phi, theta)},
                         "block_norms": dtto_blocks(phi, theta, alpha, window).block_norms()})
