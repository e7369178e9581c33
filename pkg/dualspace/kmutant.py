#!/usr/bin/env python3

"""
    Block operators D = [T^_psi1, G'_psi2; G^_psi3, T'_psi4] with D D_z^theta = D_z^alpha D.

    (i)   theta(0) != 0, psi4 given:
            psi1 = conj(alpha(0)) / conj(theta(0)) alpha conj(theta) psi4
            psi2 = conj(alpha(0)) alpha P+(psi4)
            psi3 = conj(theta) P-(psi4) / conj(theta(0))
    (ii)  theta(0) = 0 != alpha(0), psi1 given:
            psi2 = psi4 = 0, psi3 = conj(theta) P-(conj(alpha) theta psi1) / conj(alpha(0))
    (iii) theta(0) = alpha(0) = 0: psi1 in alpha conj(theta) H^inf, psi3 any, psi4 in H^inf, psi2 = 0
"""

import enum
import logging
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from blaschke import BlaschkeProduct, same_zeros
from configVar import tolerance
from modelspace import CircleFunction
from pymskit.mskitException import CaseMismatch
from .dualBlocks import DualBlockOperator, block_operator, dtto_blocks
from .laurentWindow import LaurentWindow

log = logging.getLogger(__name__)


class KmutantCase(str, enum.Enum):
    CASE_I = "i"
    CASE_II = "ii"
    CASE_III = "iii"


class KmutantSymbols(NamedTuple):
    psi1: CircleFunction
    psi2: CircleFunction
    psi3: CircleFunction
    psi4: CircleFunction


def case_for(theta: BlaschkeProduct, alpha: BlaschkeProduct) -> KmutantCase:
    value_tol = tolerance("VALUE_AT_ZERO_TOL")
    if abs(theta.value_at_zero()) >= value_tol:
        return KmutantCase.CASE_I
    if abs(alpha.value_at_zero()) >= value_tol:
        return KmutantCase.CASE_II
    return KmutantCase.CASE_III


def kmutant_symbols(case_id, theta: BlaschkeProduct, alpha: BlaschkeProduct, grid_size: int,
                    psi1: Optional[CircleFunction] = None, psi3: Optional[CircleFunction] = None,
                    psi4: Optional[CircleFunction] = None) -> KmutantSymbols:
    case_id = KmutantCase(case_id)
    actual = case_for(theta, alpha)
    if actual != case_id:
        raise CaseMismatch(f"theta(0)={theta.value_at_zero():.3g}, alpha(0)={alpha.value_at_zero():.3g} belong to case {actual.value}, not {case_id.value}")
    theta_samples = CircleFunction.from_blaschke(theta, grid_size)
    alpha_samples = CircleFunction.from_blaschke(alpha, grid_size)
    theta_0_bar = np.conj(theta.value_at_zero())
    alpha_0_bar = np.conj(alpha.value_at_zero())
    zero = CircleFunction.constant(0.0, grid_size)

    if case_id == KmutantCase.CASE_I:
        if psi4 is None:
            raise ValueError("case i needs psi4")
        return KmutantSymbols(alpha_0_bar / theta_0_bar * alpha_samples * theta_samples.conj() * psi4,
                              alpha_0_bar * alpha_samples * psi4.plus(),
                              theta_samples.conj() * psi4.minus() / theta_0_bar,
                              psi4)
    if case_id == KmutantCase.CASE_II:
        if psi1 is None:
            raise ValueError("case ii needs psi1")
        psi3 = theta_samples.conj() * (alpha_samples.conj() * theta_samples * psi1).minus() / alpha_0_bar
        return KmutantSymbols(psi1, zero, psi3, zero)
    return KmutantSymbols(psi1 if psi1 is not None else zero, zero,
                          psi3 if psi3 is not None else zero,
                          psi4 if psi4 is not None else zero)


def kmutant_build(psi_inputs: dict, case_id, theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> DualBlockOperator:
    """ psi_inputs maps "psi1", "psi3", "psi4" to the symbols the case takes as given """
    symbols = kmutant_symbols(case_id, theta, alpha, window.grid_size, **psi_inputs)
    return block_operator(*symbols, theta, alpha, window)


class C18Result(NamedTuple):
    residuals: Tuple[float, float, float, float]
    c: complex

    def all_below(self, tol: float) -> bool:
        return max(self.residuals) < tol

    def to_json(self) -> dict:
        return {"residuals": list(self.residuals), "c": self.c}


def c18_conditions(phi1: CircleFunction, phi2: CircleFunction, phi3: CircleFunction, phi4: CircleFunction,
                   theta: BlaschkeProduct, alpha: BlaschkeProduct) -> C18Result:
    """ the four scalar conditions equivalent to D D_z^theta = D_z^alpha D, c fitted on the constant terms """
    grid_size = phi1.grid_size
    theta_samples = CircleFunction.from_blaschke(theta, grid_size)
    alpha_bar = CircleFunction.from_blaschke(alpha, grid_size).conj()
    theta_0_bar = np.conj(theta.value_at_zero())
    alpha_0_bar = np.conj(alpha.value_at_zero())

    theta_phi3 = (theta_samples * phi3).minus()
    r1 = (phi4.minus() - theta_0_bar * theta_phi3).norm()
    r2 = ((alpha_bar * theta_samples * phi1).minus() - alpha_0_bar * theta_phi3).norm()
    alpha_bar_phi2 = (alpha_bar * phi2).plus()
    u = alpha_bar_phi2 - theta_0_bar * (alpha_bar * theta_samples * phi1).plus()
    w = alpha_bar_phi2 - alpha_0_bar * phi4.plus()
    c = complex((u.coefficient(0) + w.coefficient(0)) / 2)
    return C18Result((r1, r2, (u - c).norm(), (w - c).norm()), c)


def reference_intertwiners(theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> List[Tuple[str, DualBlockOperator, KmutantSymbols]]:
    """ the worked example operators for the case (theta, alpha) falls in """
    grid_size = window.grid_size
    theta_samples = CircleFunction.from_blaschke(theta, grid_size)
    alpha_samples = CircleFunction.from_blaschke(alpha, grid_size)
    z_bar = CircleFunction.monomial(-1, grid_size)
    case_id = case_for(theta, alpha)
    built = list()

    def add(name, **psi_inputs):
        symbols = kmutant_symbols(case_id, theta, alpha, grid_size, **psi_inputs)
        built.append((name, block_operator(*symbols, theta, alpha, window), symbols))

    if case_id == KmutantCase.CASE_I:
        prefix = "d1a" if abs(alpha.value_at_zero()) >= tolerance("VALUE_AT_ZERO_TOL") else "d1b"
        for label, psi4 in (("theta", theta_samples), ("zbar", z_bar), ("zbar-theta", z_bar * theta_samples)):
            add(f"{prefix}-{label}", psi4=psi4)
        if same_zeros(alpha, theta):
            add("remark", psi4=theta_samples)
    elif case_id == KmutantCase.CASE_II:
        theta_bar = theta_samples.conj()
        for label, psi1 in (("alpha", alpha_samples), ("theta-bar", theta_bar), ("zbar-theta-bar", z_bar * theta_bar)):
            add(f"d2-{label}", psi1=psi1)
    else:
        add("de4-psi1", psi1=alpha_samples)
        add("de4-psi3", psi3=theta_samples.conj() * theta_samples.conj())
        add("de4-psi4", psi4=theta_samples)
    return built


def remark_mismatch(theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> float:
    """ block distance between the case i operator with psi4 = theta and D_theta, alpha a multiple of theta """
    symbols = kmutant_symbols(KmutantCase.CASE_I, theta, alpha, window.grid_size,
                              psi4=CircleFunction.from_blaschke(theta, window.grid_size))
    D = block_operator(*symbols, theta, alpha, window)
    return max(D.block_mismatch(dtto_blocks(symbols.psi4, theta, alpha, window)).values())
