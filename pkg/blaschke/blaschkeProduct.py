#!/usr/bin/env python3

"""
    Finite Blaschke products: a unimodular constant times Möbius factors (a - z)/(1 - conj(a) z).

    Zeros are matched within ZERO_MATCH_TOL by greedy nearest neighbour and kept in
    canonical order (|a|, arg a) so that bases built from them are reproducible.
"""

import cmath
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from configVar import tolerance
from pymskit.mskitException import NotDivisible, PoleHit
from utils.misc_utils import complex_to_pair, pair_to_complex


def _canonical_key(point: complex):
    angle = cmath.phase(point) if point != 0 else 0.0
    if angle < 0:
        angle += 2 * math.pi
    return round(abs(point), 13), round(angle, 13)


def _nearest_index(point: complex, candidates: Sequence[complex], tol: float) -> Optional[int]:
    if not candidates:
        return None
    distances = np.abs(np.asarray(candidates, dtype=complex) - point)
    best = int(np.argmin(distances))
    return best if distances[best] < tol else None


def _merge_zeros(zeros: Iterable[Tuple[complex, int]], tol: float) -> List[Tuple[complex, int]]:
    merged_points: List[complex] = list()
    merged_mults: List[int] = list()
    for point, mult in zeros:
        match = _nearest_index(point, merged_points, tol)
        if match is None:
            merged_points.append(point)
            merged_mults.append(mult)
        else:
            merged_mults[match] += mult
    return sorted(zip(merged_points, merged_mults), key=lambda pm: _canonical_key(pm[0]))


class BlaschkeProduct:
    """ immutable: zeros is a tuple of (point, multiplicity), constant has modulus 1 """
    __slots__ = ("zeros", "constant")

    def __init__(self, zeros: Iterable = (), constant: complex = 1.0) -> None:
        pairs = list()
        for zero in zeros:
            if isinstance(zero, (tuple, list)) and len(zero) == 2 and isinstance(zero[1], (int, np.integer)):
                point, mult = complex(zero[0]), int(zero[1])
            else:
                point, mult = complex(zero), 1
            if not abs(point) < 1.0:
                raise ValueError(f"zero {point} is not inside the unit disk")
            if mult < 1:
                raise ValueError(f"multiplicity of zero {point} must be positive, got {mult}")
            pairs.append((point, mult))
        constant = complex(constant)
        if constant == 0:
            raise ValueError("the constant of a Blaschke product cannot be 0")
        object.__setattr__(self, "zeros", tuple(_merge_zeros(pairs, tolerance("ZERO_MATCH_TOL"))))
        object.__setattr__(self, "constant", constant / abs(constant))

    def __setattr__(self, key, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def unit(cls, constant: complex = 1.0) -> "BlaschkeProduct":
        return cls((), constant)

    @classmethod
    def monomial(cls, n: int) -> "BlaschkeProduct":
        """ z**n, each zero factor at the origin is -z """
        if n == 0:
            return cls.unit()
        return cls([(0j, n)], (-1) ** n)

    @classmethod
    def mobius(cls, a: complex) -> "BlaschkeProduct":
        """ phi_a(z) = (a - z)/(1 - conj(a) z), phi_a(0) = a """
        return cls([a], 1.0)

    @property
    def degree(self) -> int:
        return sum(mult for _, mult in self.zeros)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    def zero_list(self) -> List[complex]:
        """ zeros repeated by multiplicity, in canonical order """
        return [point for point, mult in self.zeros for _ in range(mult)]

    def max_modulus(self) -> float:
        return max((abs(point) for point, _ in self.zeros), default=0.0)

    def value_at_zero(self) -> complex:
        return evaluate(self, 0j)

    def __call__(self, z):
        return evaluate(self, z)

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return multiply(self, other)

    def __truediv__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return divide(self, other)

    def jsharp(self) -> "BlaschkeProduct":
        """ z -> conj(B(conj z)): conjugated zeros and constant """
        return BlaschkeProduct([(point.conjugate(), mult) for point, mult in self.zeros], self.constant.conjugate())

    def key(self) -> str:
        """ canonical text used to tag spaces built from this product, the constant is irrelevant for K_B """
        parts = [f"{point.real:.12g}{point.imag:+.12g}j^{mult}" for point, mult in self.zeros]
        return "B[" + ",".join(parts) + "]"

    def to_json(self) -> dict:
        return {"constant": complex_to_pair(self.constant),
                "zeros": [{"point": complex_to_pair(point), "mult": mult} for point, mult in self.zeros]}

    @classmethod
    def from_json(cls, json_obj: dict) -> "BlaschkeProduct":
        try:
            zeros = [(pair_to_complex(zero["point"]), int(zero.get("mult", 1))) for zero in json_obj.get("zeros", [])]
            constant = pair_to_complex(json_obj.get("constant", [1.0, 0.0]))
        except (KeyError, TypeError, AttributeError) as ex:
            raise ValueError(f"malformed Blaschke product json: {json_obj}") from ex
        return cls(zeros, constant)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({list(self.zeros)}, {self.constant})"


def evaluate(B: BlaschkeProduct, z):
    """ B(z) for a scalar or an array of points """
    z_arr = np.asarray(z, dtype=complex)
    result = np.full(z_arr.shape, B.constant, dtype=complex)
    pole_tol = tolerance("POLE_TOL")
    for point, mult in B.zeros:
        if point != 0:
            pole = 1.0 / point.conjugate()
            if np.any(np.abs(z_arr - pole) < pole_tol):
                raise PoleHit(z, pole)
        result *= ((point - z_arr) / (1.0 - point.conjugate() * z_arr)) ** mult
    if result.ndim == 0:
        return complex(result)
    return result


def multiply(B1: BlaschkeProduct, B2: BlaschkeProduct) -> BlaschkeProduct:
    return BlaschkeProduct(list(B1.zeros) + list(B2.zeros), B1.constant * B2.constant)


def _match_zeros(dividend: List[complex], divisor: List[complex], tol: float):
    """ pair every divisor zero with a dividend zero,
        returns the dividend leftovers and the first unmatched divisor zero (or None)
    """
    remaining = list(dividend)
    for point in divisor:
        match = _nearest_index(point, remaining, tol)
        if match is None:
            return remaining, point
        remaining.pop(match)
    return remaining, None


def divide(B1: BlaschkeProduct, B2: BlaschkeProduct) -> BlaschkeProduct:
    remaining, unmatched = _match_zeros(B1.zero_list(), B2.zero_list(), tolerance("ZERO_MATCH_TOL"))
    if unmatched is not None:
        raise NotDivisible(unmatched)
    return BlaschkeProduct(remaining, B1.constant / B2.constant)


def gcd(B1: BlaschkeProduct, B2: BlaschkeProduct) -> BlaschkeProduct:
    """ common zeros with min multiplicity, points taken from B1, constant 1 """
    tol = tolerance("ZERO_MATCH_TOL")
    remaining = B2.zero_list()
    common = list()
    for point in B1.zero_list():
        match = _nearest_index(point, remaining, tol)
        if match is not None:
            remaining.pop(match)
            common.append(point)
    return BlaschkeProduct(common, 1.0)


def lcm(B1: BlaschkeProduct, B2: BlaschkeProduct) -> BlaschkeProduct:
    return divide(multiply(B1, B2), gcd(B1, B2))


def same_zeros(B1: BlaschkeProduct, B2: BlaschkeProduct) -> bool:
    """ equality up to a unimodular constant """
    if B1.degree != B2.degree:
        return False
    _, unmatched = _match_zeros(B1.zero_list(), B2.zero_list(), tolerance("ZERO_MATCH_TOL"))
    return unmatched is None


def divides(B1: BlaschkeProduct, B2: BlaschkeProduct) -> bool:
    """ True iff B1 divides B2 """
    return same_zeros(gcd(B1, B2), B1)


def random_blaschke(degree: int, seed: int, max_radius: Optional[float] = None, force_zero_at_origin: bool = False) -> BlaschkeProduct:
    """ zeros uniform in the disk of radius max_radius, random unimodular constant """
    if degree < 1:
        raise ValueError(f"degree must be at least 1, got {degree}")
    max_radius = tolerance("MAX_ZERO_RADIUS", max_radius)
    if not 0.0 < max_radius < 1.0:
        raise ValueError(f"max_radius must be in (0, 1), got {max_radius}")
    rng = np.random.default_rng(seed)
    num_random = degree - 1 if force_zero_at_origin else degree
    radii = max_radius * np.sqrt(rng.uniform(size=num_random))
    angles = rng.uniform(0.0, 2 * np.pi, size=num_random)
    zeros = list(radii * np.exp(1j * angles))
    if force_zero_at_origin:
        zeros.append(0j)
    constant = cmath.exp(2j * math.pi * rng.uniform())
    return BlaschkeProduct(zeros, constant)
