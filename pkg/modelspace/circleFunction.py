#!/usr/bin/env python3

"""
    CircleFunction: a function on the unit circle sampled at the N-th roots of unity.

    Laurent coefficients are fft(samples)/N; coefficient k lives at index k mod N,
    so only |k| < N/2 is meaningful. P+ keeps indices 0..N/2-1, P- keeps the rest.
"""

from typing import Optional, Tuple, Union

import numpy as np

from pymskit.mskitException import GridMismatch


def grid_points(grid_size: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(grid_size) / grid_size)


def analytic_mask(grid_size: int) -> np.ndarray:
    return np.arange(grid_size) < grid_size // 2


def signed_indices(grid_size: int) -> np.ndarray:
    indices = np.arange(grid_size)
    return np.where(indices < grid_size // 2, indices, indices - grid_size)


class CircleFunction:
    __slots__ = ("samples", "exact_band", "_coefficients")

    def __init__(self, samples, exact_band: bool = False) -> None:
        samples = np.array(samples, dtype=complex)
        if samples.ndim != 1 or samples.size == 0:
            raise ValueError(f"samples must be a non empty 1-d array, got shape {samples.shape}")
        samples.setflags(write=False)
        self.samples = samples
        self.exact_band = exact_band
        self._coefficients = None

    @property
    def grid_size(self) -> int:
        return self.samples.size

    @classmethod
    def from_laurent(cls, coefficients, lo: int, grid_size: int) -> "CircleFunction":
        """ sum of coefficients[i] z**(lo + i) """
        coefficients = np.asarray(coefficients, dtype=complex)
        hi = lo + coefficients.size - 1
        if coefficients.size and max(-lo, hi) >= grid_size // 2:
            raise ValueError(f"laurent band [{lo}, {hi}] does not fit a grid of {grid_size}")
        full = np.zeros(grid_size, dtype=complex)
        np.add.at(full, np.mod(np.arange(lo, hi + 1), grid_size), coefficients)
        return cls(np.fft.ifft(full) * grid_size, exact_band=True)

    @classmethod
    def constant(cls, value: complex, grid_size: int) -> "CircleFunction":
        return cls(np.full(grid_size, value, dtype=complex), exact_band=True)

    @classmethod
    def monomial(cls, k: int, grid_size: int) -> "CircleFunction":
        """ z**k, k may be negative """
        return cls(grid_points(grid_size) ** k, exact_band=True)

    @classmethod
    def from_blaschke(cls, B, grid_size: int) -> "CircleFunction":
        return cls(B(grid_points(grid_size)), exact_band=B.degree == 0 or B.max_modulus() == 0)

    @property
    def coefficients(self) -> np.ndarray:
        if self._coefficients is None:
            coefficients = np.fft.fft(self.samples) / self.grid_size
            coefficients.setflags(write=False)
            self._coefficients = coefficients
        return self._coefficients

    def coefficient(self, k):
        """ c_k for an int or an array of ints, |k| < N/2 """
        return self.coefficients[np.mod(k, self.grid_size)]

    def laurent(self, lo: int, hi: int) -> np.ndarray:
        """ c_lo .. c_hi """
        return self.coefficient(np.arange(lo, hi + 1))

    def effective_band(self, tol: float) -> Tuple[int, int]:
        """ smallest (lo, hi) outside of which every |c_k| <= tol, (0, 0) for the zero function """
        significant = signed_indices(self.grid_size)[np.abs(self.coefficients) > tol]
        if significant.size == 0:
            return 0, 0
        return int(significant.min()), int(significant.max())

    def _check_grid(self, other: "CircleFunction"):
        if other.grid_size != self.grid_size:
            raise GridMismatch(self.grid_size, other.grid_size)

    def _operand(self, other):
        if isinstance(other, CircleFunction):
            self._check_grid(other)
            return other.samples, other.exact_band
        return complex(other), True

    def __add__(self, other) -> "CircleFunction":
        values, exact = self._operand(other)
        return CircleFunction(self.samples + values, self.exact_band and exact)

    __radd__ = __add__

    def __sub__(self, other) -> "CircleFunction":
        values, exact = self._operand(other)
        return CircleFunction(self.samples - values, self.exact_band and exact)

    def __rsub__(self, other) -> "CircleFunction":
        values, exact = self._operand(other)
        return CircleFunction(values - self.samples, self.exact_band and exact)

    def __mul__(self, other) -> "CircleFunction":
        values, exact = self._operand(other)
        return CircleFunction(self.samples * values, self.exact_band and exact)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CircleFunction":
        values, _ = self._operand(other)
        return CircleFunction(self.samples / values)

    def __neg__(self) -> "CircleFunction":
        return CircleFunction(-self.samples, self.exact_band)

    def conj(self) -> "CircleFunction":
        return CircleFunction(self.samples.conj(), self.exact_band)

    def shift(self, k: int) -> "CircleFunction":
        """ multiply by z**k """
        return CircleFunction(self.samples * grid_points(self.grid_size) ** k, self.exact_band)

    def _masked(self, mask) -> "CircleFunction":
        return CircleFunction(np.fft.ifft(np.where(mask, self.coefficients, 0)) * self.grid_size, self.exact_band)

    def plus(self) -> "CircleFunction":
        """ P+ f, coefficients k >= 0 """
        return self._masked(analytic_mask(self.grid_size))

    def minus(self) -> "CircleFunction":
        """ P- f, coefficients k < 0 """
        return self._masked(~analytic_mask(self.grid_size))

    def project_onto(self, inner: Union["CircleFunction", object]) -> "CircleFunction":
        """ P_{alpha H^2} f = alpha P+(conj(alpha) f) """
        if not isinstance(inner, CircleFunction):
            inner = CircleFunction.from_blaschke(inner, self.grid_size)
        return inner * (inner.conj() * self).plus()

    def jsharp(self) -> "CircleFunction":
        """ f#(z) = conj(f(conj z)), on the grid conj(z_k) = z_{-k} """
        return CircleFunction(self.samples[np.mod(-np.arange(self.grid_size), self.grid_size)].conj(), self.exact_band)

    def inner(self, other: "CircleFunction") -> complex:
        self._check_grid(other)
        return complex(np.mean(self.samples * other.samples.conj()))

    def norm(self) -> float:
        return float(np.sqrt(np.mean(np.abs(self.samples) ** 2)))

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.samples)))

    def to_json(self, lo: Optional[int] = None, hi: Optional[int] = None, tol: float = 1e-13) -> dict:
        if lo is None or hi is None:
            lo, hi = self.effective_band(tol)
        return {"lo": lo, "coefficients": self.laurent(lo, hi)}

    @classmethod
    def from_json(cls, json_obj: dict, grid_size: int) -> "CircleFunction":
        """ {"lo": k0, "coefficients": [[re, im], ...]} """
        try:
            lo = int(json_obj.get("lo", 0))
            raw = json_obj.get("coefficients", json_obj.get("coeffs"))
            coefficients = [complex(c[0], c[1]) if isinstance(c, (list, tuple)) else complex(c) for c in raw]
        except (TypeError, AttributeError, IndexError, ValueError) as ex:
            raise ValueError(f"malformed laurent json: {json_obj}") from ex
        return cls.from_laurent(coefficients, lo, grid_size)

    def __repr__(self) -> str:
        lo, hi = self.effective_band(1e-13)
        return f"{self.__class__.__name__}(N={self.grid_size}, band=[{lo}, {hi}])"
