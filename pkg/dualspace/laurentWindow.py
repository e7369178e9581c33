#!/usr/bin/env python3

"""
    Finite sections of K_theta^perp = theta H^2 (+) H^2_-.

    A vector of K_theta^perp is stored as (hat_0 .. hat_{K-1}, check_1 .. check_L):
    the coefficients of theta z**j and of z**-k.
"""

import logging
from typing import NamedTuple, Optional

import numpy as np

from blaschke import BlaschkeProduct
from configVar import int_var, tolerance
from modelspace import CircleFunction, grid_points, required_grid_size
from pymskit.mskitException import GridMismatch, WindowTooSmall

log = logging.getLogger(__name__)


def decay_length(theta: BlaschkeProduct, grid_size: int, tail_tol: Optional[float] = None) -> int:
    """ one past the last k with |c_k(theta)| above the tail tolerance """
    tail_tol = tolerance("FOURIER_TAIL_TOL", tail_tol)
    coefficients = np.abs(CircleFunction.from_blaschke(theta, grid_size).laurent(0, grid_size // 2 - 1))
    significant = np.flatnonzero(coefficients > tail_tol)
    return int(significant[-1]) + 1 if significant.size else 0


def grid_size_for(lo: int, hi: int, base: int) -> int:
    grid_size = base
    while hi - lo >= grid_size // 2:
        grid_size *= 2
    return grid_size


class LaurentWindow(NamedTuple):
    lo: int
    hi: int
    guard: int
    grid_size: int

    def validate(self) -> "LaurentWindow":
        if not self.lo < 0 < self.hi:
            raise WindowTooSmall(f"window must satisfy lo < 0 < hi, got ({self.lo}, {self.hi})")
        if not 0 < self.guard or not self.guard < min(-self.lo, self.hi) / 2:
            raise WindowTooSmall(f"guard {self.guard} must be positive and below half of min(|lo|, hi) for ({self.lo}, {self.hi})")
        if self.hi - self.lo >= self.grid_size // 2:
            raise WindowTooSmall(f"window ({self.lo}, {self.hi}) does not fit a grid of {self.grid_size}")
        return self

    def doubled(self) -> "LaurentWindow":
        lo, hi = 2 * self.lo, 2 * self.hi
        return LaurentWindow(lo, hi, self.guard, grid_size_for(lo, hi, self.grid_size))

    @classmethod
    def create(cls, lo: int, hi: int, guard: int, grid_size: Optional[int] = None) -> "LaurentWindow":
        grid_size = grid_size_for(lo, hi, int_var("DEFAULT_GRID_SIZE", grid_size))
        return cls(lo, hi, guard, grid_size).validate()

    @classmethod
    def for_products(cls, theta: BlaschkeProduct, alpha: BlaschkeProduct, symbol_band: int = 0) -> "LaurentWindow":
        """ default window, doubled until the guard (symbol band + decay length) fits """
        lo, hi = int_var("WINDOW_LO"), int_var("WINDOW_HI")
        grid_size = grid_size_for(lo, hi, required_grid_size(theta, alpha))
        guard = max(1, symbol_band + max(decay_length(theta, grid_size), decay_length(alpha, grid_size)))
        while not guard < min(-lo, hi) / 2:
            lo, hi = 2 * lo, 2 * hi
            grid_size = grid_size_for(lo, hi, grid_size)
            log.debug(f"window grown to ({lo}, {hi}) for guard {guard}")
        return cls(lo, hi, guard, grid_size).validate()

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "guard": self.guard, "grid_size": self.grid_size}


class WindowSections:
    """ the theta H^2 and H^2_- sections of K_theta^perp inside a window """
    __slots__ = ("theta", "window", "decay", "hat_size", "check_size")

    def __init__(self, theta: BlaschkeProduct, window: LaurentWindow) -> None:
        self.theta = theta
        self.window = window
        self.decay = decay_length(theta, window.grid_size)
        self.hat_size = window.hi - self.decay
        self.check_size = -window.lo
        if self.hat_size <= window.guard:
            raise WindowTooSmall(f"theta decays over {self.decay} coefficients, too long for hi={window.hi} with guard {window.guard}")

    @property
    def dim(self) -> int:
        return self.hat_size + self.check_size

    @property
    def grid_size(self) -> int:
        return self.window.grid_size

    def samples(self) -> np.ndarray:
        """ rows theta z**j then z**-k """
        z = grid_points(self.grid_size)
        theta_samples = self.theta(z)
        hat = theta_samples[np.newaxis, :] * z[np.newaxis, :] ** np.arange(self.hat_size)[:, np.newaxis]
        check = z[np.newaxis, :] ** -np.arange(1, self.check_size + 1)[:, np.newaxis]
        return np.vstack((hat, check))

    def coordinates(self, f: CircleFunction) -> np.ndarray:
        """ coordinates of P_theta^perp f: hat_j = c_j(conj(theta) f), check_k = c_-k(f) """
        if f.grid_size != self.grid_size:
            raise GridMismatch(self.grid_size, f.grid_size)
        theta_bar_f = CircleFunction.from_blaschke(self.theta, self.grid_size).conj() * f
        return np.concatenate((theta_bar_f.laurent(0, self.hat_size - 1), f.coefficient(-np.arange(1, self.check_size + 1))))

    def combine(self, coordinates) -> CircleFunction:
        return CircleFunction(np.asarray(coordinates, dtype=complex) @ self.samples())

    def unit_vector(self, part: str, index: int) -> np.ndarray:
        """ coordinates of theta z**index ("hat") or z**-index ("check") """
        vector = np.zeros(self.dim, dtype=complex)
        vector[index if part == "hat" else self.hat_size + index - 1] = 1.0
        return vector

    def interior_mask(self) -> np.ndarray:
        guard = self.window.guard
        hat = np.arange(self.hat_size) < self.hat_size - guard
        check = np.arange(1, self.check_size + 1) <= self.check_size - guard
        return np.concatenate((hat, check))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.theta.key()}, hat={self.hat_size}, check={self.check_size})"


class SectionPair(NamedTuple):
    theta_sections: WindowSections
    alpha_sections: WindowSections


def window_bases(theta: BlaschkeProduct, alpha: BlaschkeProduct, window: LaurentWindow) -> SectionPair:
    window.validate()
    return SectionPair(WindowSections(theta, window), WindowSections(alpha, window))
