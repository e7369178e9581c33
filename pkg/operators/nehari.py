#!/usr/bin/env python3

"""
    dist(phi, alpha H^inf) = dist(conj(alpha) phi, H^inf) = ||Hankel(conj(alpha) phi)||,
    approximated by truncated Hankel matrices of growing size.
"""

import logging
from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from blaschke import BlaschkeProduct
from configVar import int_list_var, tolerance
from modelspace import CircleFunction
from pymskit.mskitException import NoConvergence

log = logging.getLogger(__name__)


def hankel_matrix(symbol: CircleFunction, size: int) -> np.ndarray:
    """ H[i, j] = c_{-(i+j+1)}(symbol), coefficients beyond the grid's reach count as 0 """
    k = np.arange(1, 2 * size)
    negative = np.where(k < symbol.grid_size // 2, symbol.coefficient(-np.minimum(k, symbol.grid_size // 2 - 1)), 0)
    return scipy.linalg.hankel(negative[:size], negative[size - 1:2 * size - 1])


def dist_to_alpha_Hinf(phi: CircleFunction, alpha: BlaschkeProduct, size_schedule: Optional[Sequence[int]] = None) -> float:
    if size_schedule is None:
        size_schedule = int_list_var("HANKEL_SIZE_SCHEDULE")
    convergence_tol = tolerance("HANKEL_CONVERGENCE_TOL")
    symbol = CircleFunction.from_blaschke(alpha, phi.grid_size).conj() * phi
    values = list()
    for size in size_schedule:
        value = float(np.linalg.norm(hankel_matrix(symbol, size), 2))
        log.debug(f"hankel size {size}: norm {value:.12f}")
        if values and abs(value - values[-1]) < convergence_tol:
            return value
        values.append(value)
    raise NoConvergence(values)
