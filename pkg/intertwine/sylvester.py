#!/usr/bin/env python3

"""
    Nullspace of X -> L X - X R for square L (m x m) and R (n x n).
    vec is column-major: vec(L X) = (I_n kron L) vec X, vec(X R) = (R.T kron I_m) vec X.
"""

import logging
from typing import List, Optional

import numpy as np

from configVar import tolerance

log = logging.getLogger(__name__)


def _as_array(matrix) -> np.ndarray:
    return np.asarray(getattr(matrix, "entries", matrix), dtype=complex)


def sylvester_operator(left, right) -> np.ndarray:
    left, right = _as_array(left), _as_array(right)
    m, n = left.shape[0], right.shape[0]
    return np.kron(np.eye(n), left) - np.kron(right.T, np.eye(m))


def operator_scale(left, right) -> float:
    """ ||L|| + ||R||, never below 1 """
    return max(1.0, float(np.linalg.norm(left, 2) + np.linalg.norm(right, 2)))


def sylvester_nullspace(left, right, rank_tol: Optional[float] = None) -> List[np.ndarray]:
    """ orthonormal (Frobenius) basis of {X : left X = X right}, as m x n matrices """
    rank_tol = tolerance("RANK_TOL", rank_tol)
    left, right = _as_array(left), _as_array(right)
    m, n = left.shape[0], right.shape[0]
    system = sylvester_operator(left, right)
    if system.size == 0:
        return list()
    _, singular_values, vh = np.linalg.svd(system)
    cutoff = rank_tol * operator_scale(left, right)
    rank = int(np.sum(singular_values > cutoff))
    log.debug(f"sylvester system {system.shape}: rank {rank}, nullity {system.shape[1] - rank}")
    return [row.conj().reshape((m, n), order="F") for row in vh[rank:]]
