#!/usr/bin/env python3

"""
    OperatorMatrix: a dense complex matrix between tagged spaces.

    An antilinear operator is stored as the matrix M of v -> M @ conj(v).
    Composition follows that convention: (A o B) has entries A @ B, or
    A @ conj(B) when A is antilinear, and is antilinear iff exactly one factor is.
"""

import numpy as np

from modelspace.spaceTag import SpaceTag
from pymskit.mskitException import TagMismatch


class OperatorMatrix:
    __slots__ = ("entries", "domain", "codomain", "antilinear")

    def __init__(self, entries, domain: SpaceTag, codomain: SpaceTag, antilinear: bool = False) -> None:
        entries = np.array(entries, dtype=complex, ndmin=2)
        if entries.size == 0:
            entries = entries.reshape((codomain.dim, domain.dim))
        if entries.shape != (codomain.dim, domain.dim):
            raise ValueError(f"entries of shape {entries.shape} do not match {codomain.dim}x{domain.dim} tags")
        entries.setflags(write=False)
        self.entries = entries
        self.domain = domain
        self.codomain = codomain
        self.antilinear = antilinear

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def compose(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """ self o other """
        if self.domain != other.codomain:
            raise TagMismatch(self.domain, other.codomain)
        right = other.entries.conj() if self.antilinear else other.entries
        return OperatorMatrix(self.entries @ right, other.domain, self.codomain, self.antilinear != other.antilinear)

    __matmul__ = compose

    def apply(self, coordinates) -> np.ndarray:
        coordinates = np.asarray(coordinates, dtype=complex)
        return self.entries @ (coordinates.conj() if self.antilinear else coordinates)

    def _same_space(self, other: "OperatorMatrix"):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise TagMismatch(self.domain, other.domain)
        if self.antilinear != other.antilinear:
            raise TypeError("cannot add a linear and an antilinear operator")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._same_space(other)
        return OperatorMatrix(self.entries + other.entries, self.domain, self.codomain, self.antilinear)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._same_space(other)
        return OperatorMatrix(self.entries - other.entries, self.domain, self.codomain, self.antilinear)

    def __mul__(self, scalar) -> "OperatorMatrix":
        return OperatorMatrix(self.entries * complex(scalar), self.domain, self.codomain, self.antilinear)

    __rmul__ = __mul__

    def norm(self) -> float:
        return operator_norm(self)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "antilinear": self.antilinear,
                "domain": self.domain.to_json(), "codomain": self.codomain.to_json(),
                "entries": self.entries}

    def __repr__(self) -> str:
        kind = "antilinear " if self.antilinear else ""
        return f"{self.__class__.__name__}({kind}{self.rows}x{self.cols} {self.domain.key} -> {self.codomain.key})"


def adjoint(A: OperatorMatrix) -> OperatorMatrix:
    """ conjugate transpose with tags swapped; an antilinear v -> M conj(v) has adjoint w -> M.T conj(w) """
    entries = A.entries.T if A.antilinear else A.entries.conj().T
    return OperatorMatrix(entries, A.codomain, A.domain, A.antilinear)


def operator_norm(A) -> float:
    """ largest singular value, 0 for an empty matrix """
    entries = A.entries if isinstance(A, OperatorMatrix) else np.asarray(A)
    if entries.size == 0:
        return 0.0
    return float(np.linalg.norm(entries, 2))
