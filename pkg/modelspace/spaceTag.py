#!/usr/bin/env python3

from typing import NamedTuple


class SpaceTag(NamedTuple):
    """ describes the space an OperatorMatrix acts on:
        kind is "model" (K_B) or "dual" (windowed K_B complement), key names the product
    """
    kind: str
    key: str
    dim: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "key": self.key, "dim": self.dim}
