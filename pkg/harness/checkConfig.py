#!/usr/bin/env python3

from typing import Dict, Optional, Tuple

from configVar import int_var, tolerance_names
from pymskit.mskitException import MskitUsageError


class CheckConfig:
    """ what to run for one theorem check; trials and degree_range default to the check's own """

    def __init__(self, theorem_id: str, seed: int = 1, trials: Optional[int] = None,
                 degree_range: Optional[Tuple[int, int]] = None,
                 tolerance_overrides: Optional[Dict[str, float]] = None,
                 window=None) -> None:
        self.theorem_id = theorem_id
        self.seed = int(seed)
        self.trials = trials
        self.degree_range = tuple(degree_range) if degree_range is not None else None
        self.tolerance_overrides = dict(tolerance_overrides or {})
        self.window = window
        self.validate()

    def validate(self) -> "CheckConfig":
        if self.trials is not None and self.trials < 1:
            raise MskitUsageError(f"trials must be at least 1, got {self.trials}")
        if self.degree_range is not None:
            low, high = self.degree_range
            max_degree = int_var("MAX_SUITE_DEGREE")
            if not 1 <= low <= high <= max_degree:
                raise MskitUsageError(f"degree range {low}..{high} must lie within 1..{max_degree}")
        known = tolerance_names()
        for name in self.tolerance_overrides:
            if name not in known:
                raise MskitUsageError(f"unknown tolerance '{name}', known tolerances: {', '.join(known)}")
        return self

    def to_json(self) -> dict:
        return {"theorem_id": self.theorem_id, "seed": self.seed, "trials": self.trials,
                "degree_range": list(self.degree_range) if self.degree_range else None,
                "tolerance_overrides": dict(sorted(self.tolerance_overrides.items())),
                "window": self.window.to_json() if self.window is not None else None}

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.theorem_id}, seed={self.seed}, trials={self.trials})"
