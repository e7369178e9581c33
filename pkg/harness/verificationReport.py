#!/usr/bin/env python3

"""
    Results of a theorem check: one TrialRecord per instance, each holding
    the residuals it was judged by, and an aggregate verdict.
"""

import enum
import json
from typing import Any, Dict, List, NamedTuple, Optional

from configVar import config_vars
from utils.misc_utils import extra_json_serializer, round_significant


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


class ResidualRecord(NamedTuple):
    """ value judged against tolerance; a value between tolerance and band is INDETERMINATE """
    name: str
    value: float
    tolerance: float
    expect_below: bool = True
    band: Optional[float] = None

    @property
    def verdict(self) -> Verdict:
        if self.expect_below:
            if self.value < self.tolerance:
                return Verdict.PASS
            if self.band is not None and self.value < self.band:
                return Verdict.INDETERMINATE
        else:
            if self.value > self.tolerance:
                return Verdict.PASS
            if self.band is not None and self.value > self.band:
                return Verdict.INDETERMINATE
        return Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_json(self) -> dict:
        return {"name": self.name, "value": round_significant(self.value), "tolerance": self.tolerance,
                "expect": "below" if self.expect_below else "above", "verdict": self.verdict.value}


def below(name: str, value: float, tol: float, band: Optional[float] = None) -> ResidualRecord:
    return ResidualRecord(name, float(value), float(tol), True, band)


def above(name: str, value: float, tol: float, band: Optional[float] = None) -> ResidualRecord:
    return ResidualRecord(name, float(value), float(tol), False, band)


def agrees(name: str, agreement: bool) -> ResidualRecord:
    """ a yes/no consistency requirement recorded as 0 (agrees) or 1 (disagrees) """
    return ResidualRecord(name, 0.0 if agreement else 1.0, 0.5, True, None)


def combine_verdicts(verdicts) -> Verdict:
    verdicts = list(verdicts)
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if Verdict.INDETERMINATE in verdicts:
        return Verdict.INDETERMINATE
    return Verdict.PASS


class TrialRecord(NamedTuple):
    index: Any                   # trial number, or the name of a fixed case
    instance: Dict[str, Any]
    residuals: List[ResidualRecord]
    classification: Optional[str]
    verdict: Verdict
    escalation: int = 0

    @classmethod
    def from_residuals(cls, index, instance: Dict[str, Any], residuals: List[ResidualRecord],
                       classification: Optional[str] = None, escalation: int = 0) -> "TrialRecord":
        return cls(index, instance, list(residuals), classification,
                   combine_verdicts(r.verdict for r in residuals), escalation)

    @classmethod
    def failed(cls, index, instance: Dict[str, Any], error: Exception, escalation: int = 0) -> "TrialRecord":
        instance = dict(instance, error=f"{error.__class__.__name__}: {error}")
        return cls(index, instance, list(), None, Verdict.FAIL, escalation)

    def to_json(self) -> dict:
        return {"index": self.index, "instance": self.instance, "residuals": [r.to_json() for r in self.residuals],
                "classification": self.classification, "verdict": self.verdict.value, "escalation": self.escalation}


class VerificationReport:
    def __init__(self, theorem_id: str, config, trials: List[TrialRecord], seconds: float = 0.0) -> None:
        self.theorem_id = theorem_id
        self.config = config
        self.trials = trials
        self.seconds = seconds

    @property
    def verdict(self) -> Verdict:
        """ pass needs every trial to pass, an indeterminate trial fails the aggregate """
        if all(trial.verdict == Verdict.PASS for trial in self.trials):
            return Verdict.PASS
        return Verdict.FAIL

    def counts(self) -> Dict[str, int]:
        counts = {verdict.value: 0 for verdict in Verdict}
        for trial in self.trials:
            counts[trial.verdict.value] += 1
        return counts

    def to_json(self, include_timing: bool = True) -> dict:
        report = {"schema": str(config_vars.get("REPORT_SCHEMA", "mskit-report/1")),
                  "theorem_id": self.theorem_id,
                  "config": self.config.to_json(),
                  "verdict": self.verdict.value,
                  "counts": self.counts(),
                  "trials": [trial.to_json() for trial in self.trials]}
        if include_timing:
            report["timing"] = {"seconds": round(self.seconds, 3)}
        return report

    def dumps(self, include_timing: bool = True, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_json(include_timing), default=extra_json_serializer, sort_keys=True, indent=indent)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.theorem_id}: {self.verdict.value} {self.counts()})"
