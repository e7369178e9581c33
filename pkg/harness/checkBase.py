#!/usr/bin/env python3

"""
    TheoremCheck is the base class of every registered check.

    A derived class names itself with the class keywords, e.g.
        class IntertwinerDimension(TheoremCheck, theorem_id="thm-inter", trials=100, degrees=(1, 8)):
    and implements run_trial(index, rng, escalation), returning
    (instance description, residual records, classification).

    Deterministic checks of special cases are listed in fixed_cases and implemented in fixed_case.
    Every trial gets its own generator seeded from (seed, crc32(theorem_id), index),
    so results do not depend on which thread runs which trial.
    A trial that comes out INDETERMINATE is run once more with escalation=1,
    checks use escalation to double their grid or window.
"""

import abc
import logging
import time
import zlib
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from blaschke import BlaschkeProduct
from configVar import tolerance
from dualspace import LaurentWindow
from modelspace import required_grid_size
from utils.parallel_run import run_in_parallel
from .checkConfig import CheckConfig
from .verificationReport import ResidualRecord, TrialRecord, VerificationReport, Verdict, above, below

log = logging.getLogger(__name__)

TrialOutcome = Tuple[Dict[str, Any], List[ResidualRecord], Optional[str]]


class TheoremCheck(abc.ABC):
    registry: Dict[str, type] = dict()
    theorem_id: str = ""
    default_trials: int = 20
    default_degrees: Tuple[int, int] = (1, 6)
    fixed_cases: Tuple[str, ...] = ()

    @classmethod
    def __init_subclass__(cls, theorem_id=None, trials=None, degrees=None, **kwargs):
        super().__init_subclass__(**kwargs)
        if trials is not None:
            cls.default_trials = trials
        if degrees is not None:
            cls.default_degrees = tuple(degrees)
        if theorem_id is not None:
            if theorem_id in TheoremCheck.registry:
                raise ValueError(f"theorem id '{theorem_id}' is registered twice")
            cls.theorem_id = theorem_id
            TheoremCheck.registry[theorem_id] = cls

    def __init__(self, config: CheckConfig) -> None:
        self.config = config
        self.trials = config.trials if config.trials is not None else self.default_trials
        self.degree_range = config.degree_range if config.degree_range is not None else self.default_degrees

    def trial_rng(self, index) -> np.random.Generator:
        index_key = index if isinstance(index, int) else zlib.crc32(str(index).encode("utf-8"))
        return np.random.default_rng([self.config.seed, zlib.crc32(self.theorem_id.encode("utf-8")), index_key])

    @abc.abstractmethod
    def run_trial(self, index: int, rng: np.random.Generator, escalation: int) -> TrialOutcome:
        pass

    def fixed_case(self, name: str, rng: np.random.Generator, escalation: int) -> TrialOutcome:
        raise NotImplementedError(f"{self.theorem_id} has no fixed case {name}")

    # helpers shared by the checks

    @staticmethod
    def tol(name: str) -> float:
        return tolerance(name)

    def positive(self, name: str, value: float, tol_name: str = "POSITIVE_TOL") -> ResidualRecord:
        """ must be below tol_name, between it and NEGATIVE_TOL is indeterminate """
        return below(name, value, self.tol(tol_name), band=self.tol("NEGATIVE_TOL"))

    def negative(self, name: str, value: float) -> ResidualRecord:
        """ must be above NEGATIVE_TOL, between it and POSITIVE_TOL is indeterminate """
        return above(name, value, self.tol("NEGATIVE_TOL"), band=self.tol("POSITIVE_TOL"))

    @staticmethod
    def grid_size(*products: BlaschkeProduct, escalation: int = 0) -> int:
        return required_grid_size(*products) * 2 ** escalation

    def window(self, theta: BlaschkeProduct, alpha: BlaschkeProduct, band: int = 0, escalation: int = 0) -> LaurentWindow:
        window = self.config.window if self.config.window is not None else LaurentWindow.for_products(theta, alpha, band)
        for _ in range(escalation):
            window = window.doubled()
        return window

    # running

    def _attempt(self, index, escalation: int) -> TrialRecord:
        rng = self.trial_rng(index)
        instance: Dict[str, Any] = dict()
        try:
            if isinstance(index, int):
                instance, residuals, classification = self.run_trial(index, rng, escalation)
            else:
                instance, residuals, classification = self.fixed_case(index, rng, escalation)
        except Exception as ex:
            log.debug(f"{self.theorem_id} trial {index} raised {ex!r}")
            return TrialRecord.failed(index, instance, ex, escalation)
        return TrialRecord.from_residuals(index, instance, residuals, classification, escalation)

    def run_one(self, index) -> TrialRecord:
        record = self._attempt(index, 0)
        if record.verdict == Verdict.INDETERMINATE:
            log.debug(f"{self.theorem_id} trial {index} indeterminate, escalating")
            record = self._attempt(index, 1)
        return record

    def run(self) -> VerificationReport:
        start_time = time.perf_counter()
        items = list(range(self.trials)) + list(self.fixed_cases)
        records = run_in_parallel(self.run_one, items)
        report = VerificationReport(self.theorem_id, self.config, records, time.perf_counter() - start_time)
        log.info(f"{self.theorem_id}: {report.verdict.value} {report.counts()} in {report.seconds:.2f}s")
        return report
