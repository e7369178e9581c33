#!/usr/bin/env python3

import logging

from configVar import config_vars
from dualspace import LaurentWindow
from harness import CheckConfig, Verdict, run_all, run_check, suite_verdict
from .cmdOptions import parse_degree_range, parse_int, parse_tolerance_overrides, parse_window
from .mskitException import MskitUsageError, WindowTooSmall
from .mskitInstanceBase import MskitInstanceBase

log = logging.getLogger(__name__)


class MskitVerify(MskitInstanceBase):
    """ check and suite: run registered theorem checks and report json, exit code 1 on a failing verdict """

    def seed(self) -> int:
        return parse_int(config_vars["__SEED__"].str(), "seed", minimum=0)

    def check_window(self):
        """ a fixed window for every trial, None lets each trial size its own """
        requested = self.optional_var("__WINDOW__")
        if not requested:
            return None
        try:
            return LaurentWindow.create(*parse_window(requested))
        except WindowTooSmall as ex:
            raise MskitUsageError(f"--window: {ex}") from ex

    def check_config(self) -> CheckConfig:
        trials = self.optional_var("__TRIALS__")
        degree_range = self.optional_var("__DEGREE_RANGE__")
        tolerance_overrides = dict()
        if "__TOLERANCE_OVERRIDES__" in config_vars:
            tolerance_overrides = parse_tolerance_overrides(config_vars["__TOLERANCE_OVERRIDES__"].list())
        return CheckConfig(config_vars["__THEOREM_ID__"].str(), seed=self.seed(),
                           trials=parse_int(trials, "trials") if trials else None,
                           degree_range=parse_degree_range(degree_range) if degree_range else None,
                           tolerance_overrides=tolerance_overrides,
                           window=self.check_window())

    def do_check(self):
        report = run_check(self.check_config())
        self.write_json(report.to_json())
        return 0 if report.verdict == Verdict.PASS else 1

    def do_suite(self):
        reports = run_all(seed=self.seed())
        verdict = suite_verdict(reports)
        self.write_json({"schema": config_vars["REPORT_SCHEMA"].str(),
                         "seed": self.seed(),
                         "verdict": verdict.value,
                         "verdicts": {report.theorem_id: report.verdict.value for report in reports},
                         "reports": [report.to_json() for report in reports]})
        return 0 if verdict == Verdict.PASS else 1
