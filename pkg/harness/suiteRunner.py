#!/usr/bin/env python3

"""
    run_check runs one registered theorem check, run_all runs every one of them.
    Tolerance overrides of a CheckConfig live in a config scope that is popped
    when the check is done, so they never leak into the next check.
"""

import logging
from typing import Iterable, List, Optional

from configVar import config_vars, ensure_defaults
from pymskit.mskitException import UnknownTheorem
from .checkBase import TheoremCheck
from .checkConfig import CheckConfig
from .verificationReport import VerificationReport, Verdict

log = logging.getLogger(__name__)


def registered_ids() -> List[str]:
    return sorted(TheoremCheck.registry)


def run_check(config: CheckConfig) -> VerificationReport:
    check_class = TheoremCheck.registry.get(config.theorem_id)
    if check_class is None:
        raise UnknownTheorem(config.theorem_id, TheoremCheck.registry.keys())
    ensure_defaults()
    with config_vars.overrides_context(config.tolerance_overrides):
        log.debug(f"running {config!r}")
        return check_class(config).run()


def run_all(seed: int = 1, window=None, theorem_ids: Optional[Iterable[str]] = None) -> List[VerificationReport]:
    """ every registered check, or only theorem_ids, each with its default configuration """
    theorem_ids = registered_ids() if theorem_ids is None else list(theorem_ids)
    reports = [run_check(CheckConfig(theorem_id, seed=seed, window=window)) for theorem_id in theorem_ids]
    failed = [report.theorem_id for report in reports if report.verdict != Verdict.PASS]
    if failed:
        log.info(f"{len(failed)} of {len(reports)} checks failed: {', '.join(failed)}")
    else:
        log.info(f"all {len(reports)} checks passed")
    return reports


def suite_verdict(reports: List[VerificationReport]) -> Verdict:
    return Verdict.PASS if all(report.verdict == Verdict.PASS for report in reports) else Verdict.FAIL
