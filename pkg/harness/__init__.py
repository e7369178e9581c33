from .checkConfig import CheckConfig
from .verificationReport import VerificationReport, TrialRecord, ResidualRecord, Verdict, below, above, agrees
from .checkBase import TheoremCheck
from . import modelChecks, intertwineChecks, dualChecks
from .suiteRunner import run_check, run_all, registered_ids, suite_verdict
