#!/usr/bin/env python3


import os
import sys

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir)))

import unittest

from configVar.test.test_configVar import TestConfigVar, TestConfigVarYamlReader
from configVar.test.test_configVarDefaults import TestConfigVarDefaults
from utils.test.test_misc_utils import TestMiscUtils
from utils.test.test_log_utils import TestLogUtils
from utils.test.test_parallel_run import TestParallelRun
from blaschke.test.test_blaschkeProduct import TestBlaschkeProduct
from modelspace.test.test_circleFunction import TestCircleFunction
from modelspace.test.test_modelBasis import TestModelBasis
from operators.test.test_operatorMatrix import TestOperatorMatrix
from operators.test.test_atto import TestAtto, TestNehari
from intertwine.test.test_intertwiners import TestSylvester, TestIntertwiners
from intertwine.test.test_commutator import TestCommutator, TestLattice
from dualspace.test.test_laurentWindow import TestLaurentWindow, TestWindowSections
from dualspace.test.test_dualBlocks import TestDualBlocks, TestCommutation, TestKmutant
from harness.test.test_harness import TestResidualRecord, TestCheckConfig, TestTheoremCheck, TestRegisteredChecks
from pymskit.test.test_cmdOptions import TestCommandLineOptions, TestPayloadParsers
from pymskit.test.test_mskit_main import TestMskitMain

if __name__ == '__main__':
    unittest.main(verbosity=3)
