#!/usr/bin/env python3

import sys
import os
import unittest

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars
from pymskit.cmdOptions import CommandLineOptions, read_command_line_options, all_command_details
from pymskit.cmdOptions import read_json_payload, parse_degree_range, parse_window, parse_tolerance_overrides, parse_int
from pymskit.mskitException import MskitUsageError


class TestCommandLineOptions(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def parse(self, *args):
        options = CommandLineOptions()
        command_names = read_command_line_options(options, list(args))
        return options, command_names

    def test_check_options(self):
        options, command_names = self.parse("check", "thm-inter", "--seed", "7", "--trials", "3", "--deg", "1..4",
                                            "--tol", "IDENTITY_TOL=1e-8", "--tol", "RANK_TOL=1e-9")
        self.assertEqual(sorted(all_command_details), command_names)
        self.assertEqual("verify", options.mode)
        self.assertEqual("check", options.__MAIN_COMMAND__)
        self.assertEqual("thm-inter", config_vars["__THEOREM_ID__"].str())
        self.assertEqual("7", config_vars["__SEED__"].str())
        self.assertEqual("3", config_vars["__TRIALS__"].str())
        self.assertEqual("1..4", config_vars["__DEGREE_RANGE__"].str())
        self.assertEqual(["IDENTITY_TOL=1e-8", "RANK_TOL=1e-9"], options.tol)
        self.assertNotIn("__WINDOW__", config_vars)

    def test_check_window_option(self):
        self.parse("check", "lemma-5.1", "--window=-64,96,8")
        self.assertEqual("-64,96,8", config_vars["__WINDOW__"].str())
        with self.assertRaises(SystemExit):
            self.parse("suite", "--window=-64,96,8")

    def test_compute_options(self):
        options, _ = self.parse("dual", "--theta", '{"zeros": []}', "--alpha", "alpha.json",
                                "--phi", '{"lo": 0, "coefficients": [1]}', "--window=-64,96,8", "--json", "out.json")
        self.assertEqual("compute", options.mode)
        self.assertEqual('{"zeros": []}', config_vars["__THETA__"].str())
        self.assertEqual("alpha.json", config_vars["__ALPHA__"].str())
        self.assertEqual("-64,96,8", config_vars["__WINDOW__"].str())
        self.assertEqual("out.json", config_vars["__JSON_OUT_FILE__"].str())
        self.assertNotIn("__GRID_SIZE__", config_vars)

    def test_define(self):
        options, _ = self.parse("suite", "--define", "MAX_PARALLEL_TRIALS=1,JSON_INDENT=0")
        self.assertEqual(["MAX_PARALLEL_TRIALS=1,JSON_INDENT=0"], options.define)

    def test_argparse_errors(self):
        with self.assertRaises(SystemExit):
            self.parse("gcd", "--theta", '{"zeros": []}')      # --alpha is required
        with self.assertRaises(SystemExit):
            self.parse("no-such-command")
        with self.assertRaises(SystemExit):
            self.parse("basis", "--theta", '{"zeros": []}', "--window", "-8,8,2")


class TestPayloadParsers(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def test_json_payload(self):
        self.assertEqual({"zeros": []}, read_json_payload(' {"zeros": []} ', "--theta"))
        with self.assertRaises(MskitUsageError):
            read_json_payload('{"zeros": ', "--theta")
        with self.assertRaises(MskitUsageError):
            read_json_payload("/no/such/file.json", "--theta")

    def test_degree_range(self):
        self.assertEqual((2, 5), parse_degree_range("2..5"))
        with self.assertRaises(MskitUsageError):
            parse_degree_range("5..2")
        with self.assertRaises(MskitUsageError):
            parse_degree_range("two..five")

    def test_window(self):
        self.assertEqual((-64, 96, 16), parse_window("-64,96,16"))
        with self.assertRaises(MskitUsageError):
            parse_window("-64,96")
        with self.assertRaises(MskitUsageError):
            parse_window("-64,x,16")

    def test_tolerance_overrides(self):
        self.assertEqual({"IDENTITY_TOL": 1e-8, "RANK_TOL": 1e-9},
                         parse_tolerance_overrides(["IDENTITY_TOL=1e-8", " RANK_TOL = 1e-9 "]))
        with self.assertRaises(MskitUsageError):
            parse_tolerance_overrides(["IDENTITY_TOL"])
        with self.assertRaises(MskitUsageError):
            parse_tolerance_overrides(["IDENTITY_TOL=small"])

    def test_int(self):
        self.assertEqual(0, parse_int("0", "seed", minimum=0))
        self.assertEqual(12, parse_int("12", "trials"))
        with self.assertRaises(MskitUsageError):
            parse_int("0", "trials")
        with self.assertRaises(MskitUsageError):
            parse_int("1.5", "trials")


if __name__ == '__main__':
    unittest.main()
