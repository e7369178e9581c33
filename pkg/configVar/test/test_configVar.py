#!/usr/bin/env python3

import sys
import os
import io
import unittest

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from configVar import config_vars
from configVar import ConfigVarYamlReader


class TestConfigVar(unittest.TestCase):
    def setUp(self):
        config_vars.clear()

    def tearDown(self):
        config_vars.clear()

    def test_list_issues(self):
        grid_sizes = ["4096", "8192"]
        config_vars["ALL_SIZES"] = "$(SIZES_ONE)", "$(SIZE_TWO)"
        config_vars["SIZES_ONE"] = grid_sizes
        config_vars["SIZE_TWO"] = "16384"

        # a value that is exactly one $(...) reference expands to the referenced list
        self.assertListEqual(grid_sizes + ["16384"], list(config_vars["ALL_SIZES"]))

    def test_format(self):
        config_vars["DEGREE"] = "6"
        config_vars["WINDOW"] = ["-128", "192", "16"]
        text = f"""{config_vars["WINDOW"]}{config_vars["DEGREE"].int()}{config_vars["WINDOW"].list()}"""
        self.assertEqual("-12819216" "6" "['-128', '192', '16']", text)

    def test_defaults(self):
        self.assertEqual([], config_vars.get("NOT_THERE", []).list())
        self.assertEqual(["a", "b"], config_vars.get("NOT_THERE", ["a", "b"]).list())
        self.assertEqual("", config_vars.get("NOT_THERE", "").str())
        self.assertNotIn("NOT_THERE", config_vars)

    def test_bool(self):
        self.assertFalse(config_vars.get("NOT_THERE"))
        for yes in ("yes", "True", "1", "y"):
            config_vars["FLAG"] = yes
            self.assertTrue(config_vars["FLAG"])
        for no in ("no", "False", "0", "whatever"):
            config_vars["FLAG"] = no
            self.assertFalse(config_vars["FLAG"])
        config_vars["FLAG"] = "yes", "yes"
        self.assertFalse(config_vars["FLAG"], "only a single value reads as a boolean")

    def test_numbers(self):
        config_vars["TOL"] = "1e-9"
        config_vars["N"] = 4096
        self.assertEqual(1e-9, config_vars["TOL"].float())
        self.assertEqual(4096, int(config_vars["N"]))

    def test_var_in_var_simple(self):
        config_vars["A"] = "$(B)"
        config_vars["B"] = "$(C)"
        config_vars["C"] = "ali baba"
        self.assertEqual("ali baba", config_vars["A"].str())
        self.assertEqual("ali baba", config_vars.resolve_str("$(A)"))

    def test_late_binding(self):
        config_vars["FOLDER"] = "$(ROOT)/defaults"
        config_vars["ROOT"] = "/one"
        self.assertEqual("/one/defaults", config_vars["FOLDER"].str())
        config_vars["ROOT"] = "/two"
        self.assertEqual("/two/defaults", config_vars["FOLDER"].str())

    def test_unknown_reference_stays(self):
        self.assertEqual("x$(NO_SUCH_VAR)y", config_vars.resolve_str("x$(NO_SUCH_VAR)y"))

    def test_array(self):
        config_vars["VERSION"] = "1", "0", "3"
        self.assertEqual("103", config_vars["VERSION"].str())
        self.assertEqual("1", config_vars.resolve_str("$(VERSION[0])"))
        self.assertEqual("3", config_vars.resolve_str("$(VERSION[2])"))
        self.assertEqual("3.0.1", config_vars.resolve_str("$(VERSION[2]).$(VERSION[1]).$(VERSION[0])"))

    def test_scopes(self):
        config_vars["IDENTITY_TOL"] = "1e-9"
        with config_vars.push_scope_context():
            config_vars["IDENTITY_TOL"] = "1e-6"
            self.assertEqual("1e-6", config_vars["IDENTITY_TOL"].str())
            self.assertEqual(2, config_vars.stack_size())
        self.assertEqual("1e-9", config_vars["IDENTITY_TOL"].str())
        self.assertEqual(1, config_vars.stack_size())

    def test_overrides_context(self):
        config_vars["QUADRATURE_TOL"] = "1e-10"
        with config_vars.overrides_context({"QUADRATURE_TOL": 1e-06, "GRAM_TOL": 0.5}):
            self.assertEqual(1e-06, config_vars["QUADRATURE_TOL"].float())
            self.assertEqual(0.5, config_vars["GRAM_TOL"].float())
        self.assertEqual("1e-10", config_vars["QUADRATURE_TOL"].str())
        self.assertNotIn("GRAM_TOL", config_vars)
        self.assertEqual(1, config_vars.stack_size())

    def test_int_list(self):
        config_vars["FIRST_SIZE"] = "64"
        config_vars["SCHEDULE"] = "$(FIRST_SIZE)", "128", "256"
        self.assertEqual([64, 128, 256], config_vars["SCHEDULE"].int_list())
        config_vars["EMPTY"] = []
        self.assertEqual([], config_vars["EMPTY"].int_list())

    def test_bool_words_with_spaces(self):
        config_vars["FLAG"] = " Yes "
        self.assertTrue(config_vars["FLAG"])
        config_vars["FLAG"] = "maybe"
        self.assertFalse(config_vars["FLAG"])

    def test_define_in_base(self):
        config_vars["GRID"] = "4096"
        with config_vars.push_scope_context():
            config_vars["GRID"] = "8192"
            config_vars.define_in_base("GRID", "1024")
            config_vars.define_in_base("KEPT", ["a", "$(GRID)"])
            config_vars["DROPPED"] = "yes"
            self.assertEqual(2, config_vars.stack_size())
            self.assertEqual("8192", config_vars["GRID"].str())
            self.assertEqual(["a", "8192"], config_vars["KEPT"].list())
        self.assertEqual("1024", config_vars["GRID"].str())
        self.assertEqual(["a", "1024"], config_vars["KEPT"].list())
        self.assertNotIn("DROPPED", config_vars)

    def test_delete(self):
        config_vars["GONE"] = "soon"
        del config_vars["GONE"]
        self.assertNotIn("GONE", config_vars)


class TestConfigVarYamlReader(unittest.TestCase):
    yaml_text = """--- !define

A: a
FIRST_NAME: Hila
LAST_NAME:
    - Lulu
    - lin
FULL_NAME: $(FIRST_NAME) $(LAST_NAME)
__INTERNAL__: hidden

__ifdef__(A):
    A_WAS_DEFINED: yes
__ifndef__(A):
    A_WAS_NOT_DEFINED: yes

--- !define_if_not_exist
A: b
B: b
"""

    def setUp(self):
        config_vars.clear()

    def tearDown(self):
        config_vars.clear()

    def test_read_stream(self):
        reader = ConfigVarYamlReader(config_vars)
        reader.read_yaml_from_stream(io.StringIO(self.yaml_text))
        self.assertEqual("Hila Lululin", config_vars["FULL_NAME"].str())
        self.assertEqual(["Lulu", "lin"], config_vars["LAST_NAME"].list())
        self.assertNotIn("__INTERNAL__", config_vars)
        self.assertTrue(config_vars["A_WAS_DEFINED"])
        self.assertNotIn("A_WAS_NOT_DEFINED", config_vars)
        self.assertEqual("a", config_vars["A"].str())
        self.assertEqual("b", config_vars["B"].str())

    def test_internal_vars_allowed(self):
        reader = ConfigVarYamlReader(config_vars)
        with reader.allow_reading_of_internal_vars():
            reader.read_yaml_from_stream(io.StringIO(self.yaml_text))
        self.assertEqual("hidden", config_vars["__INTERNAL__"].str())

    def test_missing_file(self):
        reader = ConfigVarYamlReader(config_vars)
        reader.read_yaml_file("/no/such/file.yaml", ignore_if_not_exist=True)
        with self.assertRaises(FileNotFoundError):
            reader.read_yaml_file("/no/such/file.yaml")


if __name__ == '__main__':
    unittest.main(verbosity=3)
