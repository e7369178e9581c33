#!/usr/bin/env python3

import sys
import os
import logging
import tempfile
import unittest
from pathlib import Path

sys.path.append(os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, os.pardir)))

from utils import log_utils


class TestLogUtils(unittest.TestCase):
    def setUp(self):
        self.top_logger = logging.getLogger()
        self.handlers_before = list(self.top_logger.handlers)
        self.level_before = self.top_logger.level
        self.top_logger.setLevel(logging.DEBUG)

    def tearDown(self):
        log_utils.close_log_hdlrs()
        for hdlr in list(self.top_logger.handlers):
            if hdlr not in self.handlers_before:
                self.top_logger.removeHandler(hdlr)
        self.top_logger.setLevel(self.level_before)

    def test_same_level_filter(self):
        level_filter = log_utils.SameLevelFilter(logging.WARNING)
        self.assertTrue(level_filter.filter(logging.makeLogRecord({"levelno": logging.INFO})))
        self.assertTrue(level_filter.filter(logging.makeLogRecord({"levelno": logging.WARNING})))
        self.assertFalse(level_filter.filter(logging.makeLogRecord({"levelno": logging.ERROR})))

    def test_per_level_formatter(self):
        formatter = log_utils.PerLevelFormatter({logging.ERROR: "E %(message)s", logging.INFO: "I %(message)s"}, fmt="%(message)s")
        error_record = logging.makeLogRecord({"levelno": logging.ERROR, "msg": "bad"})
        info_record = logging.makeLogRecord({"levelno": logging.INFO, "msg": "good"})
        debug_record = logging.makeLogRecord({"levelno": logging.DEBUG, "msg": "detail"})
        self.assertEqual("E bad", formatter.format(error_record))
        self.assertEqual("I good", formatter.format(info_record))
        self.assertEqual("detail", formatter.format(debug_record))

    def test_file_logging(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            log_path = Path(tmp_dir, "sub", "mskit.log")
            log_utils.setup_file_logging(log_path, rotate=False)
            logging.getLogger("mskit.test").debug("grid doubled to 8192")
            log_utils.close_log_hdlrs()
            text = log_path.read_text(encoding="utf-8")
        self.assertIn("grid doubled to 8192", text)
        self.assertIn("| DEBUG   |", text)

    def test_log_files_from_argv(self):
        self.assertEqual([], log_utils.log_files_from_argv(["mskit", "suite"]))
        self.assertEqual(["a.log", "b.log"], log_utils.log_files_from_argv(["mskit", "suite", "--log", "a.log", "b.log", "--seed", "2"]))
        self.assertEqual([], log_utils.log_files_from_argv(["mskit", "suite", "--log", "--seed", "2"]))

    def test_config_logger_with_log_option(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            log_path = Path(tmp_dir, "run.log")
            log_utils.config_logger(["mskit", "version", "--no-stdout", "--log", os.fspath(log_path)])
            stream_handlers = [hdlr for hdlr in self.top_logger.handlers
                               if hdlr not in self.handlers_before and not isinstance(hdlr, logging.FileHandler)]
            self.assertEqual([], stream_handlers)
            logging.getLogger("mskit.test").info("check verdict")
            log_utils.close_log_hdlrs()
            self.assertIn("check verdict", log_path.read_text(encoding="utf-8"))


if __name__ == '__main__':
    unittest.main(verbosity=3)
