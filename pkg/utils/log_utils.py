#!/usr/bin/env python3


"""
    logging setup for mskit.
    Console output is message only: progress and verdicts go to stdout, errors to stderr.
    The file log is detailed, either the rotating system log or the files given with --log.
    Numerical warnings raised through the warnings module (e.g. ComplexWarning) are routed to the log.
"""

import os
import sys
import logging
import logging.handlers
from pathlib import Path

from . import misc_utils

top_logger = logging.getLogger()

LOG_DATE_FORMAT = '%Y-%m-%d_%H:%M:%S'
SYSTEM_LOG_MAX_BYTES = 5_000_000
SYSTEM_LOG_BACKUPS = 10


def log_files_from_argv(argv):
    """ paths following --log up to the next option """
    if '--log' not in argv:
        return []
    following = argv[argv.index('--log') + 1:]
    paths = list()
    for item in following:
        if item.startswith('-'):
            break
        paths.append(item)
    return paths


def config_logger(argv=None):
    """ logging options are read straight from argv, before argparse runs """
    argv = sys.argv if argv is None else argv
    if '--no-stdout' not in argv:
        setup_stream_hdlr()
    log_files = log_files_from_argv(argv)
    for log_file_path in log_files:
        setup_file_logging(log_file_path, rotate=False)
    if not log_files and '--no-system-log' not in argv:
        try:
            setup_file_logging(misc_utils.get_system_log_file_path())
        except OSError as ex:
            top_logger.warning(f"system log not available - {ex}")
    logging.captureWarnings(True)


# (name, stream, lowest level, highest level or None)
console_handlers = (("mskit stdout handler", sys.stdout, logging.INFO, logging.WARNING),
                    ("mskit stderr handler", sys.stderr, logging.ERROR, None))


def setup_stream_hdlr():
    for name, stream, level, highest in console_handlers:
        hdlr = logging.StreamHandler(stream=stream)
        hdlr.name = name
        hdlr.setLevel(level)
        if highest is not None:
            hdlr.addFilter(SameLevelFilter(highest))
        hdlr.setFormatter(logging.Formatter('%(message)s'))
        top_logger.addHandler(hdlr)


detailed_format = '%(asctime)s.%(msecs)03d | %(levelname)-7s | %(message)s'
format_per_level = {logging.ERROR: detailed_format + ' | {%(name)s.%(funcName)s,%(lineno)s}',
                    logging.DEBUG: detailed_format + ' | {%(name)s}'}


class PerLevelFormatter(logging.Formatter):
    """ formats each record with the format registered for its level,
        levels without one use the formatter's own fmt
    """
    def __init__(self, format_per_level, **kwargs):
        super().__init__(**kwargs)
        self.formatter_per_level = {level: logging.Formatter(fmt=fmt, datefmt=kwargs.get('datefmt'))
                                    for level, fmt in format_per_level.items()}

    def format(self, record):
        formatter = self.formatter_per_level.get(record.levelno)
        if formatter is None:
            return super().format(record)
        return formatter.format(record)


def setup_file_logging(log_file_path, level=logging.DEBUG, rotate=True):
    log_file_path = Path(log_file_path).resolve()
    os.makedirs(log_file_path.parent, exist_ok=True)
    if rotate:
        hdlr = logging.handlers.RotatingFileHandler(log_file_path, encoding='utf-8',
                                                    maxBytes=SYSTEM_LOG_MAX_BYTES, backupCount=SYSTEM_LOG_BACKUPS)
    else:
        hdlr = logging.FileHandler(log_file_path, encoding='utf-8')
    hdlr.setLevel(level)
    hdlr.set_name(f"mskit {log_file_path.name}")
    hdlr.setFormatter(PerLevelFormatter(format_per_level, fmt=detailed_format, datefmt=LOG_DATE_FORMAT))
    top_logger.addHandler(hdlr)
    return hdlr


def close_log_hdlrs(hdlr_cls=logging.FileHandler):
    """ remove and close handlers of hdlr_cls, RotatingFileHandler included by default """
    for hdlr in [h for h in top_logger.handlers if isinstance(h, hdlr_cls)]:
        top_logger.removeHandler(hdlr)
        try:
            hdlr.close()
        except OSError:
            top_logger.warning(f'failed to close log handler {hdlr}')


class SameLevelFilter(logging.Filter):
    """ pass only records at or below the given level """
    def __init__(self, level, **kwargs):
        super().__init__(**kwargs)
        self.highest_level = level

    def filter(self, record):
        return record.levelno <= self.highest_level
