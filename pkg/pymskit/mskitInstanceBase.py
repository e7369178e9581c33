#!/usr/bin/env python3

import abc
import json
import logging
import sys
import time
from pathlib import Path

import utils
from configVar import config_vars, ensure_defaults, read_defaults_file
from .cmdOptions import read_json_payload
from .mskitException import MskitUsageError

log = logging.getLogger(__name__)


class MskitInstanceBase(object, metaclass=abc.ABCMeta):
    """ Main object of mskit. Holds the command to run, reads the defaults of
        the derived class from defaults/<class name>.yaml and dispatches
        the command to a do_<command> method.
        do_<command> methods return the process exit code, None counts as 0.
    """

    def __init__(self, initial_vars=None) -> None:
        self.the_command = None
        self.fixed_command = None
        self.init_default_vars(initial_vars or dict())
        self.read_defaults_file(type(self).__name__)

    def init_default_vars(self, initial_vars):
        config_vars.update(initial_vars)
        ensure_defaults()

    @staticmethod
    def read_defaults_file(file_name, ignore_if_not_exist=True):
        """ read class specific file from defaults/class_name.yaml """
        read_defaults_file(file_name, ignore_if_not_exist=ignore_if_not_exist)

    def get_version_str(self, short=False):
        if short:
            to_resolve_var = "__MSKIT_VERSION_STR_SHORT__"
        else:
            to_resolve_var = "__MSKIT_VERSION_STR_LONG__"
        return config_vars[to_resolve_var].str()

    def init_from_cmd_line_options(self, cmd_line_options_obj):
        """ turn command line options into variables """
        if "__MAIN_COMMAND__" in config_vars:
            self.the_command = str(config_vars["__MAIN_COMMAND__"])
            self.fixed_command = self.the_command.replace('-', '_')

        if cmd_line_options_obj.define:
            individual_definitions = cmd_line_options_obj.define[0].split(",")
            for definition in individual_definitions:
                name, sep, value = definition.partition("=")
                if not sep:
                    raise MskitUsageError(f"--define expects X=y,A=b, got '{definition}'")
                config_vars[name.strip()] = value

        if getattr(cmd_line_options_obj, "tol", None):
            config_vars["__TOLERANCE_OVERRIDES__"] = cmd_line_options_obj.tol

    def do_command(self) -> int:
        do_command_func = getattr(self, "do_" + self.fixed_command)
        before_time = time.perf_counter()
        exit_code = do_command_func() or 0
        after_time = time.perf_counter()
        if bool(config_vars.get("PRINT_COMMAND_TIME", "no")):
            log.info(f"""{self.the_command} time: {round(after_time - before_time, 4)} sec.""")
        return exit_code

    # access to command line payloads

    def optional_var(self, var_name):
        """ the value of var_name as str, None when not given """
        if var_name in config_vars and config_vars[var_name].raw():
            return config_vars[var_name].str()
        return None

    def json_payload(self, var_name, what):
        return read_json_payload(config_vars[var_name].str(), what)

    def write_json(self, json_obj) -> None:
        """ json to --json file if given, otherwise to stdout """
        indent = int(config_vars.get("JSON_INDENT", "2"))
        text = json.dumps(json_obj, default=utils.extra_json_serializer, sort_keys=True, indent=indent)
        out_file = self.optional_var("__JSON_OUT_FILE__")
        if out_file:
            out_path = Path(out_file).resolve()
            out_path.parent.mkdir(parents=True, exist_ok=True)
            out_path.write_text(text + "\n", encoding='utf-8')
            log.info(f"json written to {out_path}")
        else:
            sys.stdout.write(text + "\n")
            sys.stdout.flush()

    def close(self):
        log.debug(f"{self.the_command} done, {len(config_vars)} config variables")
