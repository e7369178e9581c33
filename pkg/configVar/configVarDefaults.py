#!/usr/bin/env python3

"""
    Access to the numeric ledger in defaults/main.yaml.

    Library code asks for tolerances by name, e.g. tolerance("IDENTITY_TOL").
    defaults/main.yaml is read lazily the first time a value is needed and
    again after config_vars.clear().
"""

import threading
from pathlib import Path
from typing import List, Optional

from .configVarStack import ConfigVarStack, config_vars
from .configVarYamlReader import ConfigVarYamlReader

_defaults_lock = threading.RLock()
DEFAULTS_READ_MARKER = "__MSKIT_DEFAULTS_READ__"


def defaults_folder() -> Path:
    if "__MSKIT_DEFAULTS_FOLDER__" in config_vars:
        return config_vars["__MSKIT_DEFAULTS_FOLDER__"].Path()
    return Path(__file__).resolve().parent.parent.joinpath("defaults")


def read_defaults_file(file_name, ignore_if_not_exist=True, into=None):
    """ read defaults/<file_name>.yaml into config_vars or the given stack, internal (dunder) variables allowed """
    reader = ConfigVarYamlReader(config_vars if into is None else into)
    with reader.allow_reading_of_internal_vars():
        reader.read_yaml_file(defaults_folder().joinpath(file_name + ".yaml"), ignore_if_not_exist=ignore_if_not_exist)


def ensure_defaults():
    """ main.yaml is read into a private stack, then each value is set in the base scope of config_vars """
    with _defaults_lock:
        if DEFAULTS_READ_MARKER in config_vars:
            return
        loaded = ConfigVarStack()
        read_defaults_file("main", ignore_if_not_exist=False, into=loaded)
        for name in loaded.keys():
            config_vars.define_in_base(name, loaded[name].raw(join_sep=None))
        config_vars.define_in_base(DEFAULTS_READ_MARKER, "yes")


def tolerance(name: str, override: Optional[float] = None) -> float:
    if override is not None:
        return float(override)
    ensure_defaults()
    if name not in config_vars:
        raise KeyError(f"no such tolerance or numeric default '{name}'")
    return float(config_vars[name])


def int_var(name: str, override: Optional[int] = None) -> int:
    if override is not None:
        return int(override)
    ensure_defaults()
    return int(config_vars[name])


def int_list_var(name: str) -> List[int]:
    ensure_defaults()
    return config_vars[name].int_list()


def bool_var(name: str, default=False) -> bool:
    ensure_defaults()
    if name not in config_vars:
        return default
    return bool(config_vars[name])


def tolerance_names() -> List[str]:
    ensure_defaults()
    return list(config_vars["TOLERANCE_NAMES"])
