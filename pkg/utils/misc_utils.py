#!/usr/bin/env python3


import os
import json
import re
from pathlib import Path, PurePath
from typing import Any, Tuple

import appdirs
import numpy as np


def get_system_log_file_path():
    log_folder = appdirs.user_log_dir("mskit")
    return os.path.join(log_folder, "mskit.log")


def complex_to_pair(value) -> list:
    value = complex(value)
    return [value.real, value.imag]


def pair_to_complex(pair) -> complex:
    if isinstance(pair, (int, float)):
        return complex(pair)
    if len(pair) != 2:
        raise ValueError(f"expected [re, im] pair, got {pair}")
    return complex(float(pair[0]), float(pair[1]))


def extra_json_serializer(obj):
    """ json.dumps default= hook for numpy values, complex numbers and paths """
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_to_pair(obj)
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return np.stack((obj.real, obj.imag), axis=-1).tolist()
        return obj.tolist()
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, PurePath):
        return os.fspath(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def round_significant(value: float, digits: int = 7) -> float:
    """ round to a fixed number of significant digits so reports compare byte for byte """
    value = float(value)
    if not np.isfinite(value) or value == 0.0:
        return value
    return float(f"{value:.{digits-1}e}")


def read_json_or_file(text_or_path: str) -> Any:
    """ text starting with '{' or '[' is parsed as json, anything else is a path to a json file """
    text_or_path = text_or_path.strip()
    try:
        if text_or_path[:1] in ("{", "["):
            return json.loads(text_or_path)
        with open(Path(text_or_path).expanduser(), "r", encoding="utf-8") as rfd:
            return json.load(rfd)
    except (OSError, json.JSONDecodeError) as ex:
        raise ValueError(f"cannot read json from '{text_or_path[:64]}': {ex}") from ex


int_range_re = re.compile(r"^\s*(?P<low>\d+)\s*(\.\.|-|:)\s*(?P<high>\d+)\s*$")


def parse_int_range(range_text: str) -> Tuple[int, int]:
    """ "a..b" -> (a, b) """
    match = int_range_re.match(range_text)
    if not match:
        raise ValueError(f"expected a range of the form a..b, got '{range_text}'")
    low, high = int(match['low']), int(match['high'])
    if low > high:
        raise ValueError(f"range low end {low} is above high end {high}")
    return low, high


def parse_name_value(definition: str) -> Tuple[str, str]:
    """ "name=value" -> (name, value) """
    name, sep, value = definition.partition("=")
    if not sep or not name.strip() or not value.strip():
        raise ValueError(f"expected name=value, got '{definition}'")
    return name.strip(), value.strip()


def parse_int_tuple(text: str) -> Tuple[int, ...]:
    """ "-64,96,16" -> (-64, 96, 16) """
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as ex:
        raise ValueError(f"expected comma separated integers, got '{text}'") from ex
