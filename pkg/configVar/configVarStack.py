#!/usr/bin/env python3

"""
    ConfigVarStack: a stack of ConfigVar dicts, inner scopes override outer ones.
"""

import re
from contextlib import contextmanager
from typing import Dict, List

from .configVarOne import ConfigVar

# regex to identify $(...) references, optionally indexed: $(NAME[2])
value_ref_re = re.compile(r"""
                            (?P<varref_pattern>
                                [$]\(                             # $(
                                    (?P<var_name>[\w\s]+?)        # name
                                    (\[(?P<array_index>-?\d+)\])? # [index]
                                \)                                # )
                            )
                            """, re.X)

MAX_RESOLVE_DEPTH = 32


def _check_key(key):
    if not isinstance(key, str):
        raise TypeError(f"config variable names are str, got {type(key).__name__} {key!r}")


class ConfigVarStack:
    """ writes go to the innermost scope, reads search from innermost to outermost """
    def __init__(self) -> None:
        self.var_list: List[Dict[str, ConfigVar]] = [dict()]

    def __len__(self) -> int:
        return sum(len(var_dict) for var_dict in self.var_list)

    def keys(self):
        return sorted(set().union(*(var_dict.keys() for var_dict in self.var_list)))

    def __getitem__(self, key: str) -> ConfigVar:
        _check_key(key)
        for var_dict in reversed(self.var_list):
            if key in var_dict:
                return var_dict[key]
        raise KeyError(f"{key}")

    def __setitem__(self, key: str, *values):
        _check_key(key)
        config_var = self.var_list[-1].get(key)
        if config_var is None:
            config_var = ConfigVar(self, key)
            self.var_list[-1][key] = config_var
        else:
            config_var.clear()
        config_var.extend(values)

    def update(self, update_dict):
        for var_name, var_value in update_dict.items():
            self[var_name] = var_value

    def __delitem__(self, key: str):
        for var_dict in reversed(self.var_list):
            if key in var_dict:
                del var_dict[key]
                return
        raise KeyError(f"{key}")

    def __contains__(self, key: str):
        _check_key(key)
        return any(key in var_dict for var_dict in self.var_list)

    def get(self, key: str, default=""):
        """ a ConfigVar holding default is returned for unknown keys, it is NOT added to the stack """
        try:
            retVal = self[key]
        except KeyError:
            retVal = ConfigVar(self, key, default)
        return retVal

    def clear(self):
        self.var_list.clear()
        self.var_list.append(dict())

    def _resolve_one_ref(self, match, depth):
        var_name = match.group('var_name')
        if var_name not in self:
            return match.group('varref_pattern')
        values = [self._resolve(val, depth + 1) for val in self[var_name].values]
        if match.group('array_index') is not None:
            try:
                values = [values[int(match.group('array_index'))]]
            except IndexError:
                return match.group('varref_pattern')
        return "".join(values)

    def _resolve(self, val_to_resolve: str, depth: int) -> str:
        if "$" not in val_to_resolve or depth > MAX_RESOLVE_DEPTH:
            return val_to_resolve
        return value_ref_re.sub(lambda m: self._resolve_one_ref(m, depth), val_to_resolve)

    def resolve_str(self, val_to_resolve: str) -> str:
        return self._resolve(val_to_resolve, 0)

    def resolve_str_to_list(self, val_to_resolve: str) -> List[str]:
        """ a value that is exactly one un-indexed $(NAME) reference resolves to NAME's list of values,
            anything else resolves to a single string
        """
        match = value_ref_re.fullmatch(val_to_resolve)
        if match and match.group('array_index') is None and match.group('var_name') in self:
            return [self.resolve_str(val) for val in self[match.group('var_name')].values]
        return [self.resolve_str(val_to_resolve)]

    def stack_size(self):
        return len(self.var_list)

    def push_scope(self):
        self.var_list.append(dict())

    def pop_scope(self):
        self.var_list.pop()

    @contextmanager
    def push_scope_context(self):
        self.push_scope()
        try:
            yield self
        finally:
            self.pop_scope()

    @contextmanager
    def overrides_context(self, overrides: Dict[str, object]):
        """ a new scope holding overrides, e.g. the tolerances of one check run """
        with self.push_scope_context():
            self.update({name: str(value) for name, value in overrides.items()})
            yield self

    def define_in_base(self, key: str, values) -> None:
        """ set key in the outermost scope, inner scopes stay in place and keep shadowing it """
        _check_key(key)
        config_var = ConfigVar(self, key)
        config_var.extend(values)
        self.var_list[0][key] = config_var


# This is the global variable list serving all parts of mskit
config_vars = ConfigVarStack()
