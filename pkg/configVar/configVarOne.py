#!/usr/bin/env python3

"""
    ConfigVar: one named configuration value held by a ConfigVarStack.
"""

import os
from collections.abc import Sequence
from pathlib import Path
from typing import List, Optional, Union


TRUE_WORDS = frozenset(("yes", "true", "y", "t", "1"))
FALSE_WORDS = frozenset(("no", "false", "n", "f", "0"))


def something_to_bool(something, default=False):
    """ yes/no words, numbers and bools to bool, anything else is default """
    if isinstance(something, (bool, int)):
        return bool(something)
    if isinstance(something, str):
        word = something.strip().lower()
        if word in TRUE_WORDS:
            return True
        if word in FALSE_WORDS:
            return False
    return default


class ConfigVar:
    """ ConfigVar holds zero or more string values. Values are resolved
        by the owning ConfigVarStack when read, so $(OTHER) references
        always see the current definition of OTHER.
        self.owner - the ConfigVarStack that resolves the values
        self.name - the name under which the owner keeps the ConfigVar
    """
    __slots__ = ("owner", "name", "values")

    def __init__(self, owner, name: str, *values) -> None:
        self.owner = owner
        self.name = name
        self.values: List[str] = list()
        self.extend(values)

    def __len__(self) -> int:
        return len(self.values)

    def __repr__(self) -> str:
        return f"""{self.__class__.__name__}("{self.name}", *{self.values})"""

    def __bool__(self):
        """ True only for a single value that reads as a boolean yes """
        retVal = False
        if len(self.values) == 1:
            retVal = something_to_bool(self.owner.resolve_str(self.values[0]), False)
        return retVal

    def join(self, sep: str) -> str:
        return sep.join(self.owner.resolve_str(val) for val in self.values)

    def __str__(self) -> str:
        return self.join(sep='')

    def __int__(self) -> int:
        return int(self.join(sep=''))

    def __float__(self) -> float:
        return float(self.join(sep=''))

    def __iter__(self):
        for val in self.values:
            yield from self.owner.resolve_str_to_list(val)

    def __getitem__(self, index: int) -> str:
        return self.owner.resolve_str(self.values[index])

    def str(self) -> str:
        return str(self)

    def list(self) -> List:
        return list(iter(self))

    def int(self) -> int:
        return int(self)

    def float(self) -> float:
        return float(self)

    def bool(self) -> bool:
        return bool(self)

    def int_list(self) -> List[int]:
        """ every resolved value as int, e.g. a degree range or a grid schedule """
        return [int(val) for val in self]

    def Path(self) -> Optional[Path]:
        retVal = None
        if self.values and self.values[0]:
            retVal = Path(os.path.expandvars(self.str()))
        return retVal

    def append(self, value):
        if value is not None:
            self.values.append(str(value))

    def extend(self, values):
        """ a str is added as a single value, nested sequences are flattened """
        if isinstance(values, (str, int, float, type(None))):
            self.append(values)
        elif isinstance(values, os.PathLike):
            self.append(os.fspath(values))
        elif isinstance(values, Sequence):
            for val in values:
                self.extend(val)
        else:
            raise TypeError(f"configVar('{self.name}') values should be str, number or sequence not {type(values)}")

    def clear(self):
        self.values.clear()

    def raw(self, join_sep: Optional[str] = "") -> Union[str, List[str]]:
        """ the values unresolved """
        if join_sep is None:
            return self.values
        return join_sep.join(self.values)
