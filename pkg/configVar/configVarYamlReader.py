#!/usr/bin/env python3

""" ConfigVarYamlReader: reads `--- !define` yaml documents into a ConfigVarStack
"""

import re
from contextlib import contextmanager
from pathlib import Path
import logging

import yaml

log = logging.getLogger(__name__)

internal_identifier_re = re.compile(r"""
                                    __                  # dunder here
                                    (?P<internal_identifier>\w*)
                                    __                  # dunder there
                                    """, re.VERBOSE)

# __ifdef__(NAME) / __ifndef__(NAME)
conditional_re = re.compile(r"""__if(?P<if_type>n?def)__\s*\((?P<condition>.+)\)""")


class ConfigVarYamlReader:
    def __init__(self, config_vars) -> None:
        self.config_vars = config_vars
        # only when allow_reading_of_internal_vars is true, variables who's name begins and ends with "__"
        # can be read from file
        self._allow_reading_of_internal_vars = False
        self.specific_doc_readers = {"!define": self.read_defines,
                                     "!define_if_not_exist": self.read_defines_if_not_exist}

    @contextmanager
    def allow_reading_of_internal_vars(self, allow=True):
        previous_allow_reading_of_internal_vars = self._allow_reading_of_internal_vars
        self._allow_reading_of_internal_vars = allow
        try:
            yield
        finally:
            self._allow_reading_of_internal_vars = previous_allow_reading_of_internal_vars

    def read_yaml_file(self, file_path, ignore_if_not_exist=False):
        file_path = Path(file_path)
        if not file_path.is_file():
            if ignore_if_not_exist:
                log.debug(f"skipping missing yaml file {file_path}")
                return
            raise FileNotFoundError(f"yaml file not found {file_path}")
        log.debug(f"reading {file_path}")
        with open(file_path, "r", encoding="utf-8") as rfd:
            self.read_yaml_from_stream(rfd)

    def read_yaml_from_stream(self, the_stream):
        for a_node in yaml.compose_all(the_stream):
            if a_node is None:
                continue
            doc_reader = self.specific_doc_readers.get(a_node.tag, self.read_defines)
            doc_reader(a_node)

    def _identifier_allowed(self, identifier):
        return self._allow_reading_of_internal_vars or not internal_identifier_re.match(identifier)

    def read_defines(self, a_node):
        # an empty document comes as a scalar node
        if not isinstance(a_node, yaml.MappingNode):
            return
        for key_node, contents in a_node.value:
            identifier = key_node.value
            if identifier.startswith("__if"):
                self.read_conditional_node(identifier, contents)
            elif self._identifier_allowed(identifier):
                self.config_vars[identifier] = self.read_values_for_config_var(contents, identifier)

    def read_defines_if_not_exist(self, a_node):
        if not isinstance(a_node, yaml.MappingNode):
            return
        for key_node, contents in a_node.value:
            identifier = key_node.value
            if self._identifier_allowed(identifier) and identifier not in self.config_vars:
                self.config_vars[identifier] = self.read_values_for_config_var(contents, identifier)

    def read_values_for_config_var(self, contents, identifier):
        if isinstance(contents, yaml.ScalarNode):
            return [contents.value]
        if isinstance(contents, yaml.SequenceNode):
            values = list()
            for item in contents.value:
                if not isinstance(item, yaml.ScalarNode):
                    raise TypeError(f"values for configVar {identifier} should be scalars not {item.tag}")
                values.append(item.value)
            return values
        raise TypeError(f"configVar {identifier} should be a scalar or a sequence not {contents.tag}")

    def read_conditional_node(self, identifier, contents):
        match = conditional_re.match(identifier)
        if not match:
            log.warning(f"unknown conditional {identifier}")
            return
        is_defined = match['condition'] in self.config_vars
        if (match['if_type'] == "def") == is_defined:
            self.read_defines(contents)
