"""
Command-line parameters.
"""

import os
import re
import sys

import click

from sergeev_tools.algebra.combinatorics import Multipartition, Partition
from sergeev_tools.algebra.cycles import OrderedIndexSet
from sergeev_tools.algebra.error import AlgebraError
from sergeev_tools.common.utils import parse_int_list, split_items


class ListParamType(click.ParamType):
    """
    Command-line parameter type for lists. It supports reading from file and stdin.
    """

    # pylint: disable=redefined-builtin

    name = "list"

    def __init__(self, type=None, separator=r"[,\s]+"):  # noqa: A002
        self.type = type
        self.separator = separator

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value

        value = _preprocess_value(value)
        result = [v.strip() for v in re.split(self.separator, value) if v]

        if self.type:
            if isinstance(self.type, click.ParamType):
                result = [self.type(v, param=param, ctx=ctx) for v in result]
            else:
                result = [self.type(v) for v in result]

        return result


class IndexSetParamType(click.ParamType):
    """
    Ordered index set given as "1,3,2".
    """

    name = "index-set"

    def convert(self, value, param, ctx):
        if isinstance(value, OrderedIndexSet):
            return value
        try:
            return OrderedIndexSet(tuple(parse_int_list(value)))
        except (ValueError, AlgebraError) as e:
            self.fail(str(e), param, ctx)


class PartitionParamType(click.ParamType):
    """
    Partition given by its parts, "4,2". An empty string is the empty partition.
    """

    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.from_parts(parse_int_list(value))
        except (ValueError, AlgebraError) as e:
            self.fail(str(e), param, ctx)


class MultipartitionParamType(click.ParamType):
    """
    Multipartition with components separated by "/" and parts by ",": "2//1" is
    ((2), ∅, (1)).
    """

    name = "multipartition"

    def convert(self, value, param, ctx):
        if isinstance(value, Multipartition):
            return value
        try:
            return Multipartition.of(
                *(parse_int_list(component) for component in value.split("/"))
            )
        except (ValueError, AlgebraError) as e:
            self.fail(str(e), param, ctx)


class CoefficientListParamType(click.ParamType):
    """
    Coefficients of f as "1,b_{l-1},...,b_0"; each entry is an integer or "p/q".
    """

    name = "coefficients"

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return list(value)
        items = split_items(value)
        if not items:
            self.fail("At least the leading coefficient must be given", param, ctx)
        return items


def _preprocess_value(value):
    """
    Preprocess command-line parameter value. It adds support of reading from file and stdin.
    """
    if value == "-":
        return sys.stdin.read()

    if value.startswith("@"):
        with open(os.path.expanduser(value[1:]), encoding="utf-8") as f:
            return f.read()

    return value
