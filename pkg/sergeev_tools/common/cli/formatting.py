"""
Formatting module.
"""

import json
import sys
from typing import Any, Callable, Dict, List, Optional

import click
from pygments import highlight
from pygments.formatters.terminal256 import Terminal256Formatter
from pygments.lexers.data import JsonLexer, YamlLexer
from pygments.style import Style
from pygments.token import Token
from tabulate import tabulate

from sergeev_tools.common.type.typed_enum import StrEnum
from sergeev_tools.common.yaml import dump_yaml


class OutputFormat(StrEnum):
    JSON = "json"
    YAML = "yaml"
    TABLE = "table"


class FormatStyle(Style):
    styles = {
        Token.Name.Tag: "bold ansibrightblue",
        Token.Punctuation: "bold ansiwhite",
        Token.String: "ansigreen",
    }


def print_response(
    ctx,
    value,
    format_=None,
    default_format=None,
    table_formatter: Optional[Callable[[Any], List[Dict[str, Any]]]] = None,
    output: Optional[str] = None,
):
    """
    Print value in the requested format, or write it to the output file.
    """
    if format_ is None:
        # command-line parameter
        format_ = ctx.obj.get("format")
    if format_ is None:
        # `default_format` function parameter
        format_ = default_format
    if format_ is None:
        # config file parameter
        format_ = ctx.obj.get("config", {}).get("output", {}).get("default_format", "json")

    format_ = OutputFormat(format_)
    if format_ == OutputFormat.TABLE:
        text = format_table(table_formatter(value) if table_formatter else value)
        lexer = None
    elif format_ == OutputFormat.YAML:
        text = dump_yaml(value)
        lexer = YamlLexer()
    else:
        text = format_json(value)
        lexer = JsonLexer()

    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text if text.endswith("\n") else text + "\n")
        return

    if lexer is not None and _color(ctx):
        click.echo(highlight(text, lexer, Terminal256Formatter(style=FormatStyle)), nl=False)
    else:
        click.echo(text.rstrip("\n"))


def format_json(value) -> str:
    """
    Canonical JSON text: sorted keys and fixed indentation, so equal values print identically.
    """
    return json.dumps(value, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def format_table(value) -> str:
    if isinstance(value, dict):
        value = [{"key": key, "value": item} for key, item in value.items()]
    return tabulate(value, headers="keys")


def _color(ctx):
    """
    Return True if output should be colored, or False otherwise.
    """
    color = ctx.obj.get("color")
    if color is not None:
        return color

    return sys.stdout.isatty()
