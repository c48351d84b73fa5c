"""
Logging module.

Library code logs through the module-level functions below. Records stay silent until
`configure` is called by the command-line front end. The console logger writes to stderr:
stdout is reserved for reports.
"""

import inspect
import logging
import sys
from typing import Any, Dict, Optional

from loguru import logger

from sergeev_tools.common import result

DEFAULT_MODULE = "sergeev-admin"
CONSOLE_FORMAT = "{level}: {message}"
STANDARD_SINKS = {
    "stderr": sys.stderr,
    "stdout": sys.stdout,
}

logger_config: Dict[str, Any] = {}

logger.disable("sergeev_tools")


class Filter:
    """
    Passes records bound to one logger name.
    """

    def __init__(self, name: str):
        self._name = name

    def __call__(self, record) -> bool:
        return record["extra"].get("logger_name") == self._name


class InterceptHandler(logging.Handler):
    """
    Redirects records of the standard logging module into loguru.
    """

    def emit(self, record: logging.LogRecord) -> None:
        level: Any
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Skip the frames of the logging module itself.
        frame, depth = inspect.currentframe(), 0
        while frame and (depth == 0 or frame.f_code.co_filename == logging.__file__):
            frame = frame.f_back
            depth += 1

        logger.bind(logger_name=record.name).opt(
            depth=depth, exception=record.exc_info
        ).log(level, record.getMessage())


def configure(
    config_loguru: dict,
    module: str,
    extra: Optional[dict] = None,
    console_level: str = "WARNING",
    console: bool = True,
) -> None:
    """
    Configure logger. File handlers come from the "loguru" config section; the console
    logger is added on top of them unless disabled.
    """
    formatters = config_loguru.get("formatters", {})
    logger_config.update(
        module=module,
        console_level=console_level,
        console_format=formatters.get("console", CONSOLE_FORMAT),
        console_logger_id=None,
    )

    handlers = []
    for name, value in config_loguru.get("handlers", {}).get(module, {}).items():
        handler = {
            "sink": STANDARD_SINKS.get(value["sink"], value["sink"]),
            "format": formatters[value["format"]],
            "filter": Filter(value.get("filter") or name),
            "diagnose": False,
        }
        if "level" in value:
            handler["level"] = value["level"]
        handlers.append(handler)

    logger.configure(handlers=handlers, activation=[("", True)], extra=extra or {})

    if console:
        logger_config["console_logger_id"] = logger.add(
            sink=sys.stderr,
            level=console_level,
            format=logger_config["console_format"],
            filter=Filter(module),
        )

    logging.basicConfig(handlers=[InterceptHandler()], level=0)


def _log(level, msg, *args, **kwargs):
    exc_info = kwargs.pop("exc_info", False)
    logger.bind(logger_name=logger_config.get("module", DEFAULT_MODULE)).opt(
        exception=exc_info
    ).log(level, msg, *args, **kwargs)


def error(msg, *args, **kwargs):
    _log("ERROR", msg, *args, **kwargs)


def exception(msg, *args, exc_info=True, **kwargs):
    """
    Log a message with severity 'ERROR' with exception information.
    """
    _log("ERROR", msg, *args, exc_info=exc_info, **kwargs)


def warning(msg, *args, **kwargs):
    _log("WARNING", msg, *args, **kwargs)


def info(msg, *args, **kwargs):
    _log("INFO", msg, *args, **kwargs)


def debug(msg, *args, **kwargs):
    _log("DEBUG", msg, *args, **kwargs)


def log_status(status: int, msg: str) -> None:
    """
    Log the completion of a command: failed checks as warnings, usage and unexpected
    errors as errors.
    """
    if status == result.OK:
        debug(msg)
    elif status == result.FAIL:
        warning(msg)
    else:
        error(msg)
