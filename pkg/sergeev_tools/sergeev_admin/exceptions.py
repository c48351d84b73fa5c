import click

from sergeev_tools.algebra.error import AlgebraError
from sergeev_tools.common import result
from sergeev_tools.common.result import Status


def algebra_error(exc: AlgebraError, status: Status) -> Status:
    status.append(str(exc))
    status.set_code(result.USAGE)
    return status


def click_error(exc: click.ClickException, status: Status) -> Status:
    status.append(exc.format_message())
    status.set_code(result.USAGE)
    return status


def unknown_exception(exc: Exception, status: Status) -> Status:
    status.append(
        "Unknown error: {type}".format(
            type=repr(exc),
        )
    )
    status.set_code(result.FAIL)
    return status


EXC_MAP = {
    click.ClickException: click_error,
    AlgebraError: algebra_error,
}


def translate_to_status(exc: Exception, status: Status) -> Status:
    handler = unknown_exception
    for cls in type(exc).__mro__:
        if cls in EXC_MAP:
            handler = EXC_MAP[cls]  # type: ignore
            break
    return handler(exc, status)

