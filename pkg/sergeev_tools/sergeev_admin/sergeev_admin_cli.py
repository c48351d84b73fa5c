#!/usr/bin/env python3
from functools import wraps
from typing import Any, List, Optional

import click
import cloup
from cloup import group, option, pass_context, version_option

from sergeev_tools import __version__
from sergeev_tools.common import logging
from sergeev_tools.common.cli.context_settings import CONTEXT_SETTINGS
from sergeev_tools.common.cli.formatting import OutputFormat
from sergeev_tools.common.config import load_config
from sergeev_tools.common.result import Result, Status
from sergeev_tools.sergeev_admin.cli.center_command import center_command
from sergeev_tools.sergeev_admin.cli.config_command import config_command
from sergeev_tools.sergeev_admin.cli.element_command import element_command
from sergeev_tools.sergeev_admin.cli.verify_command import verify_command
from sergeev_tools.sergeev_admin.exceptions import translate_to_status

MODULE = "sergeev-admin"

# pylint: disable=too-many-ancestors


class SergeevAdmin(cloup.Group):
    """
    Group whose commands exit with the code of their Result: 0 pass, 1 failed checks,
    2 usage or configuration errors.
    """

    def add_command(
        self,
        cmd: click.Command,
        name: Optional[str] = None,
        section: Optional[cloup.Section] = None,
        fallback_to_default_section: bool = True,
    ) -> None:
        if cmd.callback is None:
            super().add_command(
                cmd,
                name=name,
                section=section,
                fallback_to_default_section=fallback_to_default_section,
            )
            return

        cmd_callback = cmd.callback

        @wraps(cmd_callback)
        @pass_context
        def callback_wrapper(ctx, *args, **kwargs):
            logging.configure(
                ctx.obj["config"]["loguru"],
                MODULE,
                {"cmd_name": cmd.name},
                console_level="DEBUG" if ctx.obj["debug"] else "WARNING",
                console=not ctx.obj["quiet"],
            )
            logging.debug("Start executing")

            status = Status()
            try:
                result = ctx.invoke(cmd_callback, *args, **kwargs)
                if isinstance(result, Result):
                    status.append(result.message)
                    status.set_code(result.code)
            except Exception as exc:
                if ctx.obj["debug"]:
                    logging.exception("Got error:")
                status = translate_to_status(exc, status)

            logging.log_status(status.code, f"Completed with {status.code};{status.message}")
            if status.code:
                click.echo(status.message, err=True)
            ctx.exit(status.code)

        cmd.callback = callback_wrapper
        super().add_command(
            cmd,
            name=name,
            section=section,
            fallback_to_default_section=fallback_to_default_section,
        )


@group(
    "sergeev-admin",
    cls=SergeevAdmin,
    help="Exact computations in cyclotomic Sergeev superalgebras and their centers.",
    context_settings=CONTEXT_SETTINGS,
)
@option(
    "-f",
    "--format",
    "format_",
    type=cloup.Choice(OutputFormat.values()),
    help="Output format.",
)
@option("-d", "--debug", is_flag=True, help="Enable debug output.")
@option("-q", "--quiet", is_flag=True, help="Disable console logging.")
@version_option(__version__)
@pass_context
def cli(ctx, format_, debug, quiet):
    """Exact computations in cyclotomic Sergeev superalgebras and their centers."""
    config = load_config()

    logging.configure(
        config["loguru"],
        MODULE,
        console_level="DEBUG" if debug else "WARNING",
        console=not quiet,
    )

    ctx.obj = {
        "config": config,
        "format": format_,
        "debug": debug,
        "quiet": quiet,
    }


commands: List[Any] = [
    verify_command,
    element_command,
    center_command,
    config_command,
]

section = cloup.Section("Commands")
for command in commands:
    cli.add_command(command, section=section)


def main():
    """
    Program entry point.
    """
    cli.main()


if __name__ == "__main__":
    main()
