from cloup import command, pass_context

from sergeev_tools.common.cli.formatting import print_response


@command("config")
@pass_context
def config_command(ctx):
    """
    Output the effective configuration.
    """
    print_response(ctx, ctx.obj["config"], default_format="yaml")
