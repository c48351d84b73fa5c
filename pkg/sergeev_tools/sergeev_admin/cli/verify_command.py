from cloup import Choice, command, option, pass_context

from sergeev_tools.common import logging
from sergeev_tools.common.cli.formatting import print_response
from sergeev_tools.common.result import FAIL, OK, Result
from sergeev_tools.sergeev_admin.cli.options import algebra_options, make_config, resolve
from sergeev_tools.sergeev_admin.internal.suites import SuiteContext
from sergeev_tools.sergeev_admin.internal.verify import (
    ALL,
    SUITE_CHOICES,
    report_table,
    run_suites,
)


@command("verify")
@algebra_options
@option(
    "--suite",
    "suites",
    type=Choice(SUITE_CHOICES),
    multiple=True,
    default=[ALL],
    help="Identity suite to run. Can be specified multiple times.",
)
@option(
    "--parallel/--no-parallel",
    default=None,
    help="Run suites in separate processes.",
)
@pass_context
def verify_command(ctx, d, l, f, seed, guard, output, suites, parallel):
    """
    Run identity suites and report every check with its instance count.
    """
    config = make_config(ctx, d, l, f)
    context = SuiteContext(
        config=config,
        seed=resolve(ctx, seed, "verify", "seed"),
        random_samples=resolve(ctx, None, "verify", "random_samples"),
        kernel_samples=resolve(ctx, None, "verify", "kernel_samples"),
        guard=resolve(ctx, guard, "algebra", "dimension_guard"),
        skip_guarded=ALL in suites,
    )
    report = run_suites(context, suites, parallel=resolve(ctx, parallel, "verify", "parallel"))
    print_response(ctx, report, table_formatter=report_table, output=output)

    failed = [name for name, suite in report["suites"].items() if not suite["pass"]]
    if failed:
        logging.warning("Failed suites: {}", ", ".join(failed))
        return Result(FAIL, f"Failed suites: {', '.join(failed)}", report)
    return Result(OK, "OK", report)
