from cloup import Choice, command, option, pass_context

from sergeev_tools.algebra.center import CenterParity, algebra_for, center_report
from sergeev_tools.algebra.element import AlgebraKind
from sergeev_tools.common.cli.formatting import print_response
from sergeev_tools.common.result import Result
from sergeev_tools.sergeev_admin.cli.options import algebra_options, make_config, resolve


@command("center")
@algebra_options
@option(
    "--algebra",
    "kind",
    type=Choice(AlgebraKind.values()),
    default=str(AlgebraKind.GRADED),
    help="Compute the center of gr S^f_d or of S^f_d.",
)
@option(
    "--parity",
    type=Choice(CenterParity.values()),
    default=str(CenterParity.EVEN),
    help="Restrict the center to one superparity.",
)
@option("--witnesses", is_flag=True, help="Include a basis of the center in the report.")
@pass_context
def center_command(ctx, d, l, f, seed, guard, output, kind, parity, witnesses):
    """
    Compute a basis of the center by exact linear algebra and compare it with the
    central element families.
    """
    config = make_config(ctx, d, l, f)
    report = center_report(
        algebra_for(AlgebraKind(kind), config),
        CenterParity(parity),
        guard=resolve(ctx, guard, "algebra", "dimension_guard"),
        seed=resolve(ctx, seed, "verify", "seed"),
        witnesses=witnesses,
    )
    print_response(ctx, report, output=output)
    return Result(report=report)
