from typing import Any, Dict

from click import UsageError
from cloup import Choice, argument, command, option, option_group, pass_context

from sergeev_tools.algebra.center import REPORT_SCHEMA, algebra_for
from sergeev_tools.algebra.cycles import (
    cxcycle,
    jucys_murphy,
    m_element,
    odd_skew_cycle,
    xcycle,
    z_element,
)
from sergeev_tools.algebra.element import AlgebraKind
from sergeev_tools.algebra.serialization import encode_element
from sergeev_tools.algebra.sergeev import p_element, sergeev_algebra
from sergeev_tools.common.cli.formatting import print_response
from sergeev_tools.common.cli.parameters import (
    IndexSetParamType,
    ListParamType,
    MultipartitionParamType,
    PartitionParamType,
)
from sergeev_tools.common.result import Result
from sergeev_tools.sergeev_admin.cli.options import algebra_options, make_config

# Parameters each element kind requires.
KIND_PARAMETERS = {
    "xcycle": ("A", "r", "alpha"),
    "cxcycle": ("A", "r"),
    "oddskew": ("A",),
    "jm": ("i", "k"),
    "z": ("lambda_",),
    "m": ("mu",),
    "p": ("mu",),
}

OPTION_NAMES = {
    "A": "--A",
    "r": "--r",
    "alpha": "--alpha",
    "i": "--i",
    "k": "--k",
    "lambda_": "--lambda",
    "mu": "--mu",
}


@command("element")
@argument("kind", type=Choice(list(KIND_PARAMETERS)))
@algebra_options
@option_group(
    "Element parameters",
    option("--A", "A", type=IndexSetParamType(), help="Ordered index set, e.g. 1,3,2."),
    option("--r", "r", type=int, help="Degree shift 0 ≤ r < l."),
    option("--alpha", "alpha", type=ListParamType(int), help="Even parity vector, e.g. 1,1,0."),
    option("--i", "i", type=int, help="Index of the Jucys-Murphy element."),
    option("--k", "k", type=int, help="Degree of the Jucys-Murphy element."),
    option("--lambda", "lambda_", type=MultipartitionParamType(), help="Multipartition, e.g. 3//1."),
    option("--mu", "mu", type=PartitionParamType(), help="Partition with even parts, e.g. 4,2."),
)
@option(
    "--algebra",
    "kind_of_algebra",
    type=Choice(AlgebraKind.values()),
    help="Algebra to build the element in. Symmetric polynomials p live in S^f_d, "
    "the other families default to gr S^f_d.",
)
@pass_context
def element_command(ctx, kind, d, l, f, seed, guard, output, kind_of_algebra, **params):
    """
    Construct a named element and print it in canonical form.
    """
    # pylint: disable=unused-argument
    config = make_config(ctx, d, l, f)
    missing = [OPTION_NAMES[name] for name in KIND_PARAMETERS[kind] if params[name] is None]
    if missing:
        raise UsageError(f"Element {kind} requires {', '.join(missing)}")

    if kind == "p":
        if kind_of_algebra not in (None, str(AlgebraKind.SERGEEV)):
            raise UsageError("Symmetric polynomials p are built in the sergeev algebra only")
        z = p_element(params["mu"], config, sergeev_algebra(config))
    else:
        algebra = algebra_for(AlgebraKind(kind_of_algebra or AlgebraKind.GRADED), config)
        if kind == "xcycle":
            z = xcycle(algebra, params["A"], params["r"], params["alpha"])
        elif kind == "cxcycle":
            z = cxcycle(algebra, params["A"], params["r"])
        elif kind == "oddskew":
            z = odd_skew_cycle(algebra, params["A"])
        elif kind == "jm":
            z = jucys_murphy(algebra, params["i"], params["k"])
        elif kind == "z":
            z = z_element(algebra, params["lambda_"])
        else:
            z = m_element(algebra, params["mu"])

    report: Dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "instance": config.describe(),
        "kind": kind,
        "params": {
            name.rstrip("_"): _describe(params[name]) for name in KIND_PARAMETERS[kind]
        },
        "element": encode_element(z),
        "display": str(z),
    }
    print_response(ctx, report, output=output)
    return Result(report=report)


def _describe(value: Any) -> Any:
    if isinstance(value, (int, list)):
        return value
    return str(value)
