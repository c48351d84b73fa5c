"""
Options shared by the algebra commands.
"""

from typing import Any, Dict, Optional

from cloup import option, option_group

from sergeev_tools.algebra.element import AlgebraConfig
from sergeev_tools.common.cli.parameters import CoefficientListParamType


def algebra_options(command):
    """
    Adds the --d/--l/--f, --seed, --guard and --output options.
    """
    return option_group(
        "Algebra options",
        option("--d", "d", type=int, required=True, help="Number of strands."),
        option("--l", "l", type=int, required=True, help="Level: the degree of f."),
        option(
            "--f",
            "f",
            type=CoefficientListParamType(),
            help="Coefficients 1,b_{l-1},...,b_0 of the cyclotomic polynomial f. "
            "Defaults to f = x^l.",
        ),
        option("--seed", type=int, help="Seed for randomized checks."),
        option("--guard", type=int, help="Largest ambient dimension to compute centers for."),
        option("--output", "output", metavar="PATH", help="Write the report to a file."),
    )(command)


def make_config(ctx, d: int, l: int, f: Optional[list]) -> AlgebraConfig:
    scalar_mode = ctx.obj["config"]["algebra"]["scalar_mode"]
    return AlgebraConfig.create(d, l, f, scalar_mode)


def resolve(ctx, value: Optional[Any], section: str, key: str) -> Any:
    """
    Command-line value, falling back to the config file.
    """
    if value is not None:
        return value
    config: Dict[str, Any] = ctx.obj["config"]
    return config[section][key]
