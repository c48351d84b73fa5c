"""
Exact scalars.
"""

from fractions import Fraction
from typing import Union

from sergeev_tools.algebra.error import ConfigError
from sergeev_tools.common.type.typed_enum import StrEnum

Scalar = Union[int, Fraction]


class ScalarMode(StrEnum):
    """
    Coefficient domain of algebra elements.
    """

    RATIONAL = "rational"
    INTEGER = "integer"


def parse_scalar(value: Union[str, int, Fraction]) -> Fraction:
    """
    Parse scalar from its "p/q" string form (or pass a number through).
    """
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f'Invalid scalar value "{value}"')

    return Fraction(value)


def to_scalar(value: Union[str, int, Fraction], mode: ScalarMode) -> Scalar:
    """
    Convert value to a scalar of the given mode.
    """
    result = parse_scalar(value)
    if mode == ScalarMode.INTEGER:
        if result.denominator != 1:
            raise ConfigError(
                f"Scalar {format_scalar(result)} is not an integer (integer scalar mode)"
            )
        return result.numerator

    if result.denominator == 1:
        return result.numerator

    return result


def format_scalar(value: Scalar) -> str:
    """
    Format scalar as "p/q" string (or "p" for integers).
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"
