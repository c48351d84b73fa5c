"""
Typed enumerations returning their values on `__str__`.
"""

from enum import Enum
from typing import List


class TypedEnum(Enum):
    """
    Base class for typed enumerations.
    """

    def __str__(self) -> str:
        return str(self.value)

    @classmethod
    def values(cls) -> List[str]:
        """
        String values of all members, in declaration order. Used for CLI choices.
        """
        return [str(member.value) for member in cls]


class StrEnum(str, TypedEnum):
    """
    String-value enumeration.
    """

    pass
