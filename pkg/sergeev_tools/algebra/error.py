"""
Exceptions raised by the algebra library.
"""


class AlgebraError(Exception):
    """
    Base class for all algebra library errors.
    """


class ConfigError(AlgebraError):
    """
    Invalid algebra configuration (d, l or the cyclotomic polynomial f).
    """


class ParameterError(AlgebraError):
    """
    Invalid parameters for an element constructor or a combinatorial operation.
    """


class AlgebraMismatchError(AlgebraError):
    """
    Elements from different algebras (or different configurations) were combined.
    """

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"Cannot combine elements of {left} and {right}")


class DimensionGuardError(AlgebraError):
    """
    Ambient dimension exceeds the configured guard.
    """

    def __init__(self, dimension, guard):
        self.dimension = dimension
        self.guard = guard
        super().__init__(
            f"Ambient dimension {dimension} exceeds the dimension guard {guard}"
        )


class FiltrationError(AlgebraError):
    """
    Graded image requested below the filtration degree of an element.
    """


class NoSuchElementError(AlgebraError):
    """
    Requested element family is empty for the given parameters.
    """


class SerializationError(AlgebraError):
    """
    Element JSON could not be decoded.
    """
