"""
Exact sparse linear algebra over the rationals.

Rows and vectors are dictionaries from hashable column keys to Fractions. Elimination
is incremental: every inserted row is reduced against the pivot rows already present,
so rank and span membership are available at any time. The reduced row echelon form is
completed by back substitution when a nullspace is requested.
"""

from collections import Counter
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence

from sergeev_tools.algebra.element import Element
from sergeev_tools.algebra.error import AlgebraMismatchError, ParameterError
from sergeev_tools.common.type.typed_enum import StrEnum

Vector = Dict[Hashable, Fraction]


class PivotRule(StrEnum):
    """
    Pivot choice among the nonzero columns of a reduced row.
    """

    MARKOWITZ = "markowitz"
    FIRST = "first"


def _axpy(target: Vector, factor: Fraction, source: Mapping[Hashable, Fraction]) -> None:
    """
    target += factor * source, purging zeros.
    """
    for column, value in source.items():
        updated = target.get(column, 0) + factor * value
        if updated:
            target[column] = updated
        else:
            target.pop(column, None)


class Echelon:
    """
    Row echelon form built one row at a time.
    """

    def __init__(
        self,
        columns: Optional[Sequence[Hashable]] = None,
        pivot_rule: PivotRule = PivotRule.MARKOWITZ,
    ):
        self.pivot_rule = PivotRule(pivot_rule)
        self._order: Dict[Hashable, int] = {}
        for column in columns or ():
            self._position(column)
        self._pivots: Dict[Hashable, Vector] = {}
        self._pivot_index: Dict[Hashable, int] = {}
        self._column_counts: Counter = Counter()

    def _position(self, column: Hashable) -> int:
        position = self._order.get(column)
        if position is None:
            position = len(self._order)
            self._order[column] = position
        return position

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def columns(self) -> List[Hashable]:
        return sorted(self._order, key=self._order.__getitem__)

    def reduce(self, row: Mapping[Hashable, Fraction]) -> Vector:
        """
        Remainder of row after elimination against the current pivots.
        """
        remainder: Vector = {c: Fraction(v) for c, v in row.items() if v}
        while True:
            present = [c for c in remainder if c in self._pivots]
            if not present:
                return remainder
            # Earliest pivot first: its row only holds later pivot columns.
            column = min(present, key=self._pivot_index.__getitem__)
            _axpy(remainder, -remainder[column], self._pivots[column])

    def add(self, row: Mapping[Hashable, Fraction]) -> bool:
        """
        Insert a row. Returns whether the rank increased.
        """
        for column in row:
            self._position(column)
            self._column_counts[column] += 1
        remainder = self.reduce(row)
        if not remainder:
            return False

        if self.pivot_rule == PivotRule.FIRST:
            pivot = min(remainder, key=self._order.__getitem__)
        else:
            pivot = min(
                remainder,
                key=lambda c: (self._column_counts[c], self._order[c]),
            )
        scale = 1 / remainder[pivot]
        self._pivot_index[pivot] = len(self._pivots)
        self._pivots[pivot] = {c: v * scale for c, v in remainder.items()}
        return True

    def extend(self, rows: Iterable[Mapping[Hashable, Fraction]]) -> "Echelon":
        for row in rows:
            self.add(row)
        return self

    def contains(self, row: Mapping[Hashable, Fraction]) -> bool:
        return not self.reduce(row)

    def reduced_rows(self) -> Dict[Hashable, Vector]:
        """
        Reduced row echelon form: every pivot column is zero outside its own row.
        """
        pivots = list(self._pivots)
        rows = {p: dict(self._pivots[p]) for p in pivots}
        # Later rows never contain earlier pivot columns.
        for k in range(len(pivots) - 1, -1, -1):
            row = rows[pivots[k]]
            for later in pivots[k + 1 :]:
                value = row.get(later)
                if value:
                    _axpy(row, -value, rows[later])
        return rows

    def nullspace(self) -> List[Vector]:
        """
        Kernel basis, one vector per free column, in column order.
        """
        rows = self.reduced_rows()
        result = []
        for free in self.columns:
            if free in rows:
                continue
            vector: Vector = {free: Fraction(1)}
            for pivot, row in rows.items():
                value = row.get(free)
                if value:
                    vector[pivot] = -value
            result.append(vector)
        return result


def nullspace_exact(
    rows: Iterable[Mapping[Hashable, Fraction]],
    columns: Sequence[Hashable],
    pivot_rule: PivotRule = PivotRule.MARKOWITZ,
) -> List[Vector]:
    """
    Exact kernel of the matrix with the given sparse rows over the given columns.
    """
    echelon = Echelon(columns, pivot_rule)
    for row in rows:
        unknown = [c for c in row if c not in echelon._order]
        if unknown:
            raise ParameterError(f"Row has entries outside the declared columns: {unknown[:3]}")
        echelon.add(row)
    return echelon.nullspace()


def apply(rows: Iterable[Mapping[Hashable, Fraction]], vector: Mapping[Hashable, Fraction]) -> List[Fraction]:
    """
    Matrix-vector product, one entry per row.
    """
    return [sum((v * vector.get(c, 0) for c, v in row.items()), Fraction(0)) for row in rows]


def rank(rows: Iterable[Mapping[Hashable, Fraction]]) -> int:
    return Echelon().extend(rows).rank


# Element spans.


def _check_same_algebra(elements: Sequence[Element]) -> None:
    for element in elements[1:]:
        first = elements[0]
        if element.kind != first.kind or element.config != first.config:
            raise AlgebraMismatchError(first.algebra, element.algebra)


def element_echelon(elements: Sequence[Element]) -> Echelon:
    _check_same_algebra(list(elements))
    return Echelon().extend(element.terms for element in elements)


def element_rank(elements: Sequence[Element]) -> int:
    return element_echelon(elements).rank


def is_independent(elements: Sequence[Element]) -> bool:
    return element_rank(elements) == len(elements)


def in_span(z: Element, elements: Sequence[Element]) -> bool:
    if z.is_zero():
        return True
    _check_same_algebra([z] + list(elements))
    return element_echelon(elements).contains(z.terms)


def span_equal(first: Sequence[Element], second: Sequence[Element]) -> bool:
    """
    Whether both families span the same subspace.
    """
    _check_same_algebra(list(first) + list(second))
    left = element_echelon(first)
    right = element_echelon(second)
    return all(right.contains(e.terms) for e in first) and all(
        left.contains(e.terms) for e in second
    )


def coordinates(z: Element, elements: Sequence[Element]) -> Optional[List[Fraction]]:
    """
    Coefficients expressing z in terms of linearly independent elements, or None when z
    lies outside their span.
    """
    _check_same_algebra([z] + list(elements))
    if not is_independent(elements):
        raise ParameterError("Elements are not linearly independent")
    # Auxiliary coordinate columns come after all element columns, so every pivot
    # lies on an element column.
    columns: List[Hashable] = [("element", mono) for e in elements for mono in e.terms]
    echelon = Echelon(columns, pivot_rule=PivotRule.FIRST)
    for k, element in enumerate(elements):
        row: Vector = {("element", mono): Fraction(c) for mono, c in element.terms.items()}
        row[("coordinate", k)] = Fraction(1)
        echelon.add(row)
    remainder = echelon.reduce(
        {("element", mono): Fraction(c) for mono, c in z.terms.items()}
    )
    if any(column[0] == "element" for column in remainder):
        return None
    return [-remainder.get(("coordinate", k), Fraction(0)) for k in range(len(elements))]

