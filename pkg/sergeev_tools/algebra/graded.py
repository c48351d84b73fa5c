"""
The graded superalgebra gr S^f_d.

It is the twisted tensor product of the truncated polynomial ring R[x_1..x_d]/(x_i^l),
the group algebra of the symmetric group and the Clifford algebra, so the product of
two PBW monomials is again a signed monomial or zero.
"""

from typing import Dict, Optional

from sergeev_tools.algebra.element import (
    Algebra,
    AlgebraConfig,
    AlgebraKind,
    Element,
    Monomial,
    Terms,
    perm_clifford_product,
)


class GrElement(Element):
    __slots__ = ()


class GradedAlgebra(Algebra):
    """
    gr S^f_d. Its structure does not depend on the lower terms of f.
    """

    kind = AlgebraKind.GRADED
    element_class = GrElement

    def multiply_monomials(self, left: Monomial, right: Monomial) -> Terms:
        result = monomial_product(left, right, self.l)
        if result is None:
            return {}
        sign, mono = result
        return {mono: sign}


def monomial_product(
    left: Monomial, right: Monomial, l: int
) -> Optional[tuple]:
    """
    (x^e·σ·c_γ)·(x^f·τ·c_δ) as (sign, monomial), or None when some exponent reaches l.
    """
    sign = 1
    for j in range(len(right.exponents)):
        if left.clifford >> j & 1 and right.exponents[j] % 2:
            sign = -sign

    exponents = list(left.exponents)
    for i, f in enumerate(right.exponents):
        if f:
            target = left.perm[i]
            exponents[target] += f
            if exponents[target] >= l:
                return None

    moved = Monomial(tuple(exponents), left.perm, left.clifford)
    clifford_sign, mono = perm_clifford_product(moved, right.perm, right.clifford)
    return sign * clifford_sign, mono


_algebras: Dict[AlgebraConfig, GradedAlgebra] = {}


def graded_algebra(config: AlgebraConfig) -> GradedAlgebra:
    """
    Shared algebra instance per configuration, so that the product cache is reused.
    """
    algebra = _algebras.get(config)
    if algebra is None:
        algebra = GradedAlgebra(config)
        _algebras[config] = algebra
    return algebra


def gr_multiply(u: GrElement, v: GrElement) -> GrElement:
    return u * v


def conjugate(z: GrElement, one_line) -> GrElement:
    return z.algebra.conjugate(z, one_line)
