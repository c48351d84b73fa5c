"""
The cyclotomic Sergeev superalgebra S^f_d.

Elements are kept in PBW normal form x^e·σ·c_γ with 0 ≤ e_i < l. A product of two
monomials is computed by right-multiplying the left factor by the generator word of the
right one: the polynomial generators first, then the permutation and the Clifford part,
which never change the x-part and are applied exactly. Each polynomial generator is
commuted left through the permutation with the rules

    ŝ_i x̂_i     = x̂_{i+1} ŝ_i − 1 − ĉ_i ĉ_{i+1}
    ŝ_i x̂_{i+1} = x̂_i ŝ_i + 1 − ĉ_i ĉ_{i+1}

and any power x̂_m^l is replaced by the normal form R_m of x̂_m^l.

Caches are plain dictionaries: an algebra instance must be confined to one thread.
"""

import math
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from sergeev_tools.algebra import permutation as perms
from sergeev_tools.algebra.combinatorics import Partition, require_pev
from sergeev_tools.algebra.element import (
    Algebra,
    AlgebraConfig,
    AlgebraKind,
    Element,
    Monomial,
    Terms,
    add_term,
    perm_clifford_product,
)
from sergeev_tools.algebra.error import AlgebraError, FiltrationError, ParameterError
from sergeev_tools.algebra.graded import GrElement, graded_algebra


class SergeevElement(Element):
    __slots__ = ()

    def filtration_degree(self) -> Union[int, float]:
        return filtration_degree(self)

    def graded_image(self, k: int) -> GrElement:
        return graded_image(self, k)


class SergeevAlgebra(Algebra):
    """
    S^f_d with memoized straightening.
    """

    kind = AlgebraKind.SERGEEV
    element_class = SergeevElement

    def __init__(self, config: AlgebraConfig):
        super().__init__(config)
        self._identity = perms.identity(self.d)
        # Normal form of σ·x̂_j before truncation, keyed by (σ, j).
        self._perm_x_cache: Dict[Tuple[perms.Permutation, int], Terms] = {}
        self._reduce_cache: Dict[Tuple[int, ...], Terms] = {}
        self._right_x_cache: Dict[Tuple[Monomial, int], Terms] = {}
        self._reductions: List[Terms] = []
        self._building = False

    # Reduction table.

    def reduction(self, m: int) -> Terms:
        """
        Normal form of x̂_{m+1}^l (0-based m).
        """
        if m < len(self._reductions):
            return self._reductions[m]
        if self._building:
            raise AlgebraError(
                f"Reduction of x{m + 1}^{self.l} requested while the reduction table "
                "is being built"
            )
        self._building = True
        try:
            while len(self._reductions) <= m:
                self._reductions.append(self._next_reduction())
        finally:
            self._building = False
        return self._reductions[m]

    def _next_reduction(self) -> Terms:
        i = len(self._reductions)
        if i == 0:
            terms: Terms = {}
            for k, b in self.config.lower_terms().items():
                exponents = [0] * self.d
                exponents[0] = k
                add_term(terms, Monomial(tuple(exponents), self._identity, 0), -b)
            return terms

        previous = self.element(self._reductions[i - 1])
        s = self.s(i)
        result = s * previous * s
        cc = self.clifford_product([i, i + 1])
        for j in range(self.l):
            polynomial = self.polynomial(
                [j if k == i - 1 else self.l - 1 - j if k == i else 0 for k in range(self.d)]
            )
            sign = 1 if j % 2 else -1
            result = result + polynomial * s * (self.one() + cc.scale(sign))
        return dict(result.terms)

    def reduction_table(self) -> List[SergeevElement]:
        return [self.element(self.reduction(m)) for m in range(self.d)]

    def _reduce_x(self, exponents: Tuple[int, ...]) -> Terms:
        """
        Normal form of the polynomial x̂^e for arbitrary non-negative exponents.
        """
        cached = self._reduce_cache.get(exponents)
        if cached is not None:
            return cached

        m = next((i for i, e in enumerate(exponents) if e >= self.l), None)
        if m is None:
            result = {Monomial(exponents, self._identity, 0): 1}
        else:
            rest = list(exponents)
            rest[m] -= self.l
            result = {}
            for mono, coefficient in self.reduction(m).items():
                assert mono.degree < self.l
                shifted = tuple(a + b for a, b in zip(rest, mono.exponents))
                for reduced, c in self._reduce_x(shifted).items():
                    sign, image = perm_clifford_product(reduced, mono.perm, mono.clifford)
                    add_term(result, image, sign * c * coefficient)

        self._reduce_cache[exponents] = result
        return result

    # Straightening.

    def _perm_x(self, perm: perms.Permutation, j: int) -> Terms:
        """
        σ·x̂_j = x̂_{σ(j)}·σ + (x-free terms). Exponents are not truncated.
        """
        key = (perm, j)
        cached = self._perm_x_cache.get(key)
        if cached is not None:
            return cached

        word = perms.reduced_word(perm)
        if not word:
            exponents = [0] * self.d
            exponents[j] = 1
            result = {Monomial(tuple(exponents), perm, 0): 1}
        else:
            w = word[-1]
            s_w = perms.transposition(self.d, w)
            shorter = perms.compose(perm, s_w)
            assert perms.length(shorter) < perms.length(perm)

            moved_j = w + 1 if j == w else w if j == w + 1 else j
            result = {}
            for mono, coefficient in self._perm_x(shorter, moved_j).items():
                sign, image = perm_clifford_product(mono, s_w, 0)
                add_term(result, image, sign * coefficient)

            if j in (w, w + 1):
                zero = (0,) * self.d
                add_term(result, Monomial(zero, shorter, 0), -1 if j == w else 1)
                add_term(result, Monomial(zero, shorter, (1 << w) | (1 << (w + 1))), -1)

        self._perm_x_cache[key] = result
        return result

    def _right_multiply_x(self, mono: Monomial, j: int) -> Terms:
        """
        (x^e·σ·c_γ)·x̂_j in normal form.
        """
        key = (mono, j)
        cached = self._right_x_cache.get(key)
        if cached is not None:
            return cached

        sign = -1 if mono.clifford >> j & 1 else 1
        result: Terms = {}
        for middle, coefficient in self._perm_x(mono.perm, j).items():
            exponents = tuple(a + b for a, b in zip(mono.exponents, middle.exponents))
            for reduced, c in self._reduce_x(exponents).items():
                s1, step = perm_clifford_product(reduced, middle.perm, middle.clifford)
                s2, image = perm_clifford_product(step, self._identity, mono.clifford)
                add_term(result, image, sign * s1 * s2 * c * coefficient)

        self._right_x_cache[key] = result
        return result

    def multiply_monomials(self, left: Monomial, right: Monomial) -> Terms:
        current: Terms = {left: 1}
        for j, power in enumerate(right.exponents):
            for _ in range(power):
                following: Terms = {}
                for mono, coefficient in current.items():
                    for image, c in self._right_multiply_x(mono, j).items():
                        add_term(following, image, c * coefficient)
                current = following

        result: Terms = {}
        for mono, coefficient in current.items():
            sign, image = perm_clifford_product(mono, right.perm, right.clifford)
            add_term(result, image, sign * coefficient)
        return result

    # Constructors.

    def polynomial(self, exponents: Sequence[int]) -> SergeevElement:
        """
        x̂_1^{e_1}···x̂_d^{e_d} in normal form, for any non-negative exponents.
        """
        exponents = tuple(exponents)
        if len(exponents) != self.d or any(e < 0 for e in exponents):
            raise ParameterError(f"Invalid exponent vector {exponents}")
        return self.element(self._reduce_x(exponents))

    def x(self, i: int, power: int = 1) -> SergeevElement:
        self._check_index(i, self.d)
        exponents = [0] * self.d
        exponents[i - 1] = power
        return self.polynomial(exponents)


_algebras: Dict[AlgebraConfig, SergeevAlgebra] = {}


def sergeev_algebra(config: AlgebraConfig) -> SergeevAlgebra:
    algebra = _algebras.get(config)
    if algebra is None:
        algebra = SergeevAlgebra(config)
        _algebras[config] = algebra
    return algebra


def sergeev_multiply(u: SergeevElement, v: SergeevElement) -> SergeevElement:
    return u * v


def xl_reduction_table(config: AlgebraConfig) -> List[SergeevElement]:
    """
    R_1, ..., R_d: normal forms of x̂_i^l.
    """
    return sergeev_algebra(config).reduction_table()


def filtration_degree(z: Element) -> Union[int, float]:
    """
    Maximal total x-degree of the PBW representative, -inf for zero.
    """
    return max((mono.degree for mono in z.terms), default=-math.inf)


def graded_image(z: Element, k: int) -> GrElement:
    """
    gr_k of the PBW representative: its degree k terms, read in gr S^f_d.
    """
    degree = filtration_degree(z)
    if degree > k:
        raise FiltrationError(
            f"Element of filtration degree {degree} has no image in degree {k}"
        )
    target = graded_algebra(z.config)
    return target.element(
        {mono: c for mono, c in z.terms.items() if mono.degree == k}
    )


def p_element(
    mu: Partition, config: AlgebraConfig, algebra: Optional[SergeevAlgebra] = None
) -> SergeevElement:
    """
    The symmetric polynomial Σ_{ν∼μ} x̂_1^{ν_1}···x̂_d^{ν_d}.
    """
    algebra = algebra or sergeev_algebra(config)
    padded = require_pev(mu, config.d, config.l)
    result = algebra.zero()
    for nu in multiset_permutations(list(padded)):
        result = result + algebra.polynomial(nu)
    return result


def elementary_symmetric_squares(config: AlgebraConfig, k: int) -> SergeevElement:
    """
    e_k(x̂_1², ..., x̂_d²).
    """
    algebra = sergeev_algebra(config)
    result = algebra.zero()
    for chosen in product((0, 1), repeat=config.d):
        if sum(chosen) == k:
            result = result + algebra.polynomial([2 * b for b in chosen])
    return result
