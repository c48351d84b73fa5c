"""
Algebra configuration, PBW monomials and sparse elements.

Both gr S^f_d and S^f_d have the basis of monomials x^e·σ·c_γ with 0 ≤ e_i < l.
Their elements share the sparse container defined here; multiplication is delegated
to the owning algebra.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from sergeev_tools.algebra import clifford
from sergeev_tools.algebra import permutation as perms
from sergeev_tools.algebra.error import (
    AlgebraMismatchError,
    ConfigError,
    ParameterError,
)
from sergeev_tools.algebra.scalar import Scalar, ScalarMode, format_scalar, to_scalar
from sergeev_tools.common.type.typed_enum import StrEnum


class AlgebraKind(StrEnum):
    GRADED = "graded"
    SERGEEV = "sergeev"


class Superparity(StrEnum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class AlgebraConfig:
    """
    Ambient algebra parameters: d strands, level l and the cyclotomic polynomial f.

    f is stored as the full coefficient list (1, b_{l-1}, ..., b_0) of a monic
    polynomial of degree l.
    """

    d: int
    l: int
    f: Tuple[Scalar, ...]
    scalar_mode: ScalarMode = ScalarMode.RATIONAL

    @classmethod
    def create(
        cls,
        d: int,
        l: int,
        f: Optional[Sequence[Union[str, int, Fraction]]] = None,
        scalar_mode: Union[str, ScalarMode] = ScalarMode.RATIONAL,
    ) -> "AlgebraConfig":
        scalar_mode = ScalarMode(scalar_mode)
        if d < 1:
            raise ConfigError(f"Number of strands d must be positive, got {d}")
        if l < 1:
            raise ConfigError(f"Level l must be positive, got {l}")
        if f is None:
            f = [1] + [0] * l
        coefficients = tuple(to_scalar(c, scalar_mode) for c in f)
        if len(coefficients) != l + 1:
            raise ConfigError(
                f"f must be given by {l + 1} coefficients (1,b_{l - 1},...,b_0), "
                f"got {len(coefficients)}"
            )
        if coefficients[0] != 1:
            raise ConfigError("f must be monic: the leading coefficient must be 1")
        for position, coefficient in enumerate(coefficients):
            degree = l - position
            if coefficient != 0 and (l - degree) % 2 != 0:
                raise ConfigError(
                    f"f has a nonzero term of degree {degree} while its degree is {l}: "
                    "the terms appearing in f must all have either even or odd degree"
                )
        return cls(d=d, l=l, f=coefficients, scalar_mode=scalar_mode)

    def lower_terms(self) -> Dict[int, Scalar]:
        """
        Nonzero coefficients b_k of x^k for k < l.
        """
        return {
            self.l - position: c
            for position, c in enumerate(self.f)
            if position > 0 and c != 0
        }

    @property
    def dimension(self) -> int:
        return self.l**self.d * factorial(self.d) * 2**self.d

    def describe(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "l": self.l,
            "f": [format_scalar(c) for c in self.f],
        }


class Monomial(NamedTuple):
    """
    Basis monomial x^e·σ·c_γ. Exponents and permutation are 0-based; the Clifford
    part is a bit mask.
    """

    exponents: Tuple[int, ...]
    perm: Tuple[int, ...]
    clifford: int

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_odd(self) -> bool:
        return clifford.popcount(self.clifford) % 2 == 1

    @property
    def length(self) -> int:
        return perms.length(self.perm)

    def sort_key(self) -> Tuple:
        return (self.degree, self.exponents, self.perm, clifford.indices(self.clifford))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exponents, 1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        if not perms.is_identity(self.perm):
            factors.append("[" + " ".join(map(str, perms.to_one_line(self.perm))) + "]")
        factors.extend(f"c{j + 1}" for j in clifford.indices(self.clifford))
        return "*".join(factors) if factors else "1"


def perm_clifford_product(
    mono: Monomial, perm: perms.Permutation, mask: int
) -> Tuple[int, Monomial]:
    """
    (x^e·π·c_ε)·(τ·c_δ) = ± x^e·(π∘τ)·c_{τ^{-1}(ε)}·c_δ. Exact in both algebras.
    """
    sign1, moved = clifford.relabel(mono.clifford, perms.inverse(perm))
    sign2, result_mask = clifford.multiply(moved, mask)
    return sign1 * sign2, Monomial(
        mono.exponents, perms.compose(mono.perm, perm), result_mask
    )


Terms = Dict[Monomial, Scalar]


def add_term(terms: Terms, mono: Monomial, coefficient: Scalar) -> None:
    """
    Accumulate coefficient into terms, purging zeros.
    """
    if coefficient == 0:
        return
    value = terms.get(mono, 0) + coefficient
    if value == 0:
        del terms[mono]
    else:
        terms[mono] = value


class Element:
    """
    Finite linear combination of basis monomials. Zero coefficients are never stored.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: "Algebra", terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.algebra = algebra
        self._terms: Terms = {}
        for mono, coefficient in (terms or {}).items():
            add_term(self._terms, mono, algebra.scalar(coefficient))

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return self._terms

    @property
    def kind(self) -> AlgebraKind:
        return self.algebra.kind

    @property
    def config(self) -> AlgebraConfig:
        return self.algebra.config

    def items(self) -> List[Tuple[Monomial, Scalar]]:
        """
        Terms in canonical (sorted) order.
        """
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, 0)

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"Expected algebra element, got {type(other).__name__}")
        if self.algebra is not other.algebra and (
            self.kind != other.kind or self.config != other.config
        ):
            raise AlgebraMismatchError(self.algebra, other.algebra)

    def _new(self, terms: Terms) -> "Element":
        return type(self)(self.algebra, terms)

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self._terms)
        for mono, coefficient in other._terms.items():
            add_term(terms, mono, coefficient)
        return self._new(terms)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return self._new({mono: -c for mono, c in self._terms.items()})

    def scale(self, factor: Union[int, Fraction]) -> "Element":
        return self._new({mono: c * factor for mono, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return self.algebra.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ParameterError("Negative powers are not supported")
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.config == other.config
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore

    def commutator(self, other: "Element") -> "Element":
        """
        [u, v] = u·v − v·u.
        """
        return self * other - other * self

    def commutes_with(self, other: "Element") -> bool:
        return (self * other - other * self).is_zero()

    def degree(self) -> Union[int, float]:
        """
        Maximal total x-degree, -inf for zero.
        """
        return max((mono.degree for mono in self._terms), default=-math.inf)

    def superparity(self) -> Superparity:
        odd = {mono.is_odd for mono in self._terms}
        if odd == {True}:
            return Superparity.ODD
        if len(odd) == 2:
            return Superparity.MIXED
        return Superparity.EVEN

    def x_degree_split(self) -> Dict[int, "Element"]:
        """
        Homogeneous components by total x-degree.
        """
        split: Dict[int, Terms] = {}
        for mono, coefficient in self._terms.items():
            split.setdefault(mono.degree, {})[mono] = coefficient
        return {degree: self._new(terms) for degree, terms in sorted(split.items())}

    def is_maximal_degree(self, indices: Iterable[int]) -> bool:
        """
        Whether x_i^{l-1} divides every term for all i in the (1-based) index set.
        """
        top = self.config.l - 1
        wanted = [i - 1 for i in indices]
        return all(
            all(mono.exponents[i] == top for i in wanted) for mono in self._terms
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, coefficient in self.items():
            text = str(mono)
            if coefficient == 1:
                chunks.append(f"+ {text}")
            elif coefficient == -1:
                chunks.append(f"- {text}")
            elif coefficient < 0:
                chunks.append(f"- {format_scalar(-coefficient)}*{text}")
            else:
                chunks.append(f"+ {format_scalar(coefficient)}*{text}")
        result = " ".join(chunks)
        return result[2:] if result.startswith("+ ") else "-" + result[2:]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self}>"


class Algebra:
    """
    Common part of gr S^f_d and S^f_d: basis, generators and the sparse bilinear
    extension of the monomial product.
    """

    kind: AlgebraKind
    element_class = Element

    def __init__(self, config: AlgebraConfig):
        self.config = config
        self.d = config.d
        self.l = config.l
        self._product_cache: Dict[Tuple[Monomial, Monomial], Terms] = {}

    def __repr__(self) -> str:
        return f"{self.kind} algebra (d={self.d}, l={self.l}, f={list(map(format_scalar, self.config.f))})"

    def scalar(self, value) -> Scalar:
        if self.config.scalar_mode == ScalarMode.INTEGER:
            return to_scalar(value, ScalarMode.INTEGER)
        return value

    # Constructors.

    def element(self, terms: Optional[Mapping[Monomial, Scalar]] = None) -> Element:
        return self.element_class(self, terms)

    def zero(self) -> Element:
        return self.element()

    def monomial(
        self,
        exponents: Optional[Sequence[int]] = None,
        perm: Optional[Sequence[int]] = None,
        clifford_mask: int = 0,
    ) -> Monomial:
        exponents = tuple(exponents) if exponents is not None else (0,) * self.d
        perm = tuple(perm) if perm is not None else perms.identity(self.d)
        if len(exponents) != self.d or any(not 0 <= e < self.l for e in exponents):
            raise ParameterError(f"Invalid exponent vector {exponents} for l={self.l}")
        if len(perm) != self.d:
            raise ParameterError(f"Invalid permutation {perm} for d={self.d}")
        return Monomial(exponents, perm, clifford_mask)

    def from_monomial(self, mono: Monomial, coefficient: Scalar = 1) -> Element:
        return self.element({mono: coefficient})

    def one(self) -> Element:
        return self.from_monomial(self.monomial())

    def x(self, i: int, power: int = 1) -> Element:
        """
        x_i^power (1-based i). Powers at or above l vanish; S^f_d overrides this.
        """
        self._check_index(i, self.d)
        if power >= self.l:
            return self.zero()
        exponents = [0] * self.d
        exponents[i - 1] = power
        return self.from_monomial(self.monomial(exponents))

    def s(self, i: int) -> Element:
        """
        Simple transposition s_i (1-based, 1 ≤ i < d).
        """
        self._check_index(i, self.d - 1)
        return self.from_monomial(self.monomial(perm=perms.transposition(self.d, i - 1)))

    def c(self, i: int) -> Element:
        self._check_index(i, self.d)
        return self.from_monomial(self.monomial(clifford_mask=1 << (i - 1)))

    def perm_element(self, one_line: Sequence[int]) -> Element:
        """
        Permutation given in 1-based one-line notation.
        """
        return self.from_monomial(
            self.monomial(perm=perms.from_one_line(one_line, self.d))
        )

    def clifford_product(self, indices: Sequence[int]) -> Element:
        """
        c_{i_1}···c_{i_n} in the given order (1-based indices).
        """
        for i in indices:
            self._check_index(i, self.d)
        sign, mask = clifford.ordered_product([i - 1 for i in indices])
        return self.from_monomial(self.monomial(clifford_mask=mask), sign)

    def generators(self) -> List[Element]:
        """
        Algebra generators: s_i, c_i, x_i.
        """
        return (
            [self.s(i) for i in range(1, self.d)]
            + [self.c(i) for i in range(1, self.d + 1)]
            + [self.x(i) for i in range(1, self.d + 1)]
        )

    def basis(self, odd: Optional[bool] = None) -> List[Monomial]:
        """
        All PBW monomials in deterministic order, optionally of one superparity.
        """
        result = []
        for exponents in product(range(self.l), repeat=self.d):
            for perm in perms.all_permutations(self.d):
                for mask in range(2**self.d):
                    mono = Monomial(tuple(exponents), tuple(perm), mask)
                    if odd is None or mono.is_odd == odd:
                        result.append(mono)
        return result

    @staticmethod
    def _check_index(i: int, top: int) -> None:
        if not 1 <= i <= top:
            raise ParameterError(f"Index {i} is out of range 1..{top}")

    # Multiplication.

    def multiply_monomials(self, left: Monomial, right: Monomial) -> Terms:
        raise NotImplementedError

    def _cached_product(self, left: Monomial, right: Monomial) -> Terms:
        key = (left, right)
        result = self._product_cache.get(key)
        if result is None:
            result = self.multiply_monomials(left, right)
            self._product_cache[key] = result
        return result

    def multiply(self, u: Element, v: Element) -> Element:
        terms: Terms = {}
        for left, a in u.terms.items():
            for right, b in v.terms.items():
                for mono, c in self._cached_product(left, right).items():
                    add_term(terms, mono, a * b * c)
        return self.element(terms)

    def conjugate(self, z: Element, one_line: Sequence[int]) -> Element:
        """
        π·z·π^{-1} for π given in 1-based one-line notation.
        """
        perm = perms.from_one_line(one_line, self.d)
        p = self.from_monomial(self.monomial(perm=perm))
        p_inv = self.from_monomial(self.monomial(perm=perms.inverse(perm)))
        return p * z * p_inv
