"""
Named element families of gr S^f_d.

X-cycles A^{(r,α)} = h_r^α(A)·σ_A·c_α(A), CX-cycles A^{(r)} = Σ τ_α A^{(r,α)}, odd skew
cycles, coloured Jucys-Murphy elements y_i(k) and the central families z_d(λ), m_d(μ).
Index sets are ordered and 1-based.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from sergeev_tools.algebra import clifford
from sergeev_tools.algebra import permutation as perms
from sergeev_tools.algebra.combinatorics import (
    Multipartition,
    Parity,
    ParityVector,
    Partition,
    enumerate_parity,
    epsilon_signs,
    is_mev,
    require_pev,
    tau,
)
from sergeev_tools.algebra.element import Algebra, Element, Monomial, Terms, add_term
from sergeev_tools.algebra.error import (
    AlgebraError,
    NoSuchElementError,
    ParameterError,
)


@dataclass(frozen=True)
class OrderedIndexSet:
    """
    Ordered set A = {i_1, ..., i_a} of distinct 1-based indices.
    """

    entries: Tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ParameterError("Index set must not be empty")
        if len(set(self.entries)) != len(self.entries):
            raise ParameterError(f"Index set has repeated entries: {self.entries}")
        if any(i < 1 for i in self.entries):
            raise ParameterError(f"Index set entries must be positive: {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "OrderedIndexSet":
        return cls(tuple(entries))

    @classmethod
    def coerce(cls, value: Union["OrderedIndexSet", Sequence[int]]) -> "OrderedIndexSet":
        if isinstance(value, OrderedIndexSet):
            return value
        return cls(tuple(int(i) for i in value))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j: int) -> int:
        """
        i_j, 1-based.
        """
        return self.entries[j - 1]

    def check(self, d: int) -> None:
        if max(self.entries) > d:
            raise ParameterError(f"Index set {self} is not contained in 1..{d}")

    def rotate(self) -> "OrderedIndexSet":
        """
        Shift one place to the right: {i_a, i_1, ..., i_{a-1}}.
        """
        return OrderedIndexSet(self.entries[-1:] + self.entries[:-1])

    def sigma(self, d: int) -> perms.Permutation:
        """
        The cycle σ_A: i_j ↦ i_{j+1}, i_a ↦ i_1.
        """
        self.check(d)
        return perms.cycle(d, [i - 1 for i in self.entries])

    def junction(self, other: "OrderedIndexSet") -> "OrderedIndexSet":
        """
        A ∪ B for A ending and B starting at their single common point.
        """
        if self.entries[-1] != other.entries[0] or set(self.entries) & set(
            other.entries
        ) != {self.entries[-1]}:
            raise ParameterError(
                f"{self} and {other} must meet exactly at the last entry of the first"
            )
        return OrderedIndexSet(self.entries + other.entries[1:])

    def __str__(self) -> str:
        return "(" + " ".join(str(i) for i in self.entries) + ")"


IndexSet = Union[OrderedIndexSet, Sequence[int]]


def _index_set(algebra: Algebra, A: IndexSet) -> OrderedIndexSet:
    A = OrderedIndexSet.coerce(A)
    A.check(algebra.d)
    return A


def _parity_vector(alpha, a: int) -> ParityVector:
    if not isinstance(alpha, ParityVector):
        alpha = ParityVector(tuple(alpha))
    if len(alpha) != a:
        raise ParameterError(f"Parity vector {alpha} must have length {a}")
    return alpha


def _require_even(alpha: ParityVector) -> None:
    if not alpha.is_even:
        raise ParameterError(f"Parity vector {alpha} must be even")


def h_terms(l: int, d: int, A: OrderedIndexSet, r: int, alpha: ParityVector) -> Dict[Tuple[int, ...], int]:
    """
    Exponent vectors and coefficients of h_r^α(A).
    """
    if r < 0:
        raise ParameterError(f"Degree r must be non-negative, got {r}")
    signs = epsilon_signs(alpha)
    total = (len(A) - 1) * (l - 1) + r
    result = {}
    for powers in product(range(l), repeat=len(A)):
        if sum(powers) != total:
            continue
        exponents = [0] * d
        coefficient = 1
        for i, sign, power in zip(A, signs, powers):
            exponents[i - 1] = power
            if sign < 0 and power % 2:
                coefficient = -coefficient
        result[tuple(exponents)] = coefficient
    return result


def h_poly(algebra: Algebra, A: IndexSet, r: int, alpha) -> Element:
    """
    h_r^α(A) = Σ_{r_1+...+r_a = (a-1)(l-1)+r} Π (ε^α_j x_{i_j})^{r_j}, truncated at x^l.
    """
    A = _index_set(algebra, A)
    alpha = _parity_vector(alpha, len(A))
    _require_even(alpha)
    identity = perms.identity(algebra.d)
    return algebra.element(
        {
            Monomial(exponents, identity, 0): c
            for exponents, c in h_terms(algebra.l, algebra.d, A, r, alpha).items()
        }
    )


def c_alpha(A: OrderedIndexSet, alpha: ParityVector) -> Tuple[int, int]:
    """
    c_α(A) = c_{i_1}^{α_1}···c_{i_a}^{α_a} in A-order, as (sign, canonical mask).
    """
    return clifford.ordered_product([i - 1 for i in alpha.support(A.entries)])


def c_alpha_element(algebra: Algebra, A: IndexSet, alpha) -> Element:
    A = _index_set(algebra, A)
    alpha = _parity_vector(alpha, len(A))
    sign, mask = c_alpha(A, alpha)
    return algebra.from_monomial(algebra.monomial(clifford_mask=mask), sign)


def _xcycle_terms(
    algebra: Algebra, A: OrderedIndexSet, r: int, alpha: ParityVector, scale: int = 1
) -> Terms:
    sigma = A.sigma(algebra.d)
    sign, mask = c_alpha(A, alpha)
    return {
        Monomial(exponents, sigma, mask): scale * sign * c
        for exponents, c in h_terms(algebra.l, algebra.d, A, r, alpha).items()
    }


def xcycle(algebra: Algebra, A: IndexSet, r: int, alpha) -> Element:
    """
    X-cycle A^{(r,α)} = h_r^α(A)·σ_A·c_α(A).
    """
    A = _index_set(algebra, A)
    alpha = _parity_vector(alpha, len(A))
    _require_even(alpha)
    return algebra.element(_xcycle_terms(algebra, A, r, alpha))


def cxcycle(algebra: Algebra, A: IndexSet, r: int) -> Element:
    """
    A^{(r)} = Σ_{α even} τ_α A^{(r,α)}. Built for every r; it lies in the Clifford
    centralizer only when is_cx holds.
    """
    A = _index_set(algebra, A)
    terms: Terms = {}
    for alpha in enumerate_parity(len(A), Parity.EVEN):
        for mono, c in _xcycle_terms(algebra, A, r, alpha, tau(alpha)).items():
            add_term(terms, mono, c)
    return algebra.element(terms)


def is_cx(a: int, r: int, l: int) -> bool:
    """
    Whether A^{(r)} with |A| = a is a CX-cycle: (a-1)l + r even.
    """
    if a < 1 or r < 0:
        raise ParameterError(f"Invalid cycle size {a} or degree {r}")
    return ((a - 1) * l + r) % 2 == 0


def odd_skew_thetas(a: int, l: int) -> Dict[ParityVector, int]:
    """
    Coefficients θ_α over odd α with θ_{1_1} = 1 and
    θ_{α^{(j)}} = (-1)^{l-1} (-1)^{α_j + α_{j-1}} θ_α (α_0 read as α_a).
    """
    if (l * a) % 2:
        raise NoSuchElementError(
            f"No odd skew cycle exists for l={l} and a={a}: one of them must be even"
        )
    start = ParityVector.unit(a, 1)
    thetas = {start: 1}
    if a == 1:
        # α^{(1)} = α for a single entry.
        return thetas
    queue = deque([start])
    while queue:
        alpha = queue.popleft()
        for j in range(1, a + 1):
            previous = a if j == 1 else j - 1
            exponent = (l - 1) + alpha[j] + alpha[previous]
            value = thetas[alpha] * (-1 if exponent % 2 else 1)
            shifted = alpha.shift(j)
            known = thetas.get(shifted)
            if known is None:
                thetas[shifted] = value
                queue.append(shifted)
            elif known != value:
                raise AlgebraError(f"Inconsistent odd skew coefficients at {shifted}")
    return thetas


def odd_skew_cycle(algebra: Algebra, A: IndexSet) -> Element:
    """
    F·σ_A·Σ_{α odd} θ_α c_α(A) with F = Π_{i∈A} x_i^{l-1}.
    """
    A = _index_set(algebra, A)
    exponents = [0] * algebra.d
    for i in A:
        exponents[i - 1] = algebra.l - 1
    sigma = A.sigma(algebra.d)
    terms: Terms = {}
    for alpha, theta in odd_skew_thetas(len(A), algebra.l).items():
        sign, mask = c_alpha(A, alpha)
        add_term(terms, Monomial(tuple(exponents), sigma, mask), sign * theta)
    return algebra.element(terms)


def jucys_murphy(algebra: Algebra, i: int, k: int) -> Element:
    """
    y_i(k) = Σ (i i_1 ... i_{a-1})^{(r)} over distinct i_1, ..., i_{a-1} < i, where
    k = (a-1)l + r with 0 ≤ r < l.
    """
    if not 1 <= i <= algebra.d:
        raise ParameterError(f"Index {i} is out of range 1..{algebra.d}")
    if k < 0:
        raise ParameterError(f"Degree k must be non-negative, got {k}")
    a, r = k // algebra.l + 1, k % algebra.l
    result = algebra.zero()
    for others in permutations(range(1, i), a - 1):
        result = result + cxcycle(algebra, (i,) + others, r)
    return result


Cycle = Tuple[Tuple[int, ...], int]


def _canonical_cycles(points: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    """
    One ordering per rotation class: smallest point first.
    """
    first, rest = points[0], points[1:]
    for ordering in permutations(rest):
        yield (first,) + ordering


def _cycle_products(
    parts: List[Tuple[int, int]], free: FrozenSet[int]
) -> Iterable[FrozenSet[Cycle]]:
    if not parts:
        yield frozenset()
        return
    (size, colour), rest = parts[0], parts[1:]
    for points in combinations(sorted(free), size):
        for cycle in _canonical_cycles(points):
            for tail in _cycle_products(rest, free - set(points)):
                yield tail | {(cycle, colour)}


def z_element(algebra: Algebra, lam: Multipartition) -> Element:
    """
    z_d(λ): the sum of all products of disjoint CX-cycles of cycle type λ. λ is padded
    with colour 0 one-cycles up to size d.
    """
    if lam.level != algebra.l:
        raise ParameterError(f"Multipartition {lam} must have {algebra.l} components")
    lam = lam.padded(algebra.d)
    if not is_mev(lam, algebra.l, algebra.d):
        raise ParameterError(
            f"Multipartition {lam} is not the cycle type of a product of disjoint CX-cycles"
        )
    parts = sorted(
        ((size, colour) for size, colour in lam.parts_with_colour() if (size, colour) != (1, 0)),
        reverse=True,
    )
    seen = set()
    result = algebra.zero()
    for cycles in _cycle_products(parts, frozenset(range(1, algebra.d + 1))):
        if cycles in seen:
            continue
        seen.add(cycles)
        term = algebra.one()
        for cycle, colour in sorted(cycles):
            term = term * cxcycle(algebra, cycle, colour)
        result = result + term
    return result


def cycle_type(cycles: Sequence[Tuple[IndexSet, int]], d: int, l: int) -> Multipartition:
    """
    Cycle type of a product of disjoint cycles A^{(r)}: λ^{(r+1)} collects the sizes |A|.
    Points outside every cycle count as colour 0 one-cycles.
    """
    components: List[List[int]] = [[] for _ in range(l)]
    covered = set()
    for A, r in cycles:
        A = OrderedIndexSet.coerce(A)
        A.check(d)
        if covered & set(A):
            raise ParameterError("Cycles must be pairwise disjoint")
        if not 0 <= r < l:
            raise ParameterError(f"Degree {r} is out of range 0..{l - 1}")
        covered.update(A)
        components[r].append(len(A))
    components[0].extend([1] * (d - len(covered)))
    return Multipartition.of(*components)


def m_element(algebra: Algebra, mu: Partition) -> Element:
    """
    m_d(μ) = Σ_{ν∼μ} y_1(ν_1)···y_d(ν_d).
    """
    padded = require_pev(mu, algebra.d, algebra.l)
    cache: Dict[Tuple[int, int], Element] = {}
    result = algebra.zero()
    for nu in multiset_permutations(list(padded)):
        term = algebra.one()
        for i, k in enumerate(nu, 1):
            if k == 0:
                continue
            if (i, k) not in cache:
                cache[(i, k)] = jucys_murphy(algebra, i, k)
            term = term * cache[(i, k)]
        result = result + term
    return result
