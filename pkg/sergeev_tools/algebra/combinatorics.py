"""
Parity vectors, partitions and multipartitions.

Parity vectors index Clifford monomials of ordered index sets and carry the sign
functions ε^α and τ_α. Partitions and multipartitions index the central element
families; the bijection φ relates the two indexing sets.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from sergeev_tools.algebra.error import ParameterError
from sergeev_tools.common.type.typed_enum import StrEnum


class Parity(StrEnum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ParityVector:
    """
    Element α of Z_2^a.
    """

    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ParameterError(f"Parity vector entries must be 0 or 1: {self.bits}")

    @classmethod
    def of(cls, *bits: int) -> "ParityVector":
        return cls(tuple(bits))

    @classmethod
    def unit(cls, a: int, i: int) -> "ParityVector":
        """
        1_i, the vector with a single 1 in position i (1-based).
        """
        _check_position(a, i)
        return cls(tuple(1 if j == i else 0 for j in range(1, a + 1)))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        """
        α_i, 1-based.
        """
        _check_position(len(self), i)
        return self.bits[i - 1]

    def __add__(self, other: "ParityVector") -> "ParityVector":
        if len(self) != len(other):
            raise ParameterError("Parity vectors of different lengths")
        return ParityVector(tuple((a + b) % 2 for a, b in zip(self.bits, other.bits)))

    @property
    def weight(self) -> int:
        """
        |α|.
        """
        return sum(self.bits)

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.weight % 2 == 0 else Parity.ODD

    @property
    def is_even(self) -> bool:
        return self.weight % 2 == 0

    def epsilon(self) -> Tuple[int, ...]:
        return epsilon_signs(self)

    def shift(self, j: int) -> "ParityVector":
        return alpha_shift(self, j)

    def rotate(self) -> "ParityVector":
        """
        Shift one place to the right: (α_a, α_1, ..., α_{a-1}).
        """
        if not self.bits:
            return self
        return ParityVector(self.bits[-1:] + self.bits[:-1])

    def support(self, entries: Sequence[int]) -> List[int]:
        """
        supp(α, A) in the order of A.
        """
        if len(entries) != len(self):
            raise ParameterError("Index set and parity vector lengths differ")
        return [i for i, b in zip(entries, self.bits) if b]

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


def _check_position(a: int, j: int) -> None:
    if not 1 <= j <= a:
        raise ParameterError(f"Index {j} is out of range 1..{a}")


def epsilon_signs(alpha: ParityVector) -> Tuple[int, ...]:
    """
    ε^α_i = Π_{j<i} (-1)^{α_j}.
    """
    signs = []
    sign = 1
    for b in alpha.bits:
        signs.append(sign)
        if b:
            sign = -sign
    return tuple(signs)


def alpha_shift(alpha: ParityVector, j: int) -> ParityVector:
    """
    α^{(j)} = α + 1_j + 1_{j-1} for j > 1, and α + 1_1 + 1_a for j = 1.
    """
    a = len(alpha)
    _check_position(a, j)
    other = a if j == 1 else j - 1
    bits = list(alpha.bits)
    bits[j - 1] ^= 1
    bits[other - 1] ^= 1
    return ParityVector(tuple(bits))


def tau(alpha: ParityVector) -> int:
    """
    τ_α = (-1)^{|α|/2 + Σ i α_i}, defined for even α.
    """
    if not alpha.is_even:
        raise ParameterError(f"τ is defined for even parity vectors only, got {alpha}")
    exponent = alpha.weight // 2 + sum(i for i, b in enumerate(alpha.bits, 1) if b)
    return -1 if exponent % 2 else 1


@lru_cache(maxsize=None)
def enumerate_parity(a: int, parity: Parity) -> Tuple[ParityVector, ...]:
    """
    All vectors of Z_2^a of the given parity, lexicographic on bits.
    """
    if a < 0:
        raise ParameterError(f"Negative length {a}")
    wanted = 0 if parity == Parity.EVEN else 1
    return tuple(
        ParityVector(bits)
        for bits in product((0, 1), repeat=a)
        if sum(bits) % 2 == wanted
    )


@dataclass(frozen=True, order=True)
class Partition:
    """
    Partition with weakly decreasing positive parts.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ParameterError(f"Partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ParameterError(
                f"Partition parts must be weakly decreasing: {self.parts}"
            )

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        """
        Partition from unsorted parts, zero parts dropped.
        """
        return cls(tuple(sorted((p for p in parts if p != 0), reverse=True)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def floor_div(self, l: int) -> "Partition":
        """
        λ/l, the partition of floor-divided parts.
        """
        return Partition.from_parts([p // l for p in self.parts])

    def count(self, part: int) -> int:
        return self.parts.count(part)

    def padded(self, d: int) -> Tuple[int, ...]:
        """
        Parts as a d-tuple padded with zeros.
        """
        if len(self.parts) > d:
            raise ParameterError(f"Partition {self} has more than {d} parts")
        return self.parts + (0,) * (d - len(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True, order=True)
class Multipartition:
    """
    Sequence of l partitions (λ^{(1)}, ..., λ^{(l)}).
    """

    components: Tuple[Partition, ...]

    @classmethod
    def of(cls, *components: Sequence[int]) -> "Multipartition":
        return cls(tuple(Partition.from_parts(c) for c in components))

    @classmethod
    def empty(cls, l: int) -> "Multipartition":
        return cls(tuple(Partition() for _ in range(l)))

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(p.size for p in self.components)

    def __getitem__(self, r: int) -> Partition:
        """
        λ^{(r)}, 1-based.
        """
        return self.components[r - 1]

    def parts_with_colour(self) -> List[Tuple[int, int]]:
        """
        (part, r - 1) pairs: cycle sizes with the degree of the corresponding cycle.
        """
        return [
            (part, r)
            for r, component in enumerate(self.components)
            for part in component.parts
        ]

    def padded(self, d: int) -> "Multipartition":
        """
        Fill the first component with 1-parts up to total size d.
        """
        if self.size > d:
            raise ParameterError(f"Multipartition {self} has size greater than {d}")
        if self.size == d:
            return self
        first = Partition.from_parts(
            list(self.components[0].parts) + [1] * (d - self.size)
        )
        return Multipartition((first,) + self.components[1:])

    def __str__(self) -> str:
        return "/".join(",".join(str(p) for p in c.parts) for c in self.components)


def redundancy(lam: Multipartition) -> int:
    """
    Number of parts of λ^{(1)} equal to 1.
    """
    if not lam.components:
        return 0
    return lam.components[0].count(1)


def phi(lam: Multipartition) -> Partition:
    """
    φ: parts a of λ^{(r)} become parts (a - 1) l + r - 1; zero parts are dropped.
    """
    l = lam.level
    if l < 1:
        raise ParameterError("Multipartition must have at least one component")
    return Partition.from_parts(
        [(part - 1) * l + r for part, r in lam.parts_with_colour()]
    )


def phi_inv(mu: Partition, l: int, d: Optional[int] = None) -> Multipartition:
    """
    Inverse of φ. A part μ_i ≡ r - 1 (mod l) becomes the part ⌊μ_i / l⌋ + 1 of
    λ^{(r)}. When d is given, λ^{(1)} is padded with 1-parts to total size d.
    """
    if l < 1:
        raise ParameterError(f"Level must be positive, got {l}")
    components: List[List[int]] = [[] for _ in range(l)]
    for part in mu.parts:
        components[part % l].append(part // l + 1)
    result = Multipartition.of(*components)
    if d is not None:
        if len(mu) + mu.floor_div(l).size > d:
            raise ParameterError(f"Partition {mu} does not lie in P_{d}({l})")
        result = result.padded(d)
    return result


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """
    All partitions of n, in decreasing lexicographic order.
    """
    if n < 0:
        raise ParameterError(f"Negative size {n}")
    if n == 0:
        return (Partition(),)
    result = []
    for multiplicities in sympy_partitions(n):
        parts: List[int] = []
        for part, count in multiplicities.items():
            parts.extend([part] * count)
        result.append(Partition.from_parts(parts))
    return tuple(sorted(result, reverse=True))


def in_p(mu: Partition, d: int, l: int) -> bool:
    """
    Membership in P_d(l): r + |μ/l| ≤ d.
    """
    return len(mu) + mu.floor_div(l).size <= d


def enumerate_p(d: int, l: int) -> List[Partition]:
    """
    P_d(l). Every member has size below d·l.
    """
    _check_level(d, l)
    return [mu for n in range(d * l) for mu in partitions_of(n) if in_p(mu, d, l)]


def enumerate_pev(d: int, l: int) -> List[Partition]:
    """
    P^ev_d(l): members of P_d(l) all of whose parts are even.
    """
    return [mu for mu in enumerate_p(d, l) if all(p % 2 == 0 for p in mu.parts)]


def _compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_m(d: int, l: int) -> List[Multipartition]:
    """
    M_d(l): l-multipartitions of d.
    """
    _check_level(d, l)
    result = []
    for sizes in _compositions(d, l):
        for components in product(*(partitions_of(n) for n in sizes)):
            result.append(Multipartition(tuple(components)))
    return result


def is_mev(lam: Multipartition, l: int, d: Optional[int] = None) -> bool:
    """
    Whether λ is the cycle type of a product of disjoint CX-cycles.

    For even l the components λ^{(r)} with even r must be empty; for odd l the odd
    components have only odd parts and the even components only even parts. When d is
    given the total size must be d.
    """
    if lam.level != l:
        return False
    if d is not None and lam.size != d:
        return False
    for r, component in enumerate(lam.components, 1):
        if l % 2 == 0:
            if r % 2 == 0 and component.parts:
                return False
        elif any(part % 2 != r % 2 for part in component.parts):
            return False
    return True


def enumerate_mev(d: int, l: int) -> List[Multipartition]:
    return [lam for lam in enumerate_m(d, l) if is_mev(lam, l)]


def _check_level(d: int, l: int) -> None:
    if d < 0 or l < 1:
        raise ParameterError(f"Invalid parameters d={d}, l={l}")


def require_pev(mu: Partition, d: int, l: int) -> Tuple[int, ...]:
    """
    Validate μ ∈ P^ev_d(l) and return it as a zero-padded d-tuple.
    """
    if any(p % 2 for p in mu.parts) or not in_p(mu, d, l):
        raise ParameterError(f"Partition {mu} does not lie in P^ev_{d}({l})")
    return mu.padded(d)
