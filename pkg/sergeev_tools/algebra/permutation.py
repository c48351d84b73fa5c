"""
Permutations of I_d.

Permutations are stored in one-line notation as 0-based tuples: ``perm[i]`` is the
image of ``i``. Composition follows ``compose(s, t)(i) = s(t(i))``, which is the
product ``s * t`` in the symmetric group algebra.
"""

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, List, Sequence, Tuple

from sergeev_tools.algebra.error import ParameterError

Permutation = Tuple[int, ...]


def identity(d: int) -> Permutation:
    return tuple(range(d))


def is_identity(perm: Permutation) -> bool:
    return all(i == v for i, v in enumerate(perm))


def compose(left: Permutation, right: Permutation) -> Permutation:
    return tuple(left[i] for i in right)


def inverse(perm: Permutation) -> Permutation:
    result = [0] * len(perm)
    for i, v in enumerate(perm):
        result[v] = i
    return tuple(result)


def transposition(d: int, i: int) -> Permutation:
    """
    Simple transposition s_i swapping i and i + 1 (0-based i).
    """
    result = list(range(d))
    result[i], result[i + 1] = i + 1, i
    return tuple(result)


def cycle(d: int, entries: Sequence[int]) -> Permutation:
    """
    Cycle sending entries[j] to entries[j + 1] and the last entry to the first one.
    """
    result = list(range(d))
    for j, i in enumerate(entries):
        result[i] = entries[(j + 1) % len(entries)]
    return tuple(result)


def length(perm: Permutation) -> int:
    """
    Coxeter length, i.e. the number of inversions.
    """
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


@lru_cache(maxsize=None)
def reduced_word(perm: Permutation) -> Tuple[int, ...]:
    """
    Lexicographically least reduced word (w_1, ..., w_k) with perm = s_{w_1} ... s_{w_k}.
    """
    word: List[int] = []
    current = perm
    while not is_identity(current):
        positions = inverse(current)
        # Smallest left descent: value i + 1 occurs before value i.
        i = next(i for i in range(len(current) - 1) if positions[i] > positions[i + 1])
        word.append(i)
        current = compose(transposition(len(current), i), current)
    return tuple(word)


def all_permutations(d: int) -> Iterator[Permutation]:
    return permutations(range(d))


def from_one_line(images: Iterable[int], d: int) -> Permutation:
    """
    Build permutation from 1-based one-line notation.
    """
    values = [int(v) for v in images]
    result = tuple(v - 1 for v in values)
    if len(result) != d or sorted(result) != list(range(d)):
        raise ParameterError(f"{values} is not a permutation of 1..{d}")
    return result


def to_one_line(perm: Permutation) -> List[int]:
    return [v + 1 for v in perm]
