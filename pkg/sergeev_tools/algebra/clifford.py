"""
Clifford monomials.

A Clifford monomial c_γ is stored as a bit mask: bit j set means c_{j+1} is present.
The canonical order of the product is increasing index.
"""

from typing import Iterable, List, Sequence, Tuple


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def indices(mask: int) -> List[int]:
    """
    0-based indices of the generators in the mask, increasing.
    """
    result = []
    j = 0
    while mask:
        if mask & 1:
            result.append(j)
        mask >>= 1
        j += 1
    return result


def from_indices(items: Iterable[int]) -> int:
    mask = 0
    for j in items:
        mask |= 1 << j
    return mask


def right_multiply(mask: int, j: int) -> Tuple[int, int]:
    """
    c_mask * c_j in canonical form. Returns (sign, mask).
    """
    sign = -1 if popcount(mask >> (j + 1)) % 2 else 1
    return sign, mask ^ (1 << j)


def multiply(left: int, right: int) -> Tuple[int, int]:
    """
    c_left * c_right in canonical form. Returns (sign, mask).
    """
    sign = 1
    mask = left
    for j in indices(right):
        s, mask = right_multiply(mask, j)
        sign *= s
    return sign, mask


def ordered_product(sequence: Sequence[int]) -> Tuple[int, int]:
    """
    c_{j_1} * ... * c_{j_n} for an arbitrary sequence of 0-based indices.
    """
    sign = 1
    mask = 0
    for j in sequence:
        s, mask = right_multiply(mask, j)
        sign *= s
    return sign, mask


def relabel(mask: int, mapping: Sequence[int]) -> Tuple[int, int]:
    """
    Product of c_{mapping[j]} over the generators c_j of the mask, taken in increasing
    order of j, in canonical form.
    """
    return ordered_product([mapping[j] for j in indices(mask)])
