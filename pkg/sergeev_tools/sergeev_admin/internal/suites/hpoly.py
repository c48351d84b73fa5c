"""
Products of h-polynomials over overlapping index sets.
"""

import random
from typing import Iterable, List

from sergeev_tools.algebra.combinatorics import Parity, ParityVector, enumerate_parity
from sergeev_tools.algebra.cycles import OrderedIndexSet, h_poly
from sergeev_tools.algebra.element import Algebra, Element
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.sergeev_admin.internal.suites import (
    Check,
    SuiteContext,
    junction_pairs,
    overlap_pairs,
)


def top_monomial(algebra: Algebra, indices: Iterable[int]) -> Element:
    """
    F = Π x_i^{l-1} over the given 1-based indices.
    """
    exponents = [0] * algebra.d
    for i in indices:
        exponents[i - 1] = algebra.l - 1
    return algebra.from_monomial(algebra.monomial(exponents))


def glue(alpha: ParityVector, beta: ParityVector) -> ParityVector:
    """
    γ = (α_1, ..., α_{a-1}, β_1, ..., β_{b-1}, β_b + α_a).
    """
    return ParityVector(
        alpha.bits[:-1] + beta.bits[:-1] + ((beta.bits[-1] + alpha.bits[-1]) % 2,)
    )


def check_junction_product(context: SuiteContext) -> Check:
    """
    h_r^α(A)·h_s^β(B) = (-1)^{α_a((b-1)(l-1)+s)} h_{r+s}^γ(A∪B) for A, B meeting at one point.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("h-junction-product")
    for A, B in junction_pairs(algebra.d):
        a, b = len(A), len(B)
        union = A.junction(B)
        for alpha in enumerate_parity(a, Parity.EVEN):
            for beta in enumerate_parity(b, Parity.EVEN):
                gamma = glue(alpha, beta)
                for r in range(l):
                    left = h_poly(algebra, A, r, alpha)
                    for s in range(l):
                        sign = (-1) ** (alpha[a] * ((b - 1) * (l - 1) + s))
                        product = left * h_poly(algebra, B, s, beta)
                        expected = h_poly(algebra, union, r + s, gamma).scale(sign)
                        check.record(product == expected, f"A={A} B={B} α={alpha} β={beta} r={r} s={s}")
    return check


def _two_point_pairs(d: int):
    # A = (..., k, m) and B = (k, m, ...) from a junction pair meeting at m.
    for A, B in junction_pairs(d):
        if len(A) < 2:
            continue
        yield A, OrderedIndexSet((A[len(A) - 1],) + B.entries)


def check_two_point_product(context: SuiteContext) -> List[Check]:
    """
    For odd l, A = (..., k, m) and B = (k, m, ...): h_0^α(A)·h_0^β(B) is l·F or F with
    F = Π_{A∪B} x^{l-1}. Both forms of the selecting sign are evaluated.
    """
    value = Check("h-two-point-product")
    stated = Check("h-two-point-product-sign-last-entry", gated=False)
    if context.config.l % 2 == 0:
        reason = "odd level only"
        return [value.skip(reason), stated.skip(reason)]

    algebra = graded_algebra(context.config)
    l = algebra.l
    for A, B in _two_point_pairs(algebra.d):
        a = len(A)
        F = top_monomial(algebra, set(A.entries) | set(B.entries))
        for alpha in enumerate_parity(a, Parity.EVEN):
            for beta in enumerate_parity(len(B), Parity.EVEN):
                product = h_poly(algebra, A, 0, alpha) * h_poly(algebra, B, 0, beta)
                instance = f"A={A} B={B} α={alpha} β={beta}"
                scale_second_last = l if (alpha[a - 1] + beta[1]) % 2 == 0 else 1
                scale_last = l if (alpha[a] + beta[1]) % 2 == 0 else 1
                value.record(product == F.scale(scale_second_last), instance)
                stated.record(product == F.scale(scale_last), instance)
    value.details = {"selecting_sign": "(-1)^(α_{a-1}+β_1)"}
    stated.details = {
        "selecting_sign": "(-1)^(α_a+β_1)",
        "matches": stated.instances - len(stated.failures),
    }
    return [value, stated]


def check_overlap_vanishing(context: SuiteContext) -> Check:
    """
    For |A∩B| = k ≥ 2 the product h_r^α(A)·h_s^β(B) is a multiple of Π_{A∪B} x^{l-1},
    and zero once (k-2)(l-1)+r+s > 0. Checked on seeded random instances.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("h-overlap-vanishing")
    pairs = [
        (A, B)
        for overlap in range(2, algebra.d + 1)
        for A, B in overlap_pairs(algebra.d, overlap)
    ]
    if not pairs:
        return check.skip("needs d ≥ 2")
    rng = random.Random(context.seed)
    for _ in range(context.random_samples):
        A, B = rng.choice(pairs)
        alpha = rng.choice(enumerate_parity(len(A), Parity.EVEN))
        beta = rng.choice(enumerate_parity(len(B), Parity.EVEN))
        r, s = rng.randrange(l), rng.randrange(l)
        overlap = len(set(A.entries) & set(B.entries))
        product = h_poly(algebra, A, r, alpha) * h_poly(algebra, B, s, beta)
        if (overlap - 2) * (l - 1) + r + s > 0:
            ok = product.is_zero()
        else:
            F = top_monomial(algebra, set(A.entries) | set(B.entries))
            ok = all(mono in F.terms for mono in product.terms)
        check.record(ok, f"A={A} B={B} α={alpha} β={beta} r={r} s={s}")
    return check


def run(context: SuiteContext) -> List[Check]:
    return [
        check_junction_product(context),
        *check_two_point_product(context),
        check_overlap_vanishing(context),
    ]
