"""
CX-cycles: the Clifford commutation criterion, rotation invariance, products and the
worked examples on four points.
"""

import random
from itertools import combinations, product
from typing import List

from sergeev_tools.algebra.center import centralizer
from sergeev_tools.algebra.combinatorics import Parity, enumerate_parity
from sergeev_tools.algebra.cycles import OrderedIndexSet, cxcycle, is_cx, xcycle
from sergeev_tools.algebra.element import Algebra, Element
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.linalg import span_equal
from sergeev_tools.sergeev_admin.internal.suites import (
    Check,
    SuiteContext,
    junction_pairs,
    ordered_sets,
    overlap_pairs,
)
from sergeev_tools.sergeev_admin.internal.suites.hpoly import top_monomial


def _cx(algebra: Algebra, *entries: int, r: int = 0) -> Element:
    return cxcycle(algebra, OrderedIndexSet(entries), r)


def check_criterion(context: SuiteContext) -> Check:
    """
    A^{(r)} commutes with every c_i exactly when (a-1)l + r is even.
    """
    algebra = graded_algebra(context.config)
    cs = [algebra.c(i) for i in range(1, algebra.d + 1)]
    check = Check("cx-criterion")
    for A in ordered_sets(algebra.d):
        for r in range(algebra.l):
            z = cxcycle(algebra, A, r)
            commutes = all(z.commutes_with(c) for c in cs)
            check.record(commutes == is_cx(len(A), r, algebra.l), f"A={A} r={r}")
    return check


def check_rotation(context: SuiteContext) -> Check:
    algebra = graded_algebra(context.config)
    check = Check("cx-rotation-invariance")
    for A in ordered_sets(algebra.d, min_size=2):
        for r in range(algebra.l):
            if is_cx(len(A), r, algebra.l):
                check.record(cxcycle(algebra, A.rotate(), r) == cxcycle(algebra, A, r), f"A={A} r={r}")
    return check


def check_junction_product(context: SuiteContext) -> Check:
    """
    A^{(r)}·B^{(s)} = (A∪B)^{(r+s)} when B^{(s)} is a CX-cycle and A, B meet at one point.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("cx-junction-product")
    for A, B in junction_pairs(algebra.d):
        union = A.junction(B)
        for r, s in product(range(l), repeat=2):
            if not is_cx(len(B), s, l):
                continue
            left = cxcycle(algebra, A, r) * cxcycle(algebra, B, s)
            check.record(left == cxcycle(algebra, union, r + s), f"A={A} B={B} r={r} s={s}")
    return check


def check_factorization(context: SuiteContext) -> Check:
    """
    (1 2 3)^{(0)} = (1 2)^{(0)}·(2 3)^{(0)} exactly when l is even.
    """
    check = Check("cx-three-cycle-factorization")
    if context.config.d < 3:
        return check.skip("needs d ≥ 3")
    algebra = graded_algebra(context.config)
    holds = _cx(algebra, 1, 2, 3) == _cx(algebra, 1, 2) * _cx(algebra, 2, 3)
    check.record(holds == (algebra.l % 2 == 0), f"l={algebra.l}")
    check.details = {"factorizes": holds}
    return check


def check_square(context: SuiteContext) -> Check:
    """
    (1 2)^{(0)}·(1 2)^{(0)} vanishes for even l. For odd l it equals 2l·x_1^{l-1}x_2^{l-1}
    and is observed only.
    """
    check = Check("cx-transposition-square", gated=context.config.l % 2 == 0)
    if context.config.d < 2:
        return check.skip("needs d ≥ 2")
    algebra = graded_algebra(context.config)
    square = _cx(algebra, 1, 2) * _cx(algebra, 1, 2)
    check.record(square.is_zero(), "(1 2)^(0)·(1 2)^(0)")
    check.details = {"square": str(square)}
    return check


def check_four_point_products(context: SuiteContext) -> List[Check]:
    """
    (1 2 3)^{(0)}·(2 3 4)^{(0)} is zero for even l and, for odd l, equals
    2·F·s_1s_3·(c_1c_4 + c_2c_3 − c_2c_4 − c_1c_3)
      = −2·(x_1^{l-1}x_2^{l-1}s_1(c_1−c_2))·(x_3^{l-1}x_4^{l-1}s_3(c_3−c_4)).
    (1 2 3)^{(0)}·(3 2 4)^{(0)} vanishes for even l and is observed for odd l.
    """
    even_l = context.config.l % 2 == 0
    chain = Check("cx-four-point-chain")
    factored = Check("cx-four-point-chain-factorization")
    crossed = Check("cx-four-point-crossed", gated=even_l)
    if context.config.d < 4:
        return [check.skip("needs d ≥ 4") for check in (chain, factored, crossed)]

    algebra = graded_algebra(context.config)
    chain_product = _cx(algebra, 1, 2, 3) * _cx(algebra, 2, 3, 4)
    crossed_product = _cx(algebra, 1, 2, 3) * _cx(algebra, 3, 2, 4)
    cc = algebra.clifford_product
    if even_l:
        chain.record(chain_product.is_zero(), "(1 2 3)^(0)·(2 3 4)^(0)")
        factored.skip("odd level only")
    else:
        F = top_monomial(algebra, range(1, 5))
        cliffords = cc([1, 4]) + cc([2, 3]) - cc([2, 4]) - cc([1, 3])
        expected = (F * algebra.s(1) * algebra.s(3) * cliffords).scale(2)
        chain.record(chain_product == expected, "(1 2 3)^(0)·(2 3 4)^(0)")
        first = top_monomial(algebra, (1, 2)) * algebra.s(1) * (algebra.c(1) - algebra.c(2))
        second = top_monomial(algebra, (3, 4)) * algebra.s(3) * (algebra.c(3) - algebra.c(4))
        factored.record(chain_product == (first * second).scale(-2), "odd skew factorization")
    crossed.record(crossed_product.is_zero(), "(1 2 3)^(0)·(3 2 4)^(0)")
    crossed.details = {"product": str(crossed_product)}
    return [chain, factored, crossed]


def _cx_pairs(algebra: Algebra, pairs, rng: random.Random, samples: int):
    l = algebra.l
    for _ in range(samples):
        A, B = rng.choice(pairs)
        r = rng.choice([r for r in range(l) if is_cx(len(A), r, l)] or [None])
        s = rng.choice([s for s in range(l) if is_cx(len(B), s, l)] or [None])
        if r is None or s is None:
            continue
        yield A, B, r, s


def check_overlaps(context: SuiteContext) -> List[Check]:
    """
    Disjoint CX-cycles commute; A^{(r)}·B^{(s)} = 0 once (|A∩B|-2)(l-1)+r+s > 0 with
    |A∩B| ≥ 2. Checked on seeded random instances.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    disjoint = Check("cx-disjoint-commute")
    vanishing = Check("cx-overlap-vanishing")
    rng = random.Random(context.seed)

    disjoint_pairs = list(overlap_pairs(algebra.d, 0))
    if disjoint_pairs:
        for A, B, r, s in _cx_pairs(algebra, disjoint_pairs, rng, context.random_samples):
            u, v = cxcycle(algebra, A, r), cxcycle(algebra, B, s)
            disjoint.record(u.commutes_with(v), f"A={A} B={B} r={r} s={s}")
    else:
        disjoint.skip("needs d ≥ 2")

    overlapping = [
        (A, B)
        for overlap in range(2, algebra.d + 1)
        for A, B in overlap_pairs(algebra.d, overlap)
    ]
    if not overlapping or l == 1:
        return [disjoint, vanishing.skip("needs d ≥ 2 and l ≥ 2")]
    for A, B, r, s in _cx_pairs(algebra, overlapping, rng, context.random_samples):
        overlap = len(set(A.entries) & set(B.entries))
        if (overlap - 2) * (l - 1) + r + s > 0:
            product_ = cxcycle(algebra, A, r) * cxcycle(algebra, B, s)
            vanishing.record(product_.is_zero(), f"A={A} B={B} r={r} s={s}")
    return [disjoint, vanishing]


def check_clifford_centralizer(context: SuiteContext) -> Check:
    """
    Below maximal degree, the elements of span{A^{(r,α)} : α even} commuting with every
    c_i are the multiples of A^{(r)} when it is a CX-cycle, and zero otherwise.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    cs = [algebra.c(i) for i in range(1, algebra.d + 1)]
    check = Check("cx-clifford-centralizer-unique")
    for a in range(1, algebra.d + 1):
        for entries in combinations(range(1, algebra.d + 1), a):
            A = OrderedIndexSet(entries)
            for r in range(l - 1):
                candidates = [xcycle(algebra, A, r, alpha) for alpha in enumerate_parity(a, Parity.EVEN)]
                kernel = centralizer(candidates, cs)
                if is_cx(a, r, l):
                    ok = len(kernel) == 1 and span_equal(kernel, [cxcycle(algebra, A, r)])
                else:
                    ok = not kernel
                check.record(ok, f"A={A} r={r}")
    if not check.instances:
        check.skip("needs l ≥ 2")
    return check


def run(context: SuiteContext) -> List[Check]:
    return [
        check_criterion(context),
        check_rotation(context),
        check_junction_product(context),
        check_factorization(context),
        check_square(context),
        *check_four_point_products(context),
        *check_overlaps(context),
        check_clifford_centralizer(context),
    ]
