"""
X-cycles: centrality over the polynomial subalgebra, rotation, products and the
X-centralizer of a single cycle.
"""

import random
from itertools import combinations, product
from typing import List

from sergeev_tools.algebra.center import centralizer
from sergeev_tools.algebra.combinatorics import Parity, enumerate_parity
from sergeev_tools.algebra.cycles import OrderedIndexSet, c_alpha, xcycle
from sergeev_tools.algebra.element import Algebra, Element, Monomial
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.linalg import span_equal
from sergeev_tools.sergeev_admin.internal.suites import (
    Check,
    SuiteContext,
    junction_pairs,
    ordered_sets,
)
from sergeev_tools.sergeev_admin.internal.suites.hpoly import glue


def check_x_central(context: SuiteContext) -> Check:
    algebra = graded_algebra(context.config)
    xs = [algebra.x(i) for i in range(1, algebra.d + 1)]
    check = Check("xcycle-commutes-with-x")
    for A in ordered_sets(algebra.d):
        for alpha in enumerate_parity(len(A), Parity.EVEN):
            for r in range(algebra.l):
                z = xcycle(algebra, A, r, alpha)
                check.record(all(z.commutes_with(x) for x in xs), f"A={A} α={alpha} r={r}")
    return check


def check_rotation(context: SuiteContext) -> Check:
    """
    (→A)^{(r,→α)} = (-1)^{α_a((a-1)(l-1)+r+1)} A^{(r,α)}.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("xcycle-rotation")
    for A in ordered_sets(algebra.d):
        a = len(A)
        for alpha in enumerate_parity(a, Parity.EVEN):
            for r in range(l):
                sign = (-1) ** (alpha[a] * ((a - 1) * (l - 1) + r + 1))
                rotated = xcycle(algebra, A.rotate(), r, alpha.rotate())
                check.record(rotated == xcycle(algebra, A, r, alpha).scale(sign), f"A={A} α={alpha} r={r}")
    return check


def check_disjoint_commute(context: SuiteContext) -> Check:
    algebra = graded_algebra(context.config)
    check = Check("xcycle-disjoint-commute")
    pairs = [
        (A, B)
        for A in ordered_sets(algebra.d)
        for B in ordered_sets(algebra.d, max_size=algebra.d - len(A))
        if not set(A.entries) & set(B.entries)
    ]
    if not pairs:
        return check.skip("needs d ≥ 2")
    rng = random.Random(context.seed)
    for _ in range(context.random_samples):
        A, B = rng.choice(pairs)
        alpha = rng.choice(enumerate_parity(len(A), Parity.EVEN))
        beta = rng.choice(enumerate_parity(len(B), Parity.EVEN))
        r, s = rng.randrange(algebra.l), rng.randrange(algebra.l)
        u, v = xcycle(algebra, A, r, alpha), xcycle(algebra, B, s, beta)
        check.record(u.commutes_with(v), f"A={A} B={B} α={alpha} β={beta} r={r} s={s}")
    return check


def check_junction_product(context: SuiteContext) -> Check:
    """
    A^{(r,α)}·B^{(s,β)} = (-1)^{α_a((b-1)(l-1)+s+β_b)} (A∪B)^{(r+s,γ)}.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("xcycle-junction-product")
    for A, B in junction_pairs(algebra.d):
        a, b = len(A), len(B)
        union = A.junction(B)
        for alpha in enumerate_parity(a, Parity.EVEN):
            for beta in enumerate_parity(b, Parity.EVEN):
                gamma = glue(alpha, beta)
                for r, s in product(range(l), repeat=2):
                    sign = (-1) ** (alpha[a] * ((b - 1) * (l - 1) + s + beta[b]))
                    left = xcycle(algebra, A, r, alpha) * xcycle(algebra, B, s, beta)
                    expected = xcycle(algebra, union, r + s, gamma).scale(sign)
                    check.record(left == expected, f"A={A} B={B} α={alpha} β={beta} r={r} s={s}")
    return check


def cycle_candidates(algebra: Algebra, A: OrderedIndexSet, alpha, degree: int) -> List[Element]:
    """
    The monomials x^e·σ_A·c_α(A) with e supported on A and |e| = degree.
    """
    sigma = A.sigma(algebra.d)
    sign, mask = c_alpha(A, alpha)
    result = []
    for powers in product(range(algebra.l), repeat=len(A)):
        if sum(powers) != degree:
            continue
        exponents = [0] * algebra.d
        for i, power in zip(A, powers):
            exponents[i - 1] = power
        result.append(algebra.from_monomial(Monomial(tuple(exponents), sigma, mask), sign))
    return result


def check_x_centralizer(context: SuiteContext) -> List[Check]:
    """
    X-centralizer of span{x^e·σ_A·c_α(A)}, degree by degree: for odd α only elements of
    maximal degree survive; for even α it is zero below degree (a-1)(l-1) and spanned by
    the X-cycle A^{(r,α)} in degree (a-1)(l-1)+r.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    xs = [algebra.x(i) for i in range(1, algebra.d + 1)]
    odd = Check("x-centralizer-odd-maximal")
    even = Check("x-centralizer-even-unique")
    for a in range(1, algebra.d + 1):
        for entries in combinations(range(1, algebra.d + 1), a):
            A = OrderedIndexSet(entries)
            base = (a - 1) * (l - 1)
            for degree in range(a * (l - 1) + 1):
                for alpha in enumerate_parity(a, Parity.ODD):
                    kernel = centralizer(cycle_candidates(algebra, A, alpha, degree), xs)
                    odd.record(
                        all(z.is_maximal_degree(A) for z in kernel),
                        f"A={A} α={alpha} degree={degree}",
                    )
                for alpha in enumerate_parity(a, Parity.EVEN):
                    kernel = centralizer(cycle_candidates(algebra, A, alpha, degree), xs)
                    if degree < base:
                        ok = not kernel
                    else:
                        ok = len(kernel) == 1 and span_equal(
                            kernel, [xcycle(algebra, A, degree - base, alpha)]
                        )
                    even.record(ok, f"A={A} α={alpha} degree={degree}")
    return [odd, even]


def run(context: SuiteContext) -> List[Check]:
    return [
        check_x_central(context),
        check_rotation(context),
        check_disjoint_commute(context),
        check_junction_product(context),
        *check_x_centralizer(context),
    ]
