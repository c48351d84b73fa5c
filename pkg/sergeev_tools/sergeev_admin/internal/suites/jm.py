"""
Coloured Jucys-Murphy elements as top graded images of powers of x̂_i.

For odd l and k ≥ 2l the top graded image of x̂_i^k also collects the squares
(j i)^{(0)}·(j i)^{(0)} = 2l·x_j^{l-1}x_i^{l-1}, so it differs from y_i(k). Those
instances are reported as observations carrying the excess.
"""

from itertools import permutations
from typing import List, Optional

from sergeev_tools.algebra.combinatorics import enumerate_pev
from sergeev_tools.algebra.cycles import OrderedIndexSet, cxcycle, jucys_murphy, m_element
from sergeev_tools.algebra.element import Element
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.sergeev import (
    filtration_degree,
    graded_image,
    p_element,
    sergeev_algebra,
)
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext


def jm_degrees(l: int) -> List[int]:
    """
    Even k ≤ 3l together with k = l.
    """
    return sorted(set(range(2, 3 * l + 1, 2)) | {l})


def top_degree(k: int, l: int) -> int:
    """
    (a-1)(l-1) + r for k = (a-1)l + r, 0 ≤ r < l.
    """
    return k - k // l


def squares_vanish(k: int, l: int) -> bool:
    """
    Whether the top graded image of x̂_i^k is free of transposition squares.
    """
    return l % 2 == 0 or k < 2 * l


def top_image_excess(z: Element, degree: int, expected: Element) -> Optional[Element]:
    """
    gr_degree(z) − expected, or None when z lies above the given filtration degree.
    """
    if filtration_degree(z) > degree:
        return None
    return graded_image(z, degree) - expected


def check_power_images(context: SuiteContext) -> List[Check]:
    """
    x̂_i^k lies in filtration degree (a-1)(l-1)+r with image y_i(k) there.
    """
    config = context.config
    sergeev = sergeev_algebra(config)
    graded = graded_algebra(config)
    check = Check("jm-top-degree")
    observed = Check("jm-top-degree-square-excess", gated=False)
    excess = {}
    for i in range(1, config.d + 1):
        for k in jm_degrees(config.l):
            difference = top_image_excess(
                sergeev.x(i, k), top_degree(k, config.l), jucys_murphy(graded, i, k)
            )
            instance = f"i={i} k={k}"
            if difference is None or squares_vanish(k, config.l):
                check.record(difference is not None and difference.is_zero(), instance)
            elif not observed.record(difference.is_zero(), instance):
                excess[instance] = str(difference)
    check.details = {"degrees": jm_degrees(config.l)}
    if not observed.instances:
        observed.skip("even level or no k ≥ 2l")
    else:
        observed.details = {"excess": excess}
    return [check, observed]


def check_orientation(context: SuiteContext) -> Check:
    """
    For even k, listing i last in each cycle gives the same y_i(k).
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("jm-orientation")
    for i in range(1, algebra.d + 1):
        for k in range(2, 3 * l + 1, 2):
            a, r = k // l + 1, k % l
            total = algebra.zero()
            for others in permutations(range(1, i), a - 1):
                total = total + cxcycle(algebra, OrderedIndexSet(others + (i,)), r)
            check.record(total == jucys_murphy(algebra, i, k), f"i={i} k={k}")
    return check


def check_transposition_product(context: SuiteContext) -> Check:
    """
    (j i)^{(0)}·(j k)^{(0)} = (i j k)^{(0)} for distinct i, j, k.
    """
    check = Check("jm-transposition-product")
    if context.config.d < 3:
        return check.skip("needs d ≥ 3")
    algebra = graded_algebra(context.config)
    for i, j, k in permutations(range(1, algebra.d + 1), 3):
        left = cxcycle(algebra, (j, i), 0) * cxcycle(algebra, (j, k), 0)
        check.record(left == cxcycle(algebra, (i, j, k), 0), f"i={i} j={j} k={k}")
    return check


def check_symmetric_lift(context: SuiteContext) -> List[Check]:
    """
    p_d(μ) lies in filtration degree |μ| − |μ/l| with image m_d(μ) there. For odd l,
    partitions with a part ≥ 2l are observed with their excess.
    """
    config = context.config
    sergeev = sergeev_algebra(config)
    graded = graded_algebra(config)
    check = Check("symmetric-polynomial-top-degree")
    observed = Check("symmetric-polynomial-square-excess", gated=False)
    excess = {}
    for mu in enumerate_pev(config.d, config.l):
        p = p_element(mu, config, sergeev)
        degree = mu.size - mu.floor_div(config.l).size
        difference = top_image_excess(p, degree, m_element(graded, mu))
        instance = f"μ={mu}"
        if difference is None or all(squares_vanish(part, config.l) for part in mu.parts):
            check.record(difference is not None and difference.is_zero(), instance)
        elif not observed.record(difference.is_zero(), instance):
            excess[instance] = str(difference)
    if not observed.instances:
        observed.skip("even level or no part ≥ 2l")
    else:
        observed.details = {"excess": excess}
    return [check, observed]


def run(context: SuiteContext) -> List[Check]:
    return [
        *check_power_images(context),
        check_orientation(context),
        check_transposition_product(context),
        *check_symmetric_lift(context),
    ]
