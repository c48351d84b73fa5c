"""
Odd skew cycles.
"""

from itertools import combinations, permutations
from typing import List

from sergeev_tools.algebra.cycles import OrderedIndexSet, odd_skew_cycle, odd_skew_thetas
from sergeev_tools.algebra.element import Superparity
from sergeev_tools.algebra.error import NoSuchElementError
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext, ordered_sets


def check_existence(context: SuiteContext) -> Check:
    l = context.config.l
    check = Check("odd-skew-existence")
    for a in range(1, context.config.d + 1):
        try:
            odd_skew_thetas(a, l)
            exists = True
        except NoSuchElementError:
            exists = False
        check.record(exists == ((l * a) % 2 == 0), f"a={a} l={l}")
    return check


def check_properties(context: SuiteContext) -> List[Check]:
    """
    Each odd skew cycle is odd, of maximal degree, commutes with every x_i and
    anticommutes with every c_i.
    """
    algebra = graded_algebra(context.config)
    xs = [algebra.x(i) for i in range(1, algebra.d + 1)]
    cs = [algebra.c(i) for i in range(1, algebra.d + 1)]
    shape = Check("odd-skew-odd-maximal")
    x_central = Check("odd-skew-commutes-with-x")
    skew = Check("odd-skew-anticommutes-with-c")
    for A in ordered_sets(algebra.d):
        if (algebra.l * len(A)) % 2:
            continue
        z = odd_skew_cycle(algebra, A)
        instance = f"A={A}"
        shape.record(
            not z.is_zero() and z.superparity() == Superparity.ODD and z.is_maximal_degree(A),
            instance,
        )
        x_central.record(all(z.commutes_with(x) for x in xs), instance)
        skew.record(all(c * z == -(z * c) for c in cs), instance)
    return [shape, x_central, skew]


def check_orbit_sums(context: SuiteContext) -> Check:
    """
    For odd l the sum of all Σ_d-conjugates of an odd skew cycle vanishes.
    """
    check = Check("odd-skew-orbit-sum")
    if context.config.l % 2 == 0:
        return check.skip("odd level only")
    algebra = graded_algebra(context.config)
    one_lines = list(permutations(range(1, algebra.d + 1)))
    for a in range(2, algebra.d + 1, 2):
        for entries in combinations(range(1, algebra.d + 1), a):
            z = odd_skew_cycle(algebra, OrderedIndexSet(entries))
            total = algebra.zero()
            for one_line in one_lines:
                total = total + algebra.conjugate(z, one_line)
            check.record(total.is_zero(), f"A={entries}")
    if not check.instances:
        check.skip("needs d ≥ 2")
    return check


def run(context: SuiteContext) -> List[Check]:
    return [check_existence(context), *check_properties(context), check_orbit_sums(context)]
