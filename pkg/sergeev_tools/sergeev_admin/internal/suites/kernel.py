"""
The filtration of S^f_d and its associated graded: gr(u·v) = gr(u)·gr(v).
"""

import random
from typing import List

from sergeev_tools.algebra.error import FiltrationError
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.sergeev import graded_image, sergeev_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext, random_monomial


def check_graded_products(context: SuiteContext) -> Check:
    """
    For PBW monomials u, v of degrees j, k the product û·v̂ has filtration degree at
    most j + k, and its degree j + k part is the graded product u·v.
    """
    sergeev = sergeev_algebra(context.config)
    graded = graded_algebra(context.config)
    rng = random.Random(context.seed)
    check = Check("graded-image-of-product")
    for _ in range(context.kernel_samples):
        u = random_monomial(sergeev, rng)
        v = random_monomial(sergeev, rng)
        product_ = sergeev.from_monomial(u) * sergeev.from_monomial(v)
        expected = graded.from_monomial(u) * graded.from_monomial(v)
        try:
            ok = graded_image(product_, u.degree + v.degree) == expected
        except FiltrationError:
            ok = False
        check.record(ok, f"u={u} v={v}")
    check.details = {"samples": context.kernel_samples, "seed": context.seed}
    return check


def run(context: SuiteContext) -> List[Check]:
    return [check_graded_products(context)]
