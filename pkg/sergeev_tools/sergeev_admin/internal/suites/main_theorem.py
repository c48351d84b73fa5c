"""
The even center of S^f_d: symmetric polynomials in the squares x̂_i².
"""

from typing import List

from sergeev_tools.algebra.center import verify_main_theorem
from sergeev_tools.algebra.sergeev import elementary_symmetric_squares, sergeev_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext


def check_squares_central(context: SuiteContext) -> Check:
    """
    e_k(x̂_1², …, x̂_d²) commute with every generator, for any l.
    """
    config = context.config
    generators = sergeev_algebra(config).generators()
    check = Check("squares-central")
    for k in range(1, config.d + 1):
        e = elementary_symmetric_squares(config, k)
        check.record(all(e.commutes_with(g) for g in generators), f"e_{k}")
    return check


def check_center(context: SuiteContext) -> List[Check]:
    """
    For odd l the p_d(μ) form a basis of the even center. The odd center is reported
    alongside and never gates.
    """
    theorem = Check("even-center-basis")
    odd = Check("odd-center-observed", gated=False)
    config = context.config
    if config.l % 2 == 0:
        return [theorem.skip("odd level only"), odd.skip("odd level only")]
    reason = context.guard_exceeded()
    if reason and context.skip_guarded:
        return [theorem.skip(reason), odd.skip(reason)]
    report = verify_main_theorem(config, context.guard, context.seed)
    theorem.record(report["pass"], f"d={config.d} l={config.l}")
    theorem.details = {key: report[key] for key in ("ranks", "predicted", "checks")}
    odd_rank = report["ranks"]["odd_center"]
    odd.record(odd_rank == 0, f"odd center rank {odd_rank}")
    odd.details = {"rank": odd_rank, "elements": report["odd_central"]}
    return [theorem, odd]


def run(context: SuiteContext) -> List[Check]:
    return [check_squares_central(context), *check_center(context)]
