"""
The m_d(μ) basis of the even center of gr S^f_d for odd l.
"""

from typing import List

from sergeev_tools.algebra.center import graded_center_vs_mbasis, m_to_z_triangularity
from sergeev_tools.algebra.combinatorics import enumerate_pev
from sergeev_tools.algebra.cycles import m_element
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext

ODD_LEVEL_ONLY = "odd level only"


def check_central(context: SuiteContext) -> Check:
    config = context.config
    check = Check("m-central")
    if config.l % 2 == 0:
        return check.skip(ODD_LEVEL_ONLY)
    algebra = graded_algebra(config)
    generators = algebra.generators()
    for mu in enumerate_pev(config.d, config.l):
        m = m_element(algebra, mu)
        check.record(all(m.commutes_with(g) for g in generators), f"μ={mu}")
    return check


def check_triangularity(context: SuiteContext) -> Check:
    """
    m_d(μ) − z_d(φ^{-1}(μ)) is a combination of z_d(ν) of strictly greater redundancy,
    and φ maps M^ev_d(l) onto P^ev_d(l).
    """
    check = Check("m-to-z-triangular")
    if context.config.l % 2 == 0:
        return check.skip(ODD_LEVEL_ONLY)
    report = m_to_z_triangularity(context.config)
    for failure in report["failures"]:
        check.record(False, f"μ={failure}")
    check.record(report["checks"]["triangular"], "all μ")
    check.record(report["phi_image_matches"], "φ(M^ev) = P^ev")
    return check


def check_center(context: SuiteContext) -> Check:
    check = Check("m-center-comparison")
    if context.config.l % 2 == 0:
        return check.skip(ODD_LEVEL_ONLY)
    reason = context.guard_exceeded()
    if reason and context.skip_guarded:
        return check.skip(reason)
    report = graded_center_vs_mbasis(context.config, context.guard, context.seed)
    check.record(report["pass"], f"d={context.config.d} l={context.config.l}")
    check.details = {key: report[key] for key in ("ranks", "predicted", "checks")}
    return check


def run(context: SuiteContext) -> List[Check]:
    return [check_central(context), check_triangularity(context), check_center(context)]
