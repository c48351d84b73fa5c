"""
The z_d(λ) basis of the even center of gr S^f_d.
"""

from typing import Iterator, List, Optional, Tuple

from sergeev_tools.algebra.center import graded_center_vs_zbasis, z_elements
from sergeev_tools.algebra.combinatorics import enumerate_mev
from sergeev_tools.algebra.cycles import cycle_type, is_cx
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext


def check_center(context: SuiteContext) -> Check:
    """
    Odd l: span and independence. Even l: containment, with strictness reported.
    """
    check = Check("z-center-comparison")
    reason = context.guard_exceeded()
    if reason and context.skip_guarded:
        return check.skip(reason)
    report = graded_center_vs_zbasis(context.config, context.guard, context.seed)
    check.record(report["pass"], f"d={context.config.d} l={context.config.l}")
    check.details = {key: report[key] for key in ("ranks", "predicted", "checks")}
    return check


def check_conjugation(context: SuiteContext) -> Check:
    """
    Every z_d(λ) is fixed by conjugation with the simple transpositions.
    """
    config = context.config
    algebra = graded_algebra(config)
    check = Check("z-conjugation-invariant")
    if config.d < 2:
        return check.skip("needs d ≥ 2")
    for lam, z in zip(enumerate_mev(config.d, config.l), z_elements(config)):
        for i in range(1, config.d):
            one_line = list(range(1, config.d + 1))
            one_line[i - 1], one_line[i] = one_line[i], one_line[i - 1]
            check.record(algebra.conjugate(z, one_line) == z, f"λ={lam} s_{i}")
    return check


def check_nonzero(context: SuiteContext) -> Check:
    config = context.config
    check = Check("z-nonzero")
    for lam, z in zip(enumerate_mev(config.d, config.l), z_elements(config)):
        check.record(not z.is_zero(), f"λ={lam}")
    return check


def _cx_shapes(
    d: int, l: int, top: Optional[Tuple[int, int]] = None
) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """
    Non-increasing sequences of (size, colour) with (size-1)l + colour even and total
    size at most d.
    """
    yield ()
    for size in range(1, d + 1):
        for colour in range(l):
            shape = (size, colour)
            if top is not None and shape > top:
                continue
            if is_cx(size, colour, l):
                for rest in _cx_shapes(d - size, l, shape):
                    yield (shape,) + rest


def check_cycle_types(context: SuiteContext) -> Check:
    """
    The multipartitions indexing z_d(λ) are exactly the cycle types of products of
    disjoint CX-cycles.
    """
    config = context.config
    check = Check("z-index-cycle-types")
    realized = set()
    for shape in _cx_shapes(config.d, config.l):
        cycles, start = [], 1
        for size, colour in shape:
            cycles.append((tuple(range(start, start + size)), colour))
            start += size
        realized.add(cycle_type(cycles, config.d, config.l))
    indexed = {lam.padded(config.d) for lam in enumerate_mev(config.d, config.l)}
    for lam in sorted(realized | indexed, key=str):
        check.record(lam in realized and lam in indexed, f"λ={lam}")
    return check


def run(context: SuiteContext) -> List[Check]:
    return [
        check_nonzero(context),
        check_cycle_types(context),
        check_conjugation(context),
        check_center(context),
    ]
