"""
Defining relations of gr S^f_d and S^f_d, the power relation, the x̂_i^l reduction
table, associativity and the PBW dimension.
"""

import random
from itertools import product
from typing import Iterator, List, Tuple

from sergeev_tools.algebra.element import Algebra, AlgebraKind, Element
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.sergeev import SergeevAlgebra, sergeev_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext, random_monomial

EXHAUSTIVE_ASSOCIATIVITY_DIMENSION = 32

Relation = Tuple[str, Element, Element]


def common_relations(algebra: Algebra) -> Iterator[Relation]:
    """
    Relations shared by both algebras: the Sergeev group algebra and commuting x's.
    """
    d = algebra.d
    x, s, c, one = algebra.x, algebra.s, algebra.c, algebra.one()
    for i in range(1, d):
        yield f"s{i}^2", s(i) * s(i), one
        yield f"s{i}c{i}", s(i) * c(i), c(i + 1) * s(i)
        yield f"s{i}c{i + 1}", s(i) * c(i + 1), c(i) * s(i)
        for j in range(1, d):
            if abs(i - j) > 1:
                yield f"s{i}s{j}", s(i) * s(j), s(j) * s(i)
        if i + 1 < d:
            yield f"braid {i}", s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)
        for j in range(1, d + 1):
            if j not in (i, i + 1):
                yield f"s{i}c{j}", s(i) * c(j), c(j) * s(i)
                yield f"s{i}x{j}", s(i) * x(j), x(j) * s(i)
    for i, j in product(range(1, d + 1), repeat=2):
        if i == j:
            yield f"c{i}^2", c(i) * c(i), one
            yield f"x{i}c{i}", x(i) * c(i), -(c(i) * x(i))
        else:
            yield f"c{i}c{j}", c(i) * c(j), -(c(j) * c(i))
            yield f"x{i}c{j}", x(i) * c(j), c(j) * x(i)
            yield f"x{i}x{j}", x(i) * x(j), x(j) * x(i)


def graded_relations(algebra: Algebra) -> Iterator[Relation]:
    x, s = algebra.x, algebra.s
    for i in range(1, algebra.d):
        yield f"s{i}x{i}", s(i) * x(i), x(i + 1) * s(i)
        yield f"s{i}x{i + 1}", s(i) * x(i + 1), x(i) * s(i)
    for i in range(1, algebra.d + 1):
        yield f"x{i}^l", x(i) * x(i, algebra.l - 1), algebra.zero()


def sergeev_relations(algebra: SergeevAlgebra) -> Iterator[Relation]:
    x, s, one = algebra.x, algebra.s, algebra.one()
    for i in range(1, algebra.d):
        cc = algebra.clifford_product([i, i + 1])
        yield f"s{i}x{i}", s(i) * x(i), x(i + 1) * s(i) - one - cc
        yield f"s{i}x{i + 1}", s(i) * x(i + 1), x(i) * s(i) + one - cc
    f_of_x = algebra.zero()
    for position, b in enumerate(algebra.config.f):
        if b:
            f_of_x = f_of_x + algebra.x(1, algebra.l - position).scale(b)
    yield "f(x1)", f_of_x, algebra.zero()


def check_relations(algebra: Algebra) -> Check:
    check = Check(f"{algebra.kind}-relations")
    relations = list(common_relations(algebra))
    if algebra.kind == AlgebraKind.GRADED:
        relations.extend(graded_relations(algebra))
    else:
        relations.extend(sergeev_relations(algebra))
    for name, left, right in relations:
        check.record(left == right, name)
    return check


def check_power_relation(context: SuiteContext) -> Check:
    """
    ŝ_i x̂_i^n = x̂_{i+1}^n ŝ_i − Σ_{j<n} x̂_i^j x̂_{i+1}^{n-1-j}(1 + (−1)^j ĉ_iĉ_{i+1})
    for n up to 2l.
    """
    algebra = sergeev_algebra(context.config)
    check = Check("sergeev-power-relation")
    if algebra.d < 2:
        return check.skip("needs d ≥ 2")
    one = algebra.one()
    for i in range(1, algebra.d):
        s = algebra.s(i)
        cc = algebra.clifford_product([i, i + 1])
        for n in range(1, 2 * algebra.l + 1):
            right = algebra.x(i + 1, n) * s
            for j in range(n):
                exponents = [0] * algebra.d
                exponents[i - 1], exponents[i] = j, n - 1 - j
                right = right - algebra.polynomial(exponents) * (one + cc.scale((-1) ** j))
            check.record(s * algebra.x(i, n) == right, f"i={i} n={n}")
    return check


def check_reduction_table(context: SuiteContext) -> Check:
    """
    x̂_i^{l-1}·x̂_i agrees with the stored normal form of x̂_i^l.
    """
    algebra = sergeev_algebra(context.config)
    table = algebra.reduction_table()
    check = Check("sergeev-reduction-table")
    for i in range(1, algebra.d + 1):
        power = algebra.x(i, algebra.l - 1) * algebra.x(i)
        check.record(power == table[i - 1], f"x{i}^{algebra.l}")
    return check


def check_associativity(algebra: Algebra, context: SuiteContext) -> Check:
    """
    Exhaustive on basis monomials for small algebras, seeded random triples otherwise.
    """
    check = Check(f"{algebra.kind}-associativity")
    if context.config.dimension <= EXHAUSTIVE_ASSOCIATIVITY_DIMENSION:
        elements = [algebra.from_monomial(mono) for mono in algebra.basis()]
        triples = product(elements, repeat=3)
        check.details = {"mode": "exhaustive"}
    else:
        rng = random.Random(context.seed)
        triples = (
            tuple(algebra.from_monomial(random_monomial(algebra, rng)) for _ in range(3))
            for _ in range(context.random_samples)
        )
        check.details = {"mode": "random", "samples": context.random_samples}
    for u, v, w in triples:
        check.record((u * v) * w == u * (v * w), f"({u})({v})({w})")
    return check


def check_dimension(algebra: Algebra, context: SuiteContext) -> Check:
    check = Check(f"{algebra.kind}-dimension")
    reason = context.guard_exceeded()
    if reason:
        return check.skip(reason)
    size = len(algebra.basis())
    check.record(size == context.config.dimension, f"{size} = l^d·d!·2^d")
    check.details = {"dimension": size}
    return check


def run(context: SuiteContext) -> List[Check]:
    checks = []
    for algebra in (graded_algebra(context.config), sergeev_algebra(context.config)):
        checks.append(check_relations(algebra))
        checks.append(check_associativity(algebra, context))
        checks.append(check_dimension(algebra, context))
    checks.append(check_power_relation(context))
    checks.append(check_reduction_table(context))
    return checks
