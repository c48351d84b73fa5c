"""
Sign rules for parity vectors and their action on h-polynomials.
"""

from typing import List

from sergeev_tools.algebra.combinatorics import (
    Parity,
    ParityVector,
    alpha_shift,
    enumerate_parity,
    epsilon_signs,
    tau,
)
from sergeev_tools.algebra.cycles import c_alpha_element, h_poly
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext, ordered_sets


def _all_vectors(a: int):
    return enumerate_parity(a, Parity.EVEN) + enumerate_parity(a, Parity.ODD)


def check_epsilon_parity(d: int) -> Check:
    check = Check("epsilon-last-entry-parity")
    for a in range(1, d + 1):
        for alpha in _all_vectors(a):
            last = epsilon_signs(alpha)[-1]
            check.record((last == (-1) ** alpha[a]) == alpha.is_even, alpha)
    return check


def check_clifford_epsilon(context: SuiteContext) -> Check:
    """
    c_{i_j}·c_α(A) = ε^α_j c_{α+1_j}(A) and c_α(A)·c_{i_j} = (-1)^{α_{j+1}+...+α_a} c_{α+1_j}(A).
    """
    algebra = graded_algebra(context.config)
    check = Check("clifford-epsilon")
    for A in ordered_sets(algebra.d):
        a = len(A)
        for alpha in _all_vectors(a):
            signs = epsilon_signs(alpha)
            c_a = c_alpha_element(algebra, A, alpha)
            for j in range(1, a + 1):
                target = c_alpha_element(algebra, A, alpha + ParityVector.unit(a, j))
                c = algebra.c(A[j])
                right_sign = (-1) ** sum(alpha[k] for k in range(j + 1, a + 1))
                ok = c * c_a == target.scale(signs[j - 1]) and c_a * c == target.scale(right_sign)
                check.record(ok, f"A={A} α={alpha} j={j}")
    return check


def check_epsilon_shift(d: int) -> Check:
    check = Check("epsilon-shift")
    for a in range(1, d + 1):
        for alpha in _all_vectors(a):
            before = epsilon_signs(alpha)
            for j in range(1, a + 1):
                after = epsilon_signs(alpha_shift(alpha, j))
                if j > 1:
                    expected = tuple(-e if i == j else e for i, e in enumerate(before, 1))
                else:
                    expected = tuple(e if i == 1 else -e for i, e in enumerate(before, 1))
                check.record(after == expected, f"α={alpha} j={j}")
    return check


def check_tau_shift(d: int) -> Check:
    check = Check("tau-shift")
    for a in range(2, d + 1):
        for alpha in enumerate_parity(a, Parity.EVEN):
            for j in range(1, a + 1):
                if j > 1:
                    sign = (-1) ** (alpha[j] + alpha[j - 1])
                else:
                    sign = (-1) ** (alpha[1] + alpha[a] + a)
                check.record(tau(alpha_shift(alpha, j)) == sign * tau(alpha), f"α={alpha} j={j}")
    return check


def check_h_clifford_commutation(context: SuiteContext) -> Check:
    """
    c_{i_j}·h_r^α(A) = h_r^{α^{(j)}}(A)·c_{i_j}, with the extra sign
    (-1)^{(a-1)(l-1)+r} for j = 1.
    """
    algebra = graded_algebra(context.config)
    l = algebra.l
    check = Check("h-clifford-commutation")
    for A in ordered_sets(algebra.d):
        a = len(A)
        for alpha in enumerate_parity(a, Parity.EVEN):
            for r in range(l):
                h = h_poly(algebra, A, r, alpha)
                for j in range(1, a + 1):
                    c = algebra.c(A[j])
                    shifted = h_poly(algebra, A, r, alpha_shift(alpha, j))
                    sign = (-1) ** ((a - 1) * (l - 1) + r) if j == 1 else 1
                    check.record(c * h == (shifted * c).scale(sign), f"A={A} α={alpha} r={r} j={j}")
    return check


def check_h_x_commutation(context: SuiteContext) -> Check:
    """
    x_{i_j}·h_r^α(A) = (-1)^{α_j} h_r^α(A)·x_{σ_A(i_j)}.
    """
    algebra = graded_algebra(context.config)
    check = Check("h-x-commutation")
    for A in ordered_sets(algebra.d):
        a = len(A)
        for alpha in enumerate_parity(a, Parity.EVEN):
            for r in range(algebra.l):
                h = h_poly(algebra, A, r, alpha)
                for j in range(1, a + 1):
                    image = A[j % a + 1]
                    left = algebra.x(A[j]) * h
                    right = (h * algebra.x(image)).scale((-1) ** alpha[j])
                    check.record(left == right, f"A={A} α={alpha} r={r} j={j}")
    return check


def run(context: SuiteContext) -> List[Check]:
    d = context.config.d
    return [
        check_epsilon_parity(d),
        check_clifford_epsilon(context),
        check_epsilon_shift(d),
        check_tau_shift(d),
        check_h_clifford_commutation(context),
        check_h_x_commutation(context),
    ]
