import pytest
from hamcrest import assert_that, equal_to, has_entries, has_length

from sergeev_tools.algebra import linalg
from sergeev_tools.algebra.center import (
    CenterParity,
    CommutatorSystem,
    center_basis,
    center_report,
    centralizer,
    graded_center_vs_mbasis,
    graded_center_vs_zbasis,
    m_to_z_triangularity,
    verify_main_theorem,
)
from sergeev_tools.algebra.combinatorics import enumerate_pev, phi_inv
from sergeev_tools.algebra.element import AlgebraConfig
from sergeev_tools.algebra.error import DimensionGuardError, ParameterError
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.linalg import PivotRule
from sergeev_tools.algebra.sergeev import sergeev_algebra


@pytest.mark.parametrize(
    "d,l,f,rank",
    [
        pytest.param(1, 3, None, 2, id="d=1,l=3"),
        pytest.param(2, 1, None, 1, id="d=2,l=1"),
        pytest.param(2, 3, None, 4, id="d=2,l=3"),
        pytest.param(2, 3, ["1", "0", "1", "0"], 4, id="d=2,l=3,f=x^3+x"),
    ],
)
def test_main_theorem(d, l, f, rank):
    report = verify_main_theorem(AlgebraConfig.create(d, l, f))
    assert_that(report["pass"], equal_to(True))
    assert_that(report["ranks"], has_entries(even_center=rank, p_elements=rank))
    assert_that(report["schema"], equal_to(1))


def test_main_theorem_requires_odd_level():
    with pytest.raises(ParameterError):
        verify_main_theorem(AlgebraConfig.create(2, 2))


@pytest.mark.parametrize("pivot_rule", list(PivotRule))
def test_graded_center_rank(pivot_rule):
    algebra = graded_algebra(AlgebraConfig.create(2, 3))
    assert_that(center_basis(algebra, CenterParity.EVEN, pivot_rule=pivot_rule), has_length(4))


def test_sergeev_center_rank():
    algebra = sergeev_algebra(AlgebraConfig.create(1, 3))
    assert_that(center_basis(algebra, CenterParity.EVEN), has_length(2))


@pytest.mark.parametrize(
    "d,l",
    [
        pytest.param(2, 1, id="d=2,l=1"),
        pytest.param(3, 1, id="d=3,l=1"),
        pytest.param(2, 3, id="d=2,l=3"),
    ],
)
def test_graded_center_bases_for_odd_level(d, l):
    config = AlgebraConfig.create(d, l)
    assert_that(graded_center_vs_zbasis(config)["pass"], equal_to(True))
    assert_that(graded_center_vs_mbasis(config)["pass"], equal_to(True))
    assert_that(m_to_z_triangularity(config)["checks"], equal_to({"triangular": True}))


def test_m_elements_expand_in_z_basis():
    report = m_to_z_triangularity(AlgebraConfig.create(2, 3))
    assert_that(report["expansions"]["()"], equal_to({"1,1//": "1"}))
    for mu in enumerate_pev(2, 3):
        assert_that(report["expansions"][str(mu)], has_entries({str(phi_inv(mu, 3, 2)): "1"}))


@pytest.mark.parametrize(
    "d,l",
    [
        pytest.param(2, 2, id="d=2,l=2"),
        pytest.param(3, 2, id="d=3,l=2"),
    ],
)
def test_graded_center_is_strictly_larger_for_even_level(d, l):
    report = graded_center_vs_zbasis(AlgebraConfig.create(d, l))
    assert_that(report["pass"], equal_to(True))
    assert_that(report["checks"], equal_to({"contained": True, "strict": True}))


def test_dimension_guard():
    config = AlgebraConfig.create(3, 3)
    with pytest.raises(DimensionGuardError):
        center_basis(graded_algebra(config), guard=100)
    with pytest.raises(DimensionGuardError):
        verify_main_theorem(config, guard=100)


def test_center_report():
    config = AlgebraConfig.create(2, 3)
    report = center_report(graded_algebra(config), CenterParity.EVEN)
    assert_that(report["rank"], equal_to(4))
    assert_that(
        report["comparisons"]["z_elements"],
        equal_to({"rank": 4, "contained": True, "span_equal": True, "strict": False}),
    )
    assert_that(report["comparisons"]["m_elements"]["span_equal"], equal_to(True))

    sergeev = center_report(sergeev_algebra(config), CenterParity.EVEN)
    assert_that(sergeev["comparisons"]["p_elements"]["span_equal"], equal_to(True))


def test_centralizer():
    algebra = graded_algebra(AlgebraConfig.create(2, 2))
    x1, x2 = algebra.x(1), algebra.x(2)
    kernel = centralizer([x1, x2, algebra.s(1)], [algebra.s(1)])
    assert_that(kernel, has_length(2))
    assert_that(all(z.commutes_with(algebra.s(1)) for z in kernel), equal_to(True))


def test_commutator_system_kernel():
    system = CommutatorSystem.build(graded_algebra(AlgebraConfig.create(2, 3)))
    kernel = system.kernel()
    assert_that(kernel, has_length(4))
    for z in kernel:
        assert_that(any(linalg.apply(system.rows.values(), z.terms)), equal_to(False))
