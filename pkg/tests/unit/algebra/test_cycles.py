import pytest
from hamcrest import assert_that, equal_to, has_length

from sergeev_tools.algebra.combinatorics import Multipartition, Partition
from sergeev_tools.algebra.cycles import (
    OrderedIndexSet,
    cxcycle,
    cycle_type,
    h_poly,
    is_cx,
    jucys_murphy,
    m_element,
    odd_skew_cycle,
    odd_skew_thetas,
    xcycle,
    z_element,
)
from sergeev_tools.algebra.element import AlgebraConfig
from sergeev_tools.algebra.error import NoSuchElementError, ParameterError
from sergeev_tools.algebra.graded import graded_algebra


def _graded(d, l):
    return graded_algebra(AlgebraConfig.create(d, l))


def test_ordered_index_set():
    A = OrderedIndexSet.of(3, 1, 2)
    assert_that([A[1], A[2], A[3]], equal_to([3, 1, 2]))
    assert_that(A.rotate(), equal_to(OrderedIndexSet.of(2, 3, 1)))
    assert_that(A.junction(OrderedIndexSet.of(2, 4)), equal_to(OrderedIndexSet.of(3, 1, 2, 4)))
    with pytest.raises(ParameterError):
        OrderedIndexSet.of(1, 1)
    with pytest.raises(ParameterError):
        A.junction(OrderedIndexSet.of(3, 4))


def test_transposition_cxcycle_at_level_two():
    algebra = _graded(2, 2)
    x, s, c = algebra.x, algebra.s, algebra.c
    expected = (x(1) + x(2)) * s(1) + (x(1) - x(2)) * s(1) * c(1) * c(2)
    assert_that(cxcycle(algebra, (1, 2), 0), equal_to(expected))


@pytest.mark.parametrize(
    "l,scale",
    [
        pytest.param(2, 0, id="l=2"),
        pytest.param(3, 6, id="l=3"),
        pytest.param(5, 10, id="l=5"),
    ],
)
def test_transposition_square(l, scale):
    algebra = _graded(2, l)
    transposition = cxcycle(algebra, (1, 2), 0)
    top = algebra.x(1, l - 1) * algebra.x(2, l - 1)
    assert_that(transposition * transposition, equal_to(top.scale(scale)))


@pytest.mark.parametrize(
    "l,vanishes",
    [
        pytest.param(2, True, id="l=2"),
        pytest.param(3, False, id="l=3"),
    ],
)
def test_crossed_four_point_product(l, vanishes):
    algebra = _graded(4, l)
    product = cxcycle(algebra, (1, 2, 3), 0) * cxcycle(algebra, (3, 2, 4), 0)
    assert_that(product.is_zero(), equal_to(vanishes))


def test_single_point_cycles_are_powers():
    algebra = _graded(2, 3)
    assert_that(cxcycle(algebra, (2,), 2), equal_to(algebra.x(2, 2)))
    assert_that(h_poly(algebra, (1,), 1, (0,)), equal_to(algebra.x(1)))


def test_xcycle_requires_even_parity_vector():
    algebra = _graded(2, 2)
    with pytest.raises(ParameterError):
        xcycle(algebra, (1, 2), 0, (1, 0))
    with pytest.raises(ParameterError):
        xcycle(algebra, (1, 2), 0, (1, 1, 0))
    with pytest.raises(ParameterError):
        xcycle(algebra, (1, 3), 0, (0, 0))


@pytest.mark.parametrize(
    "a,r,l,expected",
    [
        pytest.param(1, 0, 3, True, id="a=1,r=0"),
        pytest.param(1, 1, 3, False, id="a=1,r=1"),
        pytest.param(2, 0, 2, True, id="a=2,r=0,l=2"),
        pytest.param(2, 0, 3, False, id="a=2,r=0,l=3"),
        pytest.param(2, 1, 3, True, id="a=2,r=1,l=3"),
        pytest.param(3, 0, 3, True, id="a=3,r=0,l=3"),
    ],
)
def test_is_cx(a, r, l, expected):
    assert_that(is_cx(a, r, l), equal_to(expected))


@pytest.mark.parametrize(
    "d,l",
    [
        pytest.param(2, 2, id="d=2,l=2"),
        pytest.param(3, 3, id="d=3,l=3"),
    ],
)
def test_cxcycles_commute_with_clifford_generators(d, l):
    algebra = _graded(d, l)
    cs = [algebra.c(i) for i in range(1, d + 1)]
    for r in range(l):
        z = cxcycle(algebra, (1, 2), r)
        assert_that(all(z.commutes_with(c) for c in cs), equal_to(is_cx(2, r, l)))


def test_odd_skew_existence():
    with pytest.raises(NoSuchElementError):
        odd_skew_thetas(1, 3)
    with pytest.raises(NoSuchElementError):
        odd_skew_cycle(_graded(3, 3), (1, 2, 3))
    assert_that(odd_skew_thetas(2, 3), has_length(2))
    assert_that(odd_skew_thetas(1, 2), has_length(1))


def test_odd_skew_cycle_anticommutes_with_clifford_generators():
    algebra = _graded(2, 3)
    z = odd_skew_cycle(algebra, (1, 2))
    assert_that(z.is_zero(), equal_to(False))
    for i in (1, 2):
        assert_that(algebra.c(i) * z, equal_to(-(z * algebra.c(i))))
        assert_that(z.commutes_with(algebra.x(i)), equal_to(True))


def test_jucys_murphy_at_level_degree_vanishes_for_first_index():
    algebra = _graded(3, 3)
    assert_that(jucys_murphy(algebra, 1, 3).is_zero(), equal_to(True))
    assert_that(jucys_murphy(algebra, 2, 3), equal_to(cxcycle(algebra, (2, 1), 0)))


def test_m_element():
    algebra = _graded(2, 3)
    assert_that(
        m_element(algebra, Partition.of(2)),
        equal_to(algebra.x(1, 2) + algebra.x(2, 2)),
    )
    with pytest.raises(ParameterError):
        m_element(algebra, Partition.of(1))


def test_cycle_type():
    assert_that(
        cycle_type([((1, 2), 1)], 3, 3),
        equal_to(Multipartition.of([1], [2], [])),
    )
    with pytest.raises(ParameterError):
        cycle_type([((1, 2), 0), ((2, 3), 0)], 3, 3)


def test_z_element():
    algebra = _graded(2, 3)
    assert_that(z_element(algebra, Multipartition.of([1, 1], [], [])), equal_to(algebra.one()))
    assert_that(
        z_element(algebra, Multipartition.of([], [2], [])),
        equal_to(cxcycle(algebra, (1, 2), 1)),
    )
    with pytest.raises(ParameterError):
        z_element(algebra, Multipartition.of([2], [], []))
