import pytest
from hamcrest import assert_that, equal_to
from hypothesis import given, settings

from sergeev_tools.algebra.combinatorics import Partition
from sergeev_tools.algebra.cycles import jucys_murphy
from sergeev_tools.algebra.element import AlgebraConfig
from sergeev_tools.algebra.error import FiltrationError
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.sergeev import (
    elementary_symmetric_squares,
    filtration_degree,
    graded_image,
    p_element,
    sergeev_algebra,
    sergeev_multiply,
    xl_reduction_table,
)
from tests.unit.algebra.strategies import monomials

CONFIG = AlgebraConfig.create(2, 2)
SERGEEV = sergeev_algebra(CONFIG)


def test_sergeev_relations():
    x, s, one = SERGEEV.x, SERGEEV.s, SERGEEV.one()
    cc = SERGEEV.clifford_product([1, 2])
    assert_that(s(1) * x(1), equal_to(x(2) * s(1) - one - cc))
    assert_that(s(1) * x(2), equal_to(x(1) * s(1) + one - cc))
    assert_that(x(1) * x(2), equal_to(x(2) * x(1)))
    assert_that(x(1) * SERGEEV.c(1), equal_to(-(SERGEEV.c(1) * x(1))))


def test_first_generator_satisfies_f():
    config = AlgebraConfig.create(2, 3, ["1", "0", "1", "0"])
    algebra = sergeev_algebra(config)
    assert_that(algebra.x(1, 3), equal_to(-algebra.x(1)))
    assert_that(xl_reduction_table(config)[0], equal_to(-algebra.x(1)))


def test_level_one():
    algebra = sergeev_algebra(AlgebraConfig.create(2, 1))
    s = algebra.s(1)
    assert_that(algebra.x(1).is_zero(), equal_to(True))
    assert_that(algebra.x(2), equal_to(s - s * algebra.clifford_product([1, 2])))


@pytest.mark.parametrize(
    "d,l",
    [
        pytest.param(2, 2, id="d=2,l=2"),
        pytest.param(2, 3, id="d=2,l=3"),
        pytest.param(3, 2, id="d=3,l=2"),
    ],
)
def test_reduction_table(d, l):
    algebra = sergeev_algebra(AlgebraConfig.create(d, l))
    table = algebra.reduction_table()
    for i in range(1, d + 1):
        assert_that(sergeev_multiply(algebra.x(i, l - 1), algebra.x(i)), equal_to(table[i - 1]))


def test_symmetric_polynomial():
    config = AlgebraConfig.create(2, 3)
    algebra = sergeev_algebra(config)
    assert_that(
        p_element(Partition.of(2), config),
        equal_to(algebra.polynomial([2, 0]) + algebra.polynomial([0, 2])),
    )


@pytest.mark.parametrize(
    "d,l",
    [
        pytest.param(2, 2, id="d=2,l=2"),
        pytest.param(2, 3, id="d=2,l=3"),
    ],
)
def test_squares_are_central(d, l):
    config = AlgebraConfig.create(d, l)
    generators = sergeev_algebra(config).generators()
    for k in range(1, d + 1):
        e = elementary_symmetric_squares(config, k)
        assert_that(all(e.commutes_with(g) for g in generators), equal_to(True))


def test_graded_image_requires_filtration_degree():
    z = SERGEEV.x(1) * SERGEEV.x(2)
    assert_that(filtration_degree(z), equal_to(2))
    assert_that(graded_image(z, 3).is_zero(), equal_to(True))
    with pytest.raises(FiltrationError):
        graded_image(z, 1)


def test_power_images_pick_up_transposition_squares_at_odd_level():
    config = AlgebraConfig.create(3, 3)
    sergeev, graded = sergeev_algebra(config), graded_algebra(config)
    x = graded.x
    excess = graded_image(sergeev.x(3, 6), 4) - jucys_murphy(graded, 3, 6)
    assert_that(excess, equal_to((x(1, 2) * x(3, 2) + x(2, 2) * x(3, 2)).scale(6)))
    assert_that(graded_image(sergeev.x(3, 4), 3), equal_to(jucys_murphy(graded, 3, 4)))

    config = AlgebraConfig.create(2, 1)
    sergeev, graded = sergeev_algebra(config), graded_algebra(config)
    assert_that(jucys_murphy(graded, 2, 2).is_zero(), equal_to(True))
    assert_that(graded_image(sergeev.x(2, 2), 0), equal_to(graded.one().scale(2)))


@settings(max_examples=100, deadline=None, derandomize=True)
@given(monomials(SERGEEV), monomials(SERGEEV))
def test_graded_image_of_product(u, v):
    graded = graded_algebra(CONFIG)
    product = SERGEEV.from_monomial(u) * SERGEEV.from_monomial(v)
    assert_that(
        graded_image(product, u.degree + v.degree),
        equal_to(graded.from_monomial(u) * graded.from_monomial(v)),
    )
