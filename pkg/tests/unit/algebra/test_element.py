from fractions import Fraction

import pytest
from hamcrest import assert_that, equal_to, has_length
from hypothesis import given, settings

from sergeev_tools.algebra.element import AlgebraConfig, Superparity
from sergeev_tools.algebra.error import AlgebraMismatchError, ConfigError, ParameterError
from sergeev_tools.algebra.graded import conjugate, gr_multiply, graded_algebra
from sergeev_tools.algebra.sergeev import sergeev_algebra
from tests.unit.algebra.strategies import elements

GRADED = graded_algebra(AlgebraConfig.create(2, 2))


@pytest.mark.parametrize(
    "d,l,f,message",
    [
        pytest.param(0, 2, None, "must be positive", id="no strands"),
        pytest.param(2, 0, None, "must be positive", id="zero level"),
        pytest.param(2, 3, ["1", "0"], "coefficients", id="short coefficient list"),
        pytest.param(2, 2, ["2", "0", "0"], "monic", id="not monic"),
        pytest.param(2, 3, ["1", "1", "0", "0"], "either even or odd degree", id="mixed parity"),
    ],
)
def test_config_validation(d, l, f, message):
    with pytest.raises(ConfigError, match=message):
        AlgebraConfig.create(d, l, f)


def test_config_accepts_rational_coefficients():
    config = AlgebraConfig.create(2, 3, ["1", "0", "-1/2", "0"])
    assert_that(config.lower_terms(), equal_to({1: Fraction(-1, 2)}))
    with pytest.raises(ConfigError):
        AlgebraConfig.create(2, 3, ["1", "0", "-1/2", "0"], scalar_mode="integer")


@pytest.mark.parametrize(
    "d,l,dimension",
    [
        pytest.param(1, 3, 6, id="d=1,l=3"),
        pytest.param(2, 1, 8, id="d=2,l=1"),
        pytest.param(2, 2, 32, id="d=2,l=2"),
        pytest.param(2, 3, 72, id="d=2,l=3"),
        pytest.param(3, 2, 384, id="d=3,l=2"),
    ],
)
def test_basis_size(d, l, dimension):
    config = AlgebraConfig.create(d, l)
    assert_that(config.dimension, equal_to(dimension))
    assert_that(graded_algebra(config).basis(), has_length(dimension))
    assert_that(sergeev_algebra(config).basis(), has_length(dimension))


def test_graded_relations():
    x, s, c = GRADED.x, GRADED.s, GRADED.c
    assert_that(c(1) * c(1), equal_to(GRADED.one()))
    assert_that(c(1) * c(2), equal_to(-(c(2) * c(1))))
    assert_that(x(1) * c(1), equal_to(-(c(1) * x(1))))
    assert_that(s(1) * x(1), equal_to(x(2) * s(1)))
    assert_that(s(1) * c(1), equal_to(c(2) * s(1)))
    assert_that((x(1) * x(1)).is_zero(), equal_to(True))


def test_superparity():
    assert_that(GRADED.c(1).superparity(), equal_to(Superparity.ODD))
    assert_that((GRADED.x(1) * GRADED.s(1)).superparity(), equal_to(Superparity.EVEN))
    assert_that((GRADED.one() + GRADED.c(2)).superparity(), equal_to(Superparity.MIXED))


def test_conjugation():
    assert_that(GRADED.conjugate(GRADED.x(1), [2, 1]), equal_to(GRADED.x(2)))
    assert_that(GRADED.conjugate(GRADED.c(2), [2, 1]), equal_to(GRADED.c(1)))

    z = GRADED.x(1) * GRADED.c(2) + GRADED.s(1)
    swap = GRADED.perm_element([2, 1])
    assert_that(conjugate(z, [2, 1]), equal_to(gr_multiply(gr_multiply(swap, z), swap)))
    assert_that(conjugate(z, [1, 2]), equal_to(z))


def test_x_degree_split():
    x, s = GRADED.x, GRADED.s
    z = x(1) * x(2) - x(2) * s(1) + s(1)
    assert_that(
        z.x_degree_split(),
        equal_to({0: s(1), 1: -(x(2) * s(1)), 2: x(1) * x(2)}),
    )
    assert_that(GRADED.zero().x_degree_split(), equal_to({}))


def test_index_validation():
    with pytest.raises(ParameterError):
        GRADED.x(3)
    with pytest.raises(ParameterError):
        GRADED.s(2)


def test_mixing_algebras_is_rejected():
    sergeev = sergeev_algebra(GRADED.config)
    with pytest.raises(AlgebraMismatchError):
        GRADED.x(1) + sergeev.x(1)  # pylint: disable=expression-not-assigned


@settings(max_examples=50, deadline=None, derandomize=True)
@given(elements(GRADED), elements(GRADED), elements(GRADED))
def test_graded_associativity(u, v, w):
    assert_that((u * v) * w, equal_to(u * (v * w)))


@settings(max_examples=50, deadline=None, derandomize=True)
@given(elements(GRADED), elements(GRADED))
def test_graded_distributivity(u, v):
    w = GRADED.x(1) + GRADED.s(1) * GRADED.c(2)
    assert_that((u + v) * w, equal_to(u * w + v * w))
