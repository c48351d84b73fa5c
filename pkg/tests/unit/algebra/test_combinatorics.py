import pytest
from hamcrest import assert_that, contains_exactly, equal_to, has_length

from sergeev_tools.algebra.combinatorics import (
    Multipartition,
    Parity,
    ParityVector,
    Partition,
    alpha_shift,
    enumerate_m,
    enumerate_mev,
    enumerate_p,
    enumerate_parity,
    enumerate_pev,
    epsilon_signs,
    phi,
    phi_inv,
    redundancy,
    require_pev,
    tau,
)
from sergeev_tools.algebra.error import ParameterError


@pytest.mark.parametrize(
    "bits,expected",
    [
        pytest.param((0, 0), 1, id="zero"),
        pytest.param((1, 1), 1, id="(1,1)"),
        pytest.param((1, 0, 1), -1, id="(1,0,1)"),
        pytest.param((0, 1, 1), 1, id="(0,1,1)"),
        pytest.param((1, 0, 1, 0), -1, id="(1,0,1,0)"),
        pytest.param((1, 1, 1, 1), 1, id="(1,1,1,1)"),
    ],
)
def test_tau(bits, expected):
    assert_that(tau(ParityVector(bits)), equal_to(expected))


def test_tau_rejects_odd_vectors():
    with pytest.raises(ParameterError):
        tau(ParityVector.of(1, 0, 0))


@pytest.mark.parametrize(
    "bits,expected",
    [
        pytest.param((0, 0, 0), (1, 1, 1), id="zero"),
        pytest.param((1, 0, 1, 0), (1, -1, -1, 1), id="(1,0,1,0)"),
        pytest.param((1, 1, 1), (1, -1, 1), id="ones"),
    ],
)
def test_epsilon_signs(bits, expected):
    assert_that(epsilon_signs(ParityVector(bits)), equal_to(expected))


@pytest.mark.parametrize(
    "bits,j,expected",
    [
        pytest.param((0, 0, 0), 1, (1, 0, 1), id="first entry wraps"),
        pytest.param((0, 0, 0), 2, (1, 1, 0), id="middle"),
        pytest.param((1, 1, 0), 2, (0, 0, 0), id="cancels"),
    ],
)
def test_alpha_shift(bits, j, expected):
    assert_that(alpha_shift(ParityVector(bits), j), equal_to(ParityVector(expected)))


def test_parity_vector_is_one_based():
    alpha = ParityVector.of(1, 0, 1)
    assert_that([alpha[1], alpha[2], alpha[3]], equal_to([1, 0, 1]))
    assert_that(alpha.support((4, 2, 7)), equal_to([4, 7]))
    with pytest.raises(ParameterError):
        alpha[0]  # pylint: disable=pointless-statement


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_enumerate_parity(a):
    even = enumerate_parity(a, Parity.EVEN)
    odd = enumerate_parity(a, Parity.ODD)
    assert_that(even, has_length(2 ** (a - 1)))
    assert_that(odd, has_length(2 ** (a - 1)))
    assert_that(all(alpha.is_even for alpha in even), equal_to(True))
    assert_that(any(alpha.is_even for alpha in odd), equal_to(False))


def test_partition_validation():
    assert_that(Partition.of(1, 3, 2).parts, equal_to((3, 2, 1)))
    assert_that(Partition.from_parts([0, 2, 0, 4]).parts, equal_to((4, 2)))
    with pytest.raises(ParameterError):
        Partition((1, 2))
    with pytest.raises(ParameterError):
        Partition((2, 0))


def test_phi_example():
    lam = Multipartition.of([2], [1], [])
    assert_that(phi(lam), equal_to(Partition.of(3, 1)))
    assert_that(phi_inv(Partition.of(3, 1), 3), equal_to(lam))


def test_phi_inv_pads_first_component():
    lam = phi_inv(Partition.of(4), 3, d=4)
    assert_that(lam, equal_to(Multipartition.of([1, 1], [2], [])))
    assert_that(redundancy(lam), equal_to(2))
    with pytest.raises(ParameterError):
        phi_inv(Partition.of(4, 4), 3, d=2)


@pytest.mark.parametrize(
    "d,l",
    [
        pytest.param(2, 1, id="d=2,l=1"),
        pytest.param(3, 2, id="d=3,l=2"),
        pytest.param(3, 3, id="d=3,l=3"),
        pytest.param(4, 2, id="d=4,l=2"),
    ],
)
def test_phi_is_a_bijection(d, l):
    images = sorted(phi(lam) for lam in enumerate_m(d, l))
    assert_that(images, equal_to(sorted(enumerate_p(d, l))))
    for mu in enumerate_p(d, l):
        assert_that(phi(phi_inv(mu, l, d)), equal_to(mu))


@pytest.mark.parametrize(
    "d,l,count",
    [
        pytest.param(1, 3, 2, id="d=1,l=3"),
        pytest.param(2, 1, 1, id="d=2,l=1"),
        pytest.param(3, 1, 2, id="d=3,l=1"),
        pytest.param(2, 3, 4, id="d=2,l=3"),
        pytest.param(3, 3, 8, id="d=3,l=3"),
    ],
)
def test_even_index_sets_for_odd_level(d, l, count):
    assert_that(enumerate_pev(d, l), has_length(count))
    assert_that(enumerate_mev(d, l), has_length(count))
    assert_that(
        sorted(phi(lam) for lam in enumerate_mev(d, l)),
        equal_to(sorted(enumerate_pev(d, l))),
    )


def test_enumerate_pev_for_two_strands():
    assert_that(
        enumerate_pev(2, 3),
        contains_exactly(Partition(), Partition.of(2), Partition.of(4), Partition.of(2, 2)),
    )


def test_require_pev():
    assert_that(require_pev(Partition.of(2), 3, 3), equal_to((2, 0, 0)))
    with pytest.raises(ParameterError):
        require_pev(Partition.of(1), 3, 3)
    with pytest.raises(ParameterError):
        require_pev(Partition.of(2, 2, 2), 2, 3)
