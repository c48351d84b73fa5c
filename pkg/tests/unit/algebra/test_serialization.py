import json

import pytest
from hamcrest import assert_that, equal_to

from sergeev_tools.algebra.element import AlgebraConfig
from sergeev_tools.algebra.error import SerializationError
from sergeev_tools.algebra.graded import graded_algebra
from sergeev_tools.algebra.serialization import (
    decode_element,
    dumps_element,
    encode_element,
    loads_element,
)
from sergeev_tools.algebra.sergeev import sergeev_algebra

CONFIG = AlgebraConfig.create(2, 2)
GRADED = graded_algebra(CONFIG)


def test_encode_element():
    z = GRADED.x(2) * GRADED.s(1) * GRADED.c(1) - GRADED.one().scale(2)
    assert_that(
        encode_element(z),
        equal_to(
            {
                "algebra": "graded",
                "terms": [
                    {"coeff": "-2", "e": [0, 0], "perm": [1, 2], "c": []},
                    {"coeff": "1", "e": [0, 1], "perm": [2, 1], "c": [1]},
                ],
            }
        ),
    )


def test_equal_elements_encode_identically():
    u = GRADED.x(1) + GRADED.x(2)
    v = GRADED.x(2) + GRADED.x(1)
    assert_that(dumps_element(u), equal_to(dumps_element(v)))
    assert_that(loads_element(dumps_element(u), GRADED), equal_to(u))


@pytest.mark.parametrize(
    "data",
    [
        pytest.param([], id="not an object"),
        pytest.param({"algebra": "other", "terms": []}, id="unknown algebra"),
        pytest.param({"algebra": "sergeev", "terms": []}, id="wrong algebra"),
        pytest.param(
            {"algebra": "graded", "terms": [{"coeff": "1", "e": [0, 0], "perm": [1, 2]}]},
            id="missing clifford part",
        ),
        pytest.param(
            {"algebra": "graded", "terms": [{"coeff": "1", "e": [0, 0], "perm": [1, 1], "c": []}]},
            id="not a permutation",
        ),
        pytest.param(
            {"algebra": "graded", "terms": [{"coeff": "1", "e": [0, 0], "perm": [1, 2], "c": [3]}]},
            id="clifford index out of range",
        ),
    ],
)
def test_decode_errors(data):
    with pytest.raises(SerializationError):
        decode_element(data, GRADED)


def test_loads_rejects_invalid_json():
    with pytest.raises(SerializationError):
        loads_element("{", GRADED)


def test_sergeev_elements_are_tagged():
    z = sergeev_algebra(CONFIG).x(2)
    assert_that(json.loads(dumps_element(z))["algebra"], equal_to("sergeev"))
