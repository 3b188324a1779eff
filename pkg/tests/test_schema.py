from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from powercmp import schema
from powercmp.compare import ComparisonVerdict
from powercmp.errors import ValidationError
from powercmp.game import Game, make_game
from powercmp.indices import Estimate, IndexValue
from powercmp.instances import CountValue, SubsetSumInstance, X3CInstance

from conftest import games, x3c_instances


def test_game_json():
    g = make_game([8, 7, 2], 9)
    assert schema.game_to_json(g) == {"weights": [8, 7, 2], "quota": 9}
    big = Game((2**60, 1), 2**53)
    doc = schema.game_to_json(big)
    assert doc == {"weights": [str(2**60), 1], "quota": str(2**53)}
    assert schema.game_from_json(doc) == big
    assert schema.game_from_json({"weights": ["8", 7], "quota": "9"}) == make_game([8, 7], 9)


@pytest.mark.parametrize("doc", [
    {"weights": [1]},
    {"weights": 3, "quota": 1},
    {"weights": [1.5], "quota": 1},
    {"weights": [True], "quota": 1},
    {"weights": ["1e3"], "quota": 1},
    [1, 2],
])
def test_game_json_rejects(doc):
    with pytest.raises(ValidationError):
        schema.game_from_json(doc)


def test_index_value_json():
    doc = schema.index_value_to_json(IndexValue(2, 4))
    assert doc == {"raw": "2", "scale": "4", "normalized": {"num": "1", "den": "2"}}
    assert schema.index_value_from_json(doc) == IndexValue(2, 4)
    doc["normalized"]["num"] = "3"
    with pytest.raises(ValidationError):
        schema.index_value_from_json(doc)


def test_verdict_and_count_json():
    v = ComparisonVerdict(IndexValue(1, 2), IndexValue(1, 2), False)
    doc = schema.verdict_to_json(v)
    assert set(doc) == {"left", "right", "strictly_greater"}
    assert schema.verdict_from_json(doc) == v
    assert schema.count_to_json(CountValue(10**40)) == {"value": str(10**40)}
    assert schema.count_from_json({"value": "12"}) == CountValue(12)


def test_estimate_json():
    e = Estimate(Fraction(1, 3), Fraction(5, 1000), 300, 2**64 - 1, 0.05)
    assert schema.estimate_from_json(schema.estimate_to_json(e)) == e


def test_instance_json():
    x = X3CInstance.from_sets(6, [[0, 1, 2], [3, 4, 5]])
    assert schema.x3c_to_json(x) == {"universe": 6, "sets": [[0, 1, 2], [3, 4, 5]]}
    inst = SubsetSumInstance((21, 4**40), 1365)
    doc = schema.subsetsum_to_json(inst)
    assert doc == {"values": ["21", str(4**40)], "target": "1365"}
    assert schema.subsetsum_from_json(doc) == inst
    with pytest.raises(ValidationError):
        schema.x3c_from_json({"universe": 3, "sets": [[0, 1, 5]]})


@given(games(max_weight=2**70))
def test_game_round_trip(g):
    assert schema.game_from_json(schema.game_to_json(g)) == g


@given(x3c_instances())
def test_x3c_round_trip(x):
    assert schema.x3c_from_json(schema.x3c_to_json(x)) == x


@given(st.lists(st.integers(0, 2**80), max_size=5), st.integers(0, 2**80))
def test_subsetsum_round_trip(values, target):
    inst = SubsetSumInstance(tuple(values), target)
    assert schema.subsetsum_from_json(schema.subsetsum_to_json(inst)) == inst


def test_detect():
    assert schema.detect({"weights": [], "quota": 0}) == "game"
    assert schema.detect({"universe": 0, "sets": []}) == "x3c"
    assert schema.detect({"values": [], "target": 0}) == "subsetsum"
    with pytest.raises(ValidationError):
        schema.detect({"foo": 1})
