import json

import pytest

import schurforge

DIAG_SWAP = {
    "presentation": {"generators": ["t1", "t2"], "relations": []},
    "field": "Q",
    "n": 2,
    "images": {"t1": [[1, 0], [0, 2]], "t2": [[0, 1], [1, 0]]},
}

QUATERNIONIC_PAIR = {
    "presentation": {"generators": ["t1", "t2"], "relations": []},
    "field": {"quadratic": -1},
    "n": 2,
    "images": {
        "t1": [[{"a": 0, "b": 1}, 0], [0, {"a": 0, "b": -1}]],
        "t2": [[0, 1], [-1, 0]],
    },
}


def test_schur_report():
    report = schurforge.run("schur", DIAG_SWAP)
    assert report["schema"] == schurforge.SCHEMA
    assert report["schur"] is True
    assert report["commutant_dim"] == 1


def test_origin_of_quaternionic_pair():
    report = schurforge.run("origin", QUATERNIONIC_PAIR, seed=5)
    assert report["origin"] is False
    assert report["class"] == {"a": "-1", "b": "-1"}
    assert report["seed"] == 5


def test_deterministic_output():
    first = schurforge.run("origin", QUATERNIONIC_PAIR, seed=2)
    second = schurforge.run("origin", json.dumps(QUATERNIONIC_PAIR), seed=2)
    assert first == second


def test_schema_error_has_pointer():
    bad = json.loads(json.dumps(DIAG_SWAP))
    bad["images"]["t1"][0][1] = "x"
    with pytest.raises(schurforge.SchurForgeError) as info:
        schurforge.run("schur", bad)
    assert info.value.exit_code == 2
    assert info.value.pointer == "/images/t1/0/1"


def test_budget_exit_code():
    with pytest.raises(schurforge.SchurForgeError) as info:
        schurforge.run("hilbert", {"a": "1000003", "b": "-1", "place": "inf"}, factor=10)
    assert info.value.exit_code == 3


def test_typed_helpers():
    assert schurforge.hilbert_symbol("-1", "-1", "inf") == -1
    assert schurforge.hilbert_symbol("2", "3", "3") == -1
    assert schurforge.is_split("2", "7")
    assert not schurforge.is_split("-1", "-1")
    assert schurforge.ramified_places("-1", "-1") == ["inf", "2"]
    assert schurforge.reduced_norm("-1", "-1", ["1", "1", "1", "1"]) == "4"
    assert schurforge.quadratic_origin_demo("3")
    assert not schurforge.quadratic_origin_demo("1")
    assert schurforge.quadratic_origin_demo("5/2", "rational-square")
    with pytest.raises(ValueError, match="DegenerateDiscriminant"):
        schurforge.quadratic_origin_demo("2")
    assert "origin" in schurforge.commands()
