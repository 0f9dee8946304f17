"""Smoke tests for the python bindings."""

import pytest

import intamp

F94 = {
    "d": -1,
    "cm": True,
    "matrix": [
        [{"a": "1", "b": "0"}, {"a": "-5", "b": "0"}],
        [{"a": "1", "b": "0"}, {"a": "1", "b": "0"}],
    ],
}
G94 = {
    "d": -1,
    "cm": True,
    "matrix": [
        [{"a": "11", "b": "0"}, {"a": "-105", "b": "0"}],
        [{"a": "1", "b": "0"}, {"a": "-9", "b": "0"}],
    ],
}
H94 = {
    "d": -1,
    "cm": True,
    "matrix": [
        [{"a": "6", "b": "0"}, {"a": "-60", "b": "0"}],
        [{"a": "12", "b": "0"}, {"a": "-114", "b": "0"}],
    ],
}


def test_classify_polarized():
    rep = intamp.classify(F94)
    assert rep["int_amplified"] is True
    assert rep["polarized_profile"] == "Yes"
    assert rep["q_sq"] == "36"
    assert rep["degree"] == "36"


def test_classify_composition_fails_int_amplified():
    rep = intamp.classify(H94)
    assert rep["int_amplified"] is False
    assert rep["amplified_sufficient"] == "Yes"


def test_build_ns_shape():
    act = intamp.build_ns(F94)
    assert act["mat"]["rows"] == 4
    assert act["degree"] == "36"


def test_compose_frozen_values():
    rep = intamp.compose(F94, G94)
    assert rep["i_norm_bound"] == 5
    assert rep["passing_below_bound"] == [0, 3, 4]


def test_circle_profile_and_same_modulus():
    assert intamp.circle_profile(["1", "0", "1"], "1") == (0, 2, 0)
    assert intamp.circle_profile(["36", "108", "1"], "1") == (1, 0, 1)
    kind, q_sq = intamp.same_modulus(["1296", "-144", "-24", "-4", "1"])
    assert kind == "AllEqual"
    assert q_sq == "36"


def test_root_balls():
    balls = intamp.root_balls(["1", "0", "1"], 64)
    assert sorted(round(im) for _, im, _, _ in balls) == [-1, 1]
    assert all(mult == 1 for *_, mult in balls)


def test_cone_membership():
    cone = {"dim": 2, "generators": [["1", "0"], ["0", "1"]]}
    assert intamp.cone_contains(cone, [2, 3])["member"] is True
    res = intamp.cone_contains(cone, [-1, 0])
    assert res["member"] is False
    assert "separator" in res


def test_orbit_witness():
    phi = {"rows": 2, "cols": 2, "entries": ["2", "0", "0", "3"]}
    rep = intamp.orbit_witness(phi, [1, 1], 8)
    assert rep["least_m"] == 2


def test_examples_all_pass():
    for case in intamp.run_examples():
        assert case["all_pass"] is True


def test_input_errors():
    with pytest.raises(ValueError):
        intamp.classify({"d": -4, "cm": True, "matrix": [[{"a": "1", "b": "0"}]]})
    with pytest.raises(ArithmeticError):
        intamp.classify({"rows": 2, "cols": 2, "entries": ["1", "2", "2", "4"]})
