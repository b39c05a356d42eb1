from fractions import Fraction

import pytest

import waringlab


def test_rank_profiles():
    p = waringlab.rank_profile("4:0,1,0,0,0")
    assert (p["border_rank"], p["rank"]) == (2, 4)
    assert waringlab.rank_profile("2:1,0,1")["rank"] == 2
    cubes = waringlab.rank_profile("3:1,0,0,1")
    assert (cubes["border_rank"], cubes["rank"]) == (2, 2)


def test_bad_input_raises():
    with pytest.raises(ValueError):
        waringlab.rank_profile("4:0,1")
    with pytest.raises(waringlab.PreconditionError):
        waringlab.run_suite("nope")


def test_non_uniqueness_set_is_a_point():
    w = waringlab.non_uniqueness_set("4:0,1,0,0,0", t=4, seed=7)
    assert w["certified_point"]
    assert w["subspace"]["dim"] == 0
    assert [waringlab.to_fraction(x) for x in w["subspace"]["basis"][0]] == [0, 1, 0, 0, 0]


def test_points_and_configurations():
    line = [[1, t, 0] for t in range(8)]
    extra = [[3, 7, 1], [-2, 5, 3], [4, -1, 7], [5, 9, -2], [7, 2, 11]]
    rep = waringlab.detect_configuration(line + extra, 6)
    assert rep["h1"] == 1
    assert rep["witness"]["kind"] == "line"
    assert waringlab.h_values([[1, 2, 3], [Fraction(1, 2), 0, 1]], 2)["h1"] == 0


def test_mixed_decomposition():
    out = waringlab.mixed_decomposition(2, 8, 3, 11, seed=3)
    assert out["verification"]["pass"]
    assert out["verification"]["folded"]["dim"] == 11 - 8 - 2 + 3


def test_span_pair_and_suite():
    sp = waringlab.span_pair("rnc", 4, [1, 2, 3], [-1, -2, Fraction(1, 2)])
    assert sp["rnc_rank"] == 3
    assert sp["s_irredundant"] and sp["a_irredundant"]
    assert "i1" in waringlab.suite_ids()
    assert waringlab.run_suite("i1", seed=7)["pass"]
