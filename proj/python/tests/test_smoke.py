from fractions import Fraction

import pytest

import penney


def test_orbits():
    assert len(penney.orbit("S:3", "ABC")) == 6
    assert sorted(penney.orbit("Z:3", "BCA")) == ["ABC", "BCA", "CAB"]
    assert penney.orbit("T:2", "HH") == ["HH"]


def test_wait_and_cln():
    assert penney.wait_time("S:4", "aabc") == Fraction(35, 3)
    assert penney.wait_time("T:2", "HTHT") == 20
    assert penney.cln("S:2", "abab") == 15
    assert penney.correlation("S:3", "abc", "abc") == [1, 1, 2]


def test_odds():
    r = penney.odds("T:2", "HTHT", "THTT")
    assert r["alice_win_probability"] == Fraction(9, 14)
    assert r["genfunc_verified"]
    assert penney.odds("S:4", "aabc", "abbc")["bob_odds"] == Fraction(7, 5)


def test_graph_cycle():
    g = penney.beater_graph("S:4", 4)
    assert g["cycle"] == ["aabc", "abbc", "abcc", "abac", "abcb"]
    assert g["cycle_odds"] == [Fraction(7, 5), 2, Fraction(4, 3), Fraction(3, 2), Fraction(9, 5)]
    assert '"aabc" -> "abbc" [label="7:5"];' in g["dot"]


def test_generating_functions_match_brute_force():
    gf = penney.generating_functions("S:3", ["abc"])
    assert gf["avoiding"] == {"num": [1, 1, 2], "den": [1, -2, -1]}
    s = penney.series("S:3", ["abc"], 6)
    assert s["avoiding"] == [1, 3, 9, 21, 51, 123, 297]
    counts = penney.brute_counts("S:3", ["abc"], 6)
    assert [Fraction(c) for c in counts["avoiding"]] == s["avoiding"]


def test_signature_and_min_cln():
    assert penney.signature("Z:3", "abca") == "BBB"
    value, witnesses = penney.min_cln("S:3", 4)
    assert value == 29
    assert witnesses == ["aaab", "aaba", "aabc", "abaa", "abbb", "abcc"]


def test_simulation_is_reproducible():
    a = penney.simulate_game("T:2", "HTHT", "THTT", 20000, 5)
    b = penney.simulate_game("T:2", "HTHT", "THTT", 20000, 5)
    assert a == b
    assert abs(a["alice_frequency"] - 9 / 14) < 4 * a["alice_standard_error"]


def test_errors():
    with pytest.raises(penney.PenneyError) as info:
        penney.odds("T:2", "HH", "HH")
    assert info.value.kind == "NotReduced"
    with pytest.raises(ValueError):
        penney.wait_time("Q:4", "aa")
