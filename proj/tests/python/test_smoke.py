import pytest

import sleib


def test_verify():
    r = sleib.verify("L(1,0,3)")
    assert r["dim"] == 5
    assert r["leibniz"] is True
    assert r["filiform"] is True
    assert r["lower_central"] == [5, 3, 2, 1, 0]


def test_transform_matches_closed_form():
    moved = sleib.transform("L(1,0,3)", ("1", "0", "2"))
    assert moved == "L(2,0,12)"
    assert sleib.closed_transform("L(1,0,3)", ("1", "0", "2")) == moved


def test_exact_rationals_survive_the_boundary():
    moved = sleib.transform("L(1,2,3,4,5)", ("2", "1", "3"))
    assert moved == "L(3/4,3/8,-9/64,3/128,45/64)"


def test_classify_and_canonical():
    r = sleib.classify("L(2,0,12)")
    assert r["subset"] == "U1"
    assert r["signature"] == ["3"]
    assert sleib.canonical("L(2,0,12)") == "L(1,0,3)"


def test_uncovered_gap_point():
    r = sleib.classify("L(1,0,2)")
    assert r["covered"] is False
    assert r["subset"] == "Uncovered"


def test_no_invariant_stratum_is_refused():
    r = sleib.classify("L(0,0,0,1,0,1)")
    assert r["errata"] == "dim8-U13-U14-no-invariant"
    with pytest.raises(sleib.NoRationalInverseError):
        sleib.canonical("L(0,0,0,1,0,1)")


def test_iso_and_witness():
    assert sleib.iso("L(1,0,3)", "L(2,0,12)") == "Isomorphic"
    assert sleib.witness("L(1,0,3)", "L(2,0,12)") == ("1", "0", "2")
    # documented repeated classes: listed representatives of two subsets
    assert sleib.iso("L(0,0,1,0,1)", "L(0,0,1,1,1)") == "Isomorphic"


def test_counts():
    for dim, expected in [(5, 5), (6, 9), (7, 15), (8, 23)]:
        c = sleib.class_count(dim)
        assert c["enumerated"] == expected
        assert c["match"] is True
    assert sleib.class_count(12)["formula"] == 12 * 12 - 7 * 12 + 15
    assert len(sleib.enumerate_classes(7)) == 15


def test_random_point_is_deterministic():
    a = sleib.random_point(7, subset="U3", seed=9)
    assert a == sleib.random_point(7, subset="U3", seed=9)
    assert sleib.classify(a)["subset"] == "U3"
