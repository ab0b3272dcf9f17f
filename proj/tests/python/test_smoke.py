import pytest

import mdsconv


def test_field_arithmetic():
    f = mdsconv.Field(2, 3)
    assert f.q == 8
    assert f.modulus == [1, 1, 0, 1]
    assert f.theta == 2
    assert [f.pow(2, i) for i in range(7)] == [1, 2, 4, 3, 6, 7, 5]
    assert f.mul(3, f.inv(3)) == 1
    assert f.render(5) == "1+t^2"
    with pytest.raises(mdsconv.MdsconvError):
        mdsconv.Field(4, 1)


def test_singleton_and_indices():
    assert mdsconv.singleton_and_indices(7, 4, 2) == (6, 1, 0)
    with pytest.raises(ValueError):
        mdsconv.singleton_and_indices(5, 0, 1)


def test_construct_and_classify():
    bundle = mdsconv.construct("sec3", 8, n=7, k=2, delta=2)
    assert bundle["conv"] == {"n": 7, "k": 4, "delta": 2, "nu": 1}
    report = mdsconv.classify(bundle)
    assert report["dfree"] == [6, 6]
    assert report["verdicts"] == {"mds": "Confirmed", "smds": "Confirmed", "mdp": "Confirmed"}
    assert report["expected"] == bundle["expected"]


def test_construction_two():
    bundle = mdsconv.construct("sec5c2", 8, tau=3)
    assert bundle["conv"]["k"] == 5
    assert mdsconv.classify(bundle)["verdicts"]["mds"] == "Confirmed"


def test_block_min_distance():
    assert mdsconv.block_min_distance(5, [[1, 1, 1, 1], [0, 1, 2, 3]]) == 3


def test_admissible_parameters():
    rows = mdsconv.admissible_parameters(4)
    assert ("sec4", 4, 4, 1, 1) in rows
    assert all(r[1] == 4 for r in rows)
    assert mdsconv.admissible_parameters(8, ["sec4"]) == sorted(mdsconv.admissible_parameters(8, ["sec4"]))


def test_examples():
    for i in range(1, 12):
        ex = mdsconv.example(i)
        assert ex["ok"], ex
        assert ex["dfree"][0] == ex["dfree"][1] == ex["dfree_expected"]
    with pytest.raises(mdsconv.MdsconvError):
        mdsconv.example(12)
