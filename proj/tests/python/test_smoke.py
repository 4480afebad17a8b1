import json

import pytest

import macdonald_compress as mc


def test_chain_of_431():
    assert mc.chain([4, 3, 1, 0]) == "((1,4),(1,3) | (2,4),(2,3),(1,4),(1,3) | (2,4),(1,4))"
    assert len(mc.chain_entries([5, 4, 2, 1, 0])) == 16


def test_formulas_agree():
    a = mc.compute([3, 2, 1, 0], formula="ram-yip")
    b = mc.compute([3, 2, 1, 0], formula="compressed", threads=2)
    assert a == b
    assert a[(3, 2, 1, 0)] == "1"


def test_p20_closed_form():
    p = mc.compute([2, 0])
    assert p == {(2, 0): "1", (1, 1): "(1 - t + q - q*t)/((1 - q*t))", (0, 2): "1"}
    doc = json.loads(mc.compute_json([2, 0]))
    assert doc["lambda"] == [2, 0] and doc["n"] == 2
    assert [m["exp"] for m in doc["monomials"]] == [[2, 0], [1, 1], [0, 2]]


def test_worked_example():
    c = mc.classify_folds("2341", [1, 4, 6, 7], [4, 3, 1, 0])
    assert c["plus"] == [1, 7] and c["minus"] == [4, 6]
    assert c["chain"] == ["2341", "1342", "1432", "3412", "3214"]
    assert mc.filling_map("2341", [1, 4, 6, 7], [4, 3, 1, 0]) == "2 1 3 3 / 3 4 2 / 1"


def test_counts_and_classes():
    assert mc.count([3, 2, 1, 0]) == 288
    assert mc.count([3, 2, 1, 0], convention="hhl") == 864
    assert mc.count([3, 2, 1, 0], convention="ram-yip") == 384
    rep = mc.verify_classes([3, 2, 1, 0])
    assert rep["ok"] and rep["classes"] == rep["passed"] == 288


def test_oracle():
    assert mc.check_oracle([2, 1, 0], seed=7)["ok"]


def test_table():
    rows = mc.table()
    assert [(r["t"], r["c"], r["r"]) for r in rows] == [
        (288, "1.3", "3.0"),
        (10368, "4.7", "3.0"),
        (34560, "3.6", "7.5"),
        (552960, "14.2", "7.5"),
    ]


def test_errors():
    with pytest.raises(ValueError):
        mc.compute([2, 2, 0])
    code, out, err = mc.run_cli(["verify", "--lambda", "2,2,0", "-n", "3"])
    assert code == 2 and "not regular" in err
