import pytest

import spinindex


def test_golden_number_arithmetic():
    t = spinindex.GoldenNumber.tau()
    assert t * t == t + spinindex.GoldenNumber(1)
    assert str(spinindex.GoldenNumber.sqrt5()) == "-1+2*t"
    assert float(t) == pytest.approx(1.6180339887498949)
    assert spinindex.GoldenNumber.parse("1/2+t") == spinindex.GoldenNumber(0, 1) + spinindex.GoldenNumber.parse("1/2")


def test_icosa_table():
    rows = spinindex.icosa_table()
    assert [r["size"] for r in rows] == [1, 1, 20, 30, 12, 12, 20, 12, 12]
    assert rows[7]["characters"]["2"] == "t"


def test_ghat_classes():
    classes = spinindex.ghat_classes()
    assert len(classes) == 54
    assert sum(c["size"] for c in classes) == 28800
    assert sum(c["name"] == c["minus"] for c in classes) == 14


def test_chartable():
    table = spinindex.ghat_chartable()
    assert len(table) == 54
    assert sum(c["dim"] ** 2 for c in table) == 28800
    assert spinindex.check_orthogonality()["ok"]


def test_decomposition():
    d = spinindex.spin_decompose()
    assert d["positive"] == "(2′⊗3′)⊕(3⊗2)"
    assert d["negative"] == "(2⊗3)⊕(3′⊗2′)"
    assert d["norm"] == "2"
    assert sorted(v for v in d["multiplicities"].values() if v) == [-1, 1]


def test_spin_davis():
    rows = {r["name"]: r for r in spinindex.spin_davis()}
    assert rows["1×10A+10B×1"]["spin"] == "-1+2*t"
    assert rows["1×1"]["fp_count"] == "inf"


def test_spin_nu():
    phat = [[[0, 1, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [1, 0, 0, 0]]]
    r = spinindex.spin_nu(phat, [0, 0, 0, 0, 1])
    assert r["nu"] == "-1/2"
    assert r["oracle"] == pytest.approx(-0.5)
    r2 = spinindex.spin_nu([[{"re": 0, "im": 1}, 0], [0, {"re": 0, "im": -1}]], [0, 0, 1], dim=2)
    assert r2["oracle"] == pytest.approx(-0.5j)


def test_errors():
    same = [[[1, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [1, 0, 0, 0]]]
    with pytest.raises(spinindex.NonIsolatedFixedPoint):
        spinindex.spin_nu(same, [0, 0, 0, 0, 1])
    with pytest.raises(spinindex.SpinIndexError):
        spinindex.GoldenNumber.parse("banana")
    with pytest.raises(spinindex.ParseError):
        spinindex.spin_nu("not a matrix", [0])
    with pytest.raises(ValueError):
        spinindex._core._spin_nu_json(4, "{", "[0]")


def test_verify_passes():
    results = spinindex.verify()
    assert results and all(r["status"] == "pass" for r in results)
