import json

import pytest

import hopfind


def test_cyclotomic_eval():
    assert hopfind.cyc_eval("z3 + z3^2") == "-1"
    assert hopfind.cyc_eval("3/2 + 2*z6^5") == "3/2 + 2*z6^5"
    with pytest.raises(hopfind.ScalarParseError):
        hopfind.cyc_eval("1 +")


def test_group_and_char_table():
    g = hopfind.FiniteGroup.from_spec(json.dumps({"kind": "symmetric", "n": 3}))
    assert g.order == 6
    assert g.exponent() == 6
    table = json.loads(g.char_table())
    assert table["degrees"] == [1, 1, 2]


def test_hopf_indicators_and_exponents():
    spec = {"kind": "group_algebra", "group": {"kind": "symmetric", "n": 3}}
    h = hopfind.HopfAlgebra.from_spec(json.dumps(spec))
    assert h.dim == 6
    assert h.validate() == []
    assert h.exponent() == 6
    assert h.fs_exponent() == 6
    rows = h.regular_indicators(6)
    assert rows[1] == (2, "4", True)
    assert h.dual().exponent() == 6


def test_drinfeld_double_round_trip():
    spec = {"kind": "drinfeld_double", "of": {"kind": "group_algebra", "group": {"kind": "cyclic", "n": 2}}}
    d = hopfind.HopfAlgebra.from_spec(json.dumps(spec))
    assert d.dim == 4
    assert d.exponent() == 2
    assert d.validate() == []


def test_run_check_on_one_instance():
    inst = {"name": "z4", "hopf": {"kind": "group_algebra", "group": {"kind": "cyclic", "n": 4}}}
    rows = json.loads(hopfind.run_check(json.dumps(inst), "dual-invariance"))
    assert rows == [{"check": "dual-invariance", "instance": "z4", "status": "pass", "witness": ""}]


def test_census_is_listed():
    census = hopfind.census()
    names = [i["name"] for i in census["instances"]]
    assert "group-s3" in names
    assert "double-s3" in names
    assert "all" not in hopfind.known_checks()
    assert "bismash-count" in hopfind.known_checks()
