import json

import numpy as np
import pytest

from tetk import jsonio
from tetk.cochain import standard_cyclic_3cocycle
from tetk.fixtures import z2_worked_example
from tetk.jsonio import ParseError


def test_group_roundtrip(s3):
    obj = jsonio.dump_group(s3)
    back = jsonio.load_group(obj)
    assert back.order == 6
    assert np.array_equal(back.mul, s3.mul)


def test_group_kinds():
    assert jsonio.load_group({"kind": "cyclic", "n": 5}).order == 5
    assert jsonio.load_group({"kind": "klein4"}).order == 4
    assert jsonio.load_group({"kind": "quaternion8"}).order == 8
    with pytest.raises(ParseError, match="kind"):
        jsonio.load_group({"kind": "sporadic"})


def test_group_validation_names_position():
    with pytest.raises(ParseError, match="row 1, column 0"):
        jsonio.load_group({"order": 2, "table": [[0, 1], [7, 0]]})
    with pytest.raises(ParseError, match="row 0 has"):
        jsonio.load_group({"order": 2, "table": [[0], [1, 0]]})


def test_action_roundtrip(swap2):
    obj = jsonio.dump_action(swap2)
    back = jsonio.load_action(obj)
    assert back.points == 2
    assert np.array_equal(back.act, swap2.act)


def test_action_validation_names_position():
    with pytest.raises(ParseError, match="row 1"):
        jsonio.load_action({"group": {"kind": "cyclic", "n": 2},
                            "points": 2, "act": [[0, 1], [1]]})


def test_cochain_dense_roundtrip(bz2):
    alpha = standard_cyclic_3cocycle(2, 1, groupoid=bz2)
    obj = jsonio.dump_cochain(alpha)
    back = jsonio.load_cochain(obj)
    assert back.degree == 3 and back.modulus == 2
    assert list(back.table) == list(alpha.table)


def test_cochain_keyed_roundtrip(bz2):
    alpha = standard_cyclic_3cocycle(2, 1, groupoid=bz2)
    obj = jsonio.dump_cochain(alpha, keyed=True)
    assert obj["entries"]["0,1,1,1"] == 1
    back = jsonio.load_cochain(obj)
    assert list(back.table) == list(alpha.table)


def test_cochain_sparse_flag(bz2):
    obj = {"degree": 3, "modulus": 2,
           "groupoid": {"group": {"kind": "cyclic", "n": 2}},
           "entries": {"0,1,1,1": 1}}
    with pytest.raises(ParseError, match="sparse"):
        jsonio.load_cochain(obj)
    obj["sparse"] = True
    back = jsonio.load_cochain(obj)
    assert int(back.table.sum()) == 1


def test_cochain_entry_count_checked():
    obj = {"degree": 2, "modulus": 2,
           "groupoid": {"group": {"kind": "cyclic", "n": 2}},
           "entries": [0, 1]}
    with pytest.raises(ParseError, match="entries"):
        jsonio.load_cochain(obj)


def test_extension_roundtrip():
    chain = z2_worked_example()
    ext = chain["extension"]
    obj = jsonio.dump_extension(ext)
    back = jsonio.load_extension(obj)
    assert back.order == 4
    assert back.element_order(back.lift(1)) == 4


def test_extension_theta_defaults_to_delooping():
    obj = {"base": {"kind": "cyclic", "n": 2}, "modulus": 2,
           "theta": {"degree": 2, "modulus": 2, "entries": [0, 0, 0, 1]}}
    ext = jsonio.load_extension(obj)
    assert ext.order == 4
    assert ext.element_order(ext.lift(1)) == 4


def test_classfunction_and_series_roundtrip():
    chain = z2_worked_example()
    series, ext = chain["series"], chain["extension"]
    obj = jsonio.dump_series(series)
    back = jsonio.load_series(obj, ext)
    assert back.denominator == 4
    assert back.equals(series)


def test_cycsum_rational_strings():
    from fractions import Fraction

    from tetk.cyclotomic import CycSum

    v = CycSum(4, [Fraction(1, 2), Fraction(-3, 7), Fraction(0), Fraction(0)])
    dumped = jsonio.dump_cycsum(v)
    assert dumped == ["1/2", "-3/7", 0, 0]
    assert jsonio.load_cycsum(dumped, 4) == v
    # non-canonical input reduces on load: x^2 = -1 at level 4
    w = jsonio.load_cycsum([1, 0, 1, 0], 4)
    assert w == CycSum.zero()


def test_rep_roundtrip():
    chain = z2_worked_example()
    rho = chain["rep"]
    obj = jsonio.dump_rep(rho, 2)
    back = jsonio.load_rep(obj)
    assert back.dims == [2]
    from tetk.reps import verify_twisted_rep

    assert verify_twisted_rep(back, chain["theta1"])


def test_file_references(tmp_path):
    group_path = tmp_path / "z2.json"
    group_path.write_text(json.dumps({"kind": "cyclic", "n": 2}))
    action = jsonio.load_action({"group": str(group_path), "points": 1,
                                 "act": [[0, 0]]}, base_dir=str(tmp_path))
    assert action.group.order == 2


def test_malformed_json_reports_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 3,')
    with pytest.raises(ParseError, match="line"):
        jsonio.load_json_file(str(bad))
