import json
from fractions import Fraction

import pytest

from hypermoduli.cli import (
    CurveFileError,
    emit_curve_file,
    main,
    parse_curve_file,
    parse_gaussian,
    run,
)
from hypermoduli.curves import curve_new
from hypermoduli.fields import cyclotomic_field
from hypermoduli.moebius import MoebiusMap
from hypermoduli.polynomials import Poly, moebius_pullback

F8 = cyclotomic_field(8)


def write_curve(tmp_path, name, f, label=""):
    path = tmp_path / name
    path.write_text(emit_curve_file(curve_new(f, label=label)))
    return str(path)


@pytest.fixture
def v4_file(tmp_path):
    i = F8.i
    f = Poly.from_dict(F8, {8: F8.one, 6: -i * 3, 4: F8(-3), 2: -i * 3, 0: F8.one})
    return write_curve(tmp_path, "v4.json", f, "V4 sample")


@pytest.fixture
def twisted_file(tmp_path):
    f0 = Poly.from_dict(F8, {6: F8.one, 3: F8(2), 1: F8(-3), 0: F8(5)})
    f = moebius_pullback(f0, MoebiusMap(F8(2), F8.i, F8.one, F8(3)), 6)
    return write_curve(tmp_path, "tw.json", f, "twisted")


def test_curve_file_round_trip_is_byte_identical(v4_file):
    text = open(v4_file).read()
    X = parse_curve_file(text)
    assert emit_curve_file(X) == text
    data = json.loads(text)
    assert data["cyclotomic_order"] == 8 and len(data["coefficients"]) == 9
    assert data["label"] == "V4 sample"


@pytest.mark.parametrize("doc,fragment", [
    ('{"cyclotomic_order": 4, "coefficients": [["1/1", "0/1"], ["x", "0/1"]]}', "row 1"),
    ('{"cyclotomic_order": 4, "coefficients": [["1/1", "0/1"], "oops"]}', "row 1"),
    ('{"cyclotomic_order": 4, "coefficients": [["1/1", "0/1"], ["1/0", "0/1"]]}', "row 1"),
    ('{"cyclotomic_order": 0, "coefficients": []}', "positive"),
    ('{"coefficients": []}', "cyclotomic_order"),
    ('not json', "JSON"),
    ('{"cyclotomic_order": 4, "coefficients": [["-1/1","0/1"],["0/1","0/1"],["1/1","0/1"]]}', "Genus"),
])
def test_curve_file_errors_are_specific(doc, fragment):
    with pytest.raises(CurveFileError) as info:
        parse_curve_file(doc)
    assert fragment.lower() in str(info.value).lower()


@pytest.mark.parametrize("text,value", [
    ("1", (1, 0)), ("1+2i", (1, 2)), ("1 - 2i", (1, -2)), ("i", (0, 1)), ("-i", (0, -1)),
    ("3i", (0, 3)), ("1/2+3/4i", (Fraction(1, 2), Fraction(3, 4))), ("-5", (-5, 0)),
])
def test_parse_gaussian(text, value):
    assert parse_gaussian(text) == (Fraction(value[0]), Fraction(value[1]))


def test_classify_report(v4_file):
    code, report, text = run(["classify", v4_file, "--json"])
    assert code == 0
    assert list(report) == ["command", "version", "inputs", "verdict", "clauses", "witnesses"]
    assert report["witnesses"]["label"] == "V4"
    assert "timing_seconds" not in report
    assert json.loads(text) == report


def test_descend_writes_real_model(twisted_file, tmp_path):
    out = tmp_path / "real.json"
    code, report, _ = run(["descend", twisted_file, "--out", str(out)])
    assert code == 0 and report["witnesses"]["status"] == "DefinableOverR"
    Y = parse_curve_file(out.read_text())
    assert Y.f.is_real()


def test_isom_and_quotient(v4_file, twisted_file):
    code, report, _ = run(["isom", v4_file, v4_file])
    assert code == 0 and report["witnesses"]["count"] == 8
    code, report, text = run(["quotient", v4_file])
    assert code == 0
    assert "sigma*(t) = -t" in text


def test_tables_and_invariants_exit_zero():
    for argv in (["tables", "--case", "c"], ["tables", "--case", "h", "--q", "3"],
                 ["invariants", "--case", "d"], ["invariants", "--case", "b", "--n", "4"]):
        code, report, _ = run(argv)
        assert code == 0, argv
        assert all(c["verdict"] != "fail" for c in report["clauses"])


def test_usage_errors_exit_two(capsys):
    assert main(["counterexample", "--n", "6", "--m", "1"]) == 2
    assert "m odd >= 3" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["tables"])
    assert info.value.code == 2


def test_timing_only_on_request(v4_file):
    _, report, text = run(["classify", v4_file, "--timing"])
    assert "timing_seconds" in report and "time:" in text


@pytest.mark.parametrize("argv", [
    ["tables", "--case", "e", "--json"],
    ["invariants", "--case", "c", "--json"],
])
def test_reports_are_deterministic(argv):
    assert run(argv)[2] == run(argv)[2]


def test_file_reports_are_deterministic(v4_file, twisted_file):
    for argv in (["classify", v4_file, "--json"], ["descend", twisted_file, "--json"],
                 ["quotient", v4_file, "--json"], ["isom", v4_file, v4_file, "--json"]):
        assert run(argv)[2] == run(argv)[2]
