"""Command-line contract: outputs, exit codes, bounds, JSON schema."""
from __future__ import annotations

import json

import pytest

from parkhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enum_count(capsys):
    code, out, _ = run(capsys, "enum", "pf", "3", "--count-only")
    assert code == 0 and out.strip() == "16"


def test_enum_stream(capsys):
    code, out, _ = run(capsys, "enum", "prime", "2")
    assert code == 0 and out.strip() == "11"


def test_enum_bound(capsys):
    code, _, err = run(capsys, "enum", "pf", "9")
    assert code == 2 and "bound" in err


def test_enum_bound_override(capsys, monkeypatch):
    monkeypatch.setenv("PARKHOPF_MAX_N", "9")
    code, out, _ = run(capsys, "enum", "pf", "9", "--count-only")
    assert code == 0 and out.strip() == str(10 ** 8)


def test_mul_text(capsys):
    code, out, _ = run(capsys, "mul", "--basis", "F", "12", "11")
    assert code == 0
    assert out.strip() == ("F_1233 + F_1323 + F_1332 + F_3123 + F_3132 "
                           "+ F_3312")


def test_mul_malformed(capsys):
    code, _, err = run(capsys, "mul", "--basis", "F", "13", "11")
    assert code == 3 and "not a parking function" in err


def test_antipode_text(capsys):
    code, out, _ = run(capsys, "antipode", "122")
    assert code == 0
    assert out.strip() == "F_212 - F_213 + F_221 - F_231 - F_321"


def test_comul_text(capsys):
    code, out, _ = run(capsys, "comul", "--basis", "G", "41252")
    assert code == 0
    assert out.strip() == ("1 (x) G_41252 + G_1 (x) G_3141 + G_122 (x) G_12 "
                           "+ G_4122 (x) G_1 + G_41252 (x) 1")


def test_mul_json_schema(capsys):
    code, out, _ = run(capsys, "mul", "--basis", "G", "12", "11",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"] == "PQSym*" and doc["basis"] == "G"
    assert len(doc["terms"]) == 10
    assert all(set(t) == {"idx", "c"} for t in doc["terms"])
    assert doc["terms"][0]["c"] == "1"


def test_comul_json_tensor_idx(capsys):
    code, out, _ = run(capsys, "comul", "--basis", "F", "11",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [[], [1, 1]] in [t["idx"] for t in doc["terms"]]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "result.json"
    code, out, _ = run(capsys, "mul", "--basis", "F", "1", "1",
                       "--out", str(target))
    assert code == 0 and out.strip() == "F_12 + F_21"
    doc = json.loads(target.read_text())
    assert doc["algebra"] == "PQSym"


def test_series_outputs(capsys):
    cases = {
        ("connected", "6"): "1 2 11 92 1014 13795",
        ("lie", "5"): "1 2 9 80 901",
        ("schroder", "4"): "1 1 3 11 45",
    }
    for (which, n), want in cases.items():
        code, out, _ = run(capsys, "series", which, n)
        assert code == 0 and out.strip() == want


def test_series_g(capsys):
    code, out, _ = run(capsys, "series", "g", "3")
    assert code == 0
    assert out.splitlines()[2] == "g_3 = S^3 + S^12 + 2*S^21 + S^111"


def test_series_bound(capsys):
    code, _, err = run(capsys, "series", "connected", "13")
    assert code == 2 and "bound" in err


def test_cumulants(capsys):
    code, out, _ = run(capsys, "cumulants", "--moments", "0,1,0,2")
    assert code == 0 and out.strip() == "0,1,0,0"
    code, out, _ = run(capsys, "cumulants", "--cumulants", "1,1,1")
    assert code == 0 and out.strip() == "1,2,5"
    code, out, _ = run(capsys, "cumulants", "--moments", "1/2,1/3", "--check")
    assert code == 0 and out.strip() == "1/2,1/12"


def test_cumulants_malformed(capsys):
    code, _, err = run(capsys, "cumulants", "--moments", "")
    assert code == 3 and "malformed" in err
    code, _, err = run(capsys, "cumulants", "--moments", "1,x")
    assert code == 3


def test_verify_passing_suites(capsys):
    for suite in ("paper-examples", "hopf", "counts"):
        code, out, _ = run(capsys, "verify", "--suite", suite,
                           "--max-degree", "3")
        assert code == 0, out
        assert "FAIL" not in out


def test_verify_equivalences_reports_red_law(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "equivalences",
                       "--max-degree", "3")
    assert code == 1
    assert "FAIL   equivalences/ribbon-two-term-law" in out
    assert "REPORT equivalences/g-series-routes" in out


def test_verify_degree_bound(capsys):
    code, _, err = run(capsys, "verify", "--suite", "counts",
                       "--max-degree", "7")
    assert code == 2 and "bound" in err


def test_deterministic_output(capsys):
    first = run(capsys, "mul", "--basis", "F", "12", "11")
    second = run(capsys, "mul", "--basis", "F", "12", "11")
    assert first == second
