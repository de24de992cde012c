import json
import re
from fractions import Fraction

import pytest

import axial.cli as cli
from axial.cli import RunReport, main, run_report_from_json
from axial.fischer import Table1Row


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def jrun(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip().startswith("{") else out, err


def strip_timing(payload):
    return json.dumps({k: v for k, v in payload.items() if k != "timing"},
                      sort_keys=True)


def test_build_sp3(capsys):
    code, doc, _ = jrun(capsys, "build", "--family", "sp", "--m", "3")
    assert code == 0
    assert doc["class_size"] == 63
    assert doc["connected"] is True


def test_build_single_point(capsys):
    code, doc, _ = jrun(capsys, "build", "--family", "sym", "--m", "2")
    assert code == 0
    assert doc["class_size"] == 1


def test_build_malformed_file(capsys, tmp_path):
    bad = tmp_path / "g.grp"
    bad.write_text("perm 4\ngen (1,2\nseed (1,2)\n")
    code, _, err = run(capsys, "build", "--file", str(bad))
    assert code == 2
    assert "ParseError" in err


def test_build_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "build", "--file", str(tmp_path / "nope.grp"))
    assert code == 2


def test_build_from_group_file(capsys, tmp_path):
    path = tmp_path / "sym4.grp"
    path.write_text("perm 4\ngen (1,2)\ngen (1,2,3,4)\nseed (1,2)\n")
    code, doc, _ = jrun(capsys, "build", "--file", str(path))
    assert code == 0
    assert doc["class_size"] == 6
    assert doc["oracle"] is None


def test_spectrum_su4(capsys):
    code, doc, _ = jrun(capsys, "spectrum", "--family", "su", "--m", "4")
    assert code == 0
    assert doc["spectrum"] == [[32, 1], [2, 24], [-4, 20]]
    assert doc["oracle"]["match"] is True


def test_spectrum_wr3_5(capsys):
    code, doc, _ = jrun(capsys, "spectrum", "--family", "wr3", "--n", "5")
    assert code == 0
    assert doc["spectrum"] == [[20, 1], [5, 4], [-1, 20], [-4, 5]]
    assert doc["oracle"]["match"] is True


def test_spectrum_frob9(capsys):
    code, doc, _ = jrun(capsys, "spectrum", "--family", "frob9")
    assert code == 0
    assert doc["spectrum"] == [[8, 1], [-1, 8]]
    assert doc["oracle"]["match"] is True


def test_spectrum_oracle_mismatch_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "_oracle_row",
                        lambda fp: Table1Row("PR2(a)", 0, 5, None))
    code, doc, _ = jrun(capsys, "spectrum", "--family", "sym", "--m", "4")
    assert code == 3
    assert doc["oracle"]["match"] is False


def test_jordan_omega3_6_minus(capsys):
    code, doc, _ = jrun(capsys, "jordan", "--family", "omega3", "--m", "6",
                        "--eps", "minus", "--eta", "1/2", "--threads", "1")
    assert code == 0
    assert doc["class_size"] == 126
    assert doc["radical_dim"] == 90
    assert doc["quotient_dim"] == 36
    assert doc["jordan"] == {"verdict": True, "counterexample": None,
                             "case": None}


def test_jordan_wralt4_negative(capsys):
    code, doc, _ = jrun(capsys, "jordan", "--family", "wralt4", "--n", "4",
                        "--eta", "1/2")
    assert code == 0
    assert doc["jordan"]["verdict"] is False
    assert doc["jordan"]["counterexample"] == [1, 0, 3, 9]


def test_jordan_eta_two_case_ii(capsys):
    code, doc, _ = jrun(capsys, "jordan", "--family", "sym", "--m", "3",
                        "--eta", "2")
    assert code == 0
    assert doc["params"]["eta"] == "2/1"
    assert doc["quotient_dim"] == 1
    assert doc["jordan"] == {"verdict": True, "counterexample": None,
                             "case": "ii"}


def test_jordan_eta_three_no_factor(capsys):
    code, doc, _ = jrun(capsys, "jordan", "--family", "sym", "--m", "4",
                        "--eta", "3")
    assert code == 0
    assert doc["quotient_dim"] is None
    assert doc["jordan"]["verdict"] is False
    assert doc["jordan"]["case"] == "no_jordan_factor"


def test_eta_rejects_floats(capsys):
    with pytest.raises(SystemExit) as err:
        main(["jordan", "--family", "sym", "--m", "3", "--eta", "0.5"])
    assert err.value.code == 2
    assert "exact rational" in capsys.readouterr().err


def test_bad_params_exit_2(capsys):
    code, _, err = run(capsys, "build", "--family", "sym")
    assert code == 2
    assert "BadParams" in err


def test_json_is_deterministic(capsys):
    _, a, _ = jrun(capsys, "jordan", "--family", "wr2", "--n", "4")
    _, b, _ = jrun(capsys, "jordan", "--family", "wr2", "--n", "4")
    assert strip_timing(a) == strip_timing(b)


def test_threads_do_not_change_output(capsys):
    _, a, _ = jrun(capsys, "jordan", "--family", "wr3", "--n", "4",
                   "--threads", "1")
    _, b, _ = jrun(capsys, "jordan", "--family", "wr3", "--n", "4",
                   "--threads", "2")
    assert strip_timing(a) == strip_timing(b)


def test_csv_render(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "wr2", "--n", "5",
                       "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("family,params,class_size")
    assert row.startswith('wr2,"n=5",20,True')


def test_text_render(capsys):
    code, out, _ = run(capsys, "build", "--family", "su", "--m", "4",
                       "--format", "text")
    assert code == 0
    assert "class_size: 45" in out
    assert "match=True" in out


def test_run_report_roundtrip(capsys):
    _, raw, _ = run(capsys, "jordan", "--family", "sym", "--m", "4")
    report = run_report_from_json(raw)
    assert isinstance(report, RunReport)
    assert report.params["eta"] == Fraction(1, 2)
    assert report.class_size == 6
    again = json.loads(raw)
    assert json.dumps(report.to_dict(), sort_keys=True) == \
        json.dumps(again, sort_keys=True)


def test_theorem1_quick_all_ok(capsys):
    code, doc, _ = jrun(capsys, "theorem1", "--scope", "quick",
                        "--threads", "1")
    assert code == 0
    assert doc["all_ok"] is True
    assert len(doc["rows"]) == 8
    by_label = {r["label"]: r for r in doc["rows"]}
    assert by_label["wralt4 n=4"]["jordan"] is False
    assert by_label["sp m=3"]["radical_dim"] == 35
    assert by_label["sp m=3"]["quotient_dim"] == 28


def test_theorem1_text_render(capsys):
    code, out, _ = run(capsys, "theorem1", "--scope", "quick",
                       "--format", "text", "--threads", "1")
    assert code == 0
    assert out.strip().endswith("all ok: True")
    assert re.search(r"sym m=4\s+6\s+0\s+6\s+True", out)


def test_theorem1_detects_deviation(capsys, monkeypatch):
    rows = tuple(cli._SWEEP_QUICK[:1] + ((dict(family="sym", m=4), 1, 5,
                                          True),))
    monkeypatch.setattr(cli, "_SWEEP_QUICK", rows)
    code, doc, _ = jrun(capsys, "theorem1", "--scope", "quick",
                        "--threads", "1")
    assert code == 3
    assert doc["all_ok"] is False


def test_albert_json(capsys):
    code, doc, _ = jrun(capsys, "albert")
    assert code == 0
    assert doc["passed"] is True
    assert doc["determinant"].lstrip("-") == f"1/{2**78 * 3**36}"
    assert doc["rank"] == 27
    assert doc["peirce_dims"] == [[1, 10, 16]] * 4


def test_albert_text_lines(capsys):
    code, out, _ = run(capsys, "albert", "--format", "text")
    assert code == 0
    assert "|det| = 1/(2^78 * 3^36)" in out
    assert "4 primitive axes, eta = 1/2" in out
    assert "linearized Jordan identity: PASS" in out
