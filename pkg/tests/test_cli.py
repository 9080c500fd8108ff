"""Command-line interface: exit codes, formats, determinism."""

import json

import pytest

from motivecount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_point(capsys):
    code, out, _ = run(capsys, "eval", "P0")
    assert code == 0
    assert out.splitlines()[0] == "1"


def test_eval_assembly(capsys):
    code, out, _ = run(capsys, "eval",
                       "(Hilb3 - P2*P3)*P11 + P2*(P11-P1) + P2*P13")
    assert code == 0
    assert "euler: 192" in out
    assert "coeffs: [1, 2, 6, 10, 14, 15, 16, 16, 16, 16, 16, 16, 15, 14, 10, 6, 2, 1]" in out


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "Gr(2,4)", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["class"] == [1, 1, 2, 1, 1]
    assert doc["euler"] == 6


def test_eval_syntax_error(capsys):
    code, _, err = run(capsys, "eval", "Gr(2,")
    assert code == 2
    assert "SyntaxError at offset 5" in err


def test_eval_arity_error(capsys):
    code, _, err = run(capsys, "eval", "Gr(5,2)")
    assert code == 2
    assert "ArityError" in err


def test_eval_unsupported(capsys):
    code, _, err = run(capsys, "eval", "Omega(3,10)")
    assert code == 2
    assert "error" in err


def test_verify_m41_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--target", "m41", "--format", "md")
    assert code == 0
    assert "| 0 | 1 |" in out and "| 17 | 1 |" in out
    assert "Euler number: 192" in out


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "--target", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert [r["target"] for r in doc["reports"]] == ["m11", "m21", "m31", "m41", "m51", "m52"]
    assert all(r["pass"] for r in doc["reports"])
    assert doc["omega26_consistency"]["matches_stated"] is False
    assert doc["pass"] is True


def test_verify_json_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "--target", "all", "--format", "json")
    _, second, _ = run(capsys, "verify", "--target", "all", "--format", "json")
    assert first == second


def test_verify_omega26_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--target", "omega26")
    assert code == 0  # informational only
    assert "matches stated value: no" in out


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--target", "m21", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "i,b_2i"
    assert out.splitlines()[1] == "0,1"


def test_verify_unknown_target():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--target", "m99"])
    assert err.value.code == 2


def test_verify_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--target", "all", "--format", "json",
                       "-o", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert len(doc["reports"]) == 6


def test_oracle_gr(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "gr", "--q", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "counter,q,params,count,expected,pass,millis"
    assert any(line.startswith('gr,2,"(2,6)",651,651,pass,') for line in lines)


def test_oracle_hilb2(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "hilb2", "--q", "2,3")
    assert code == 0
    assert any(",49,49,pass," in line for line in out.splitlines())
    assert any(",169,169,pass," in line for line in out.splitlines())


def test_oracle_punctual_small(capsys):
    code, out, err = run(capsys, "oracle", "--check", "punctual", "--q", "2",
                         "--max-colength", "4")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 8  # two curves x four colengths
    assert all(",pass," in row for row in rows)
    assert "counting" in err  # progress goes to standard error


def test_oracle_punctual_reports_known_defect(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "punctual", "--q", "2",
                       "--max-colength", "5")
    assert code == 1  # the double-line colength-5 rows over-count; see tables module
    rows = out.splitlines()[1:]
    assert len(rows) == 10
    assert sum(",fail," in row for row in rows) == 1
    assert any(row.startswith("punctual,2,ribbon:5,7,9,fail,") for row in rows)


def test_oracle_budget_skip(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "punctual", "--q", "3",
                       "--max-colength", "5", "--budget", "10000")
    assert code == 0  # rows over budget are skipped, not failed
    rows = out.splitlines()[1:]
    # colength 1 fits in the budget (3^6 ordered pairs); the rest skip
    assert sum(",skip," in row for row in rows) == 8
    assert sum(",pass," in row for row in rows) == 2
    assert not any(",fail," in row for row in rows)


def test_oracle_bad_q(capsys):
    code, _, err = run(capsys, "oracle", "--check", "gr", "--q", "7")
    assert code == 2
    assert "error" in err


def test_oracle_bad_budget(capsys):
    code, _, err = run(capsys, "oracle", "--check", "punctual", "--budget", "10")
    assert code == 2
    assert "budget" in err


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert len(doc["reports"]) == 6
    assert doc["bridges"]
    assert all(b["status"] == "pass" for b in doc["bridges"])
