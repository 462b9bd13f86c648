import io
import json
import subprocess
import sys

import pytest

from semiring_ideals.cli import main
from semiring_ideals.enumeration import canonical_key
from semiring_ideals.fileformat import parse_semiring_file, semiring_to_json, write_semiring_file
from semiring_ideals.models import paper_three_element

U3 = {"elements": ["0", "u", "1"], "zero": "0", "one": "1",
      "add": [["0", "u", "1"], ["u", "u", "u"], ["1", "u", "1"]],
      "mul": [["0", "0", "0"], ["0", "u", "u"], ["0", "u", "1"]]}


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def write(tmp_path, data, name="s.json"):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


def test_check_file_matches_three_element_example(tmp_path):
    code, out = run("check", write(tmp_path, U3), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert [r["ideal"] for r in data["ideals"]] == ["{0}", "{0,u}", "{0,1,u}"]
    row = {r["ideal"]: r for r in data["ideals"]}["{0,u}"]
    assert row["maximal"] and row["prime"] and not row["subtractive"]
    assert data["classification"]["two_ab"] and data["units"] == ["1"]


def test_check_csv_one_row_per_ideal():
    code, out = run("check", "--model", "chain:4", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("ideal,prime,maximal") and len(lines) == 5


def test_check_minplus_markdown():
    code, out = run("check", "--model", "minplus")
    assert code == 0 and "UpSet(2)" in out and "| two_ab | False |" in out


def test_ragged_file_names_row(tmp_path, capsys):
    bad = dict(U3, add=[["0", "u", "1"], ["u", "u"], ["1", "u", "1"]])
    code, _ = run("check", write(tmp_path, bad))
    assert code == 2 and "add row 1" in capsys.readouterr().err


def test_bad_json_reports_position(tmp_path, capsys):
    code, _ = run("check", write(tmp_path, "{\n  \"elements\": [,]\n}"))
    assert code == 2 and "line 2" in capsys.readouterr().err


def test_axiom_violation_reported(tmp_path, capsys):
    bad = dict(U3, mul=[["0", "0", "0"], ["0", "u", "1"], ["0", "1", "1"]])
    code, _ = run("check", write(tmp_path, bad))
    assert code == 2 and "axiom violation" in capsys.readouterr().err


def test_round_trip_keeps_canonical_key(tmp_path):
    S = parse_semiring_file(write(tmp_path, U3))
    write_semiring_file(S, tmp_path / "again.json")
    T = parse_semiring_file(tmp_path / "again.json")
    assert canonical_key(S) == canonical_key(T) == canonical_key(paper_three_element().semiring)
    assert semiring_to_json(T) == semiring_to_json(S)


@pytest.mark.parametrize("argv", [
    ["check", "x.json", "--model", "paper3"],
    ["verify", "--order", "2", "--statements", "A1,Q7"],
    ["verify"],
    ["enumerate", "--order", "6"],
    ["check", "--bogus"],
    ["verify", "--order", "2", "--workers", "0"],
])
def test_configuration_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_enumerate():
    code, out = run("enumerate", "--order", "3", "--iso", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 6
    assert run("enumerate", "--order", "2")[1].startswith("order 2 (labelled")


def test_enumerate_save_and_verify_from_corpus(tmp_path):
    d = tmp_path / "corpus"
    assert run("enumerate", "--order", "3", "--save", str(d))[0] == 0
    a = run("verify", "--order", "3", "--corpus", str(d), "--format", "json")
    b = run("verify", "--order", "3", "--format", "json")
    assert a == b and a[0] == 0
    assert run("verify", "--order", "4", "--corpus", str(d))[0] == 2


def test_verify_models_and_statement_filter():
    code, out = run("verify", "--model", "minplus", "--model", "paper3", "--statements", "A7,A11")
    assert code == 0
    assert "| A7 |" in out and "| A1 |" not in out and "vacuous" in out


def test_verify_workers_byte_identical(tmp_path):
    a, b = tmp_path / "w1.json", tmp_path / "w8.json"
    assert run("verify", "--order", "3", "--workers", "1", "--format", "json", "--out", str(a))[0] == 0
    assert run("verify", "--order", "3", "--workers", "8", "--format", "json", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_search_and_info(tmp_path):
    code, out = run("search", "--question", "q1", "--model", "minplus", "--model", "paper3")
    assert code == 0 and "no counterexample found" in out
    code, out = run("search", "--question", "q2", "--order", "4", "--certificate-dir", str(tmp_path))
    assert code == 0 and "WITNESS" in out and list(tmp_path.glob("q2-*.txt"))
    code, out = run("info", "--statements")
    assert code == 0 and "A11" in out and "not registered" in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "semiring_ideals", "info", "--format", "json"],
                       capture_output=True, text=True, check=True)
    assert "B6" in json.loads(r.stdout)["statements"]
