import csv
import io
import json
import subprocess
import sys

import pytest

from gonality.cli import main, parse_special


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_special():
    assert parse_special("1=4, 2=7,3=8") == {1: 4, 2: 7, 3: 8}
    for bad in ("1:4", "a=4", "", "1=4,1=5"):
        with pytest.raises(Exception):
            parse_special(bad)


EXIT_MATRIX = [
    (("pi", "--d", "8", "--r", "3"), 0),
    (("pi", "--d", "8", "--r", "1"), 1),
    (("pi", "--d", "8"), 1),
    (("halphen", "--d", "12", "--s", "3"), 0),
    (("halphen", "--d", "5", "--s", "3"), 1),
    (("seq", "--family", "plane", "--d", "7"), 0),
    (("seq", "--family", "pentagonal", "--g", "10"), 1),
    (("seq", "--family", "fixture:nope"), 1),
    (("seq", "--family", "cubic"), 1),
    (("complete", "--g", "9", "--special", "1=4,2=7,3=8", "--max-r", "10"), 0),
    (("complete", "--g", "9", "--special", "1=4,2=4"), 1),
    (("complete", "--g", "9", "--special", "garbage"), 1),
    (("slope", "--family", "plane", "--d", "7", "--max-r", "12"), 0),
    (("check", "lemma36", "--g", "19", "--d", "12", "--r", "3", "--dprev", "11"), 0),
    (("check", "lemma36", "--g", "19", "--d", "12", "--r", "1", "--dprev", "11"), 1),
    (("check", "prop414", "--g", "19", "--gamma", "6", "--r", "3", "--special", "1=8,2=11,3=12"), 0),
    (("family", "--type", "ci", "--s", "3", "--p", "4"), 0),
    (("family", "--type", "quadric", "--a", "5", "--b", "4"), 1),
    (("family", "--type", "torus"), 1),
    (("genera", "--from", "3", "--to", "200", "--verify"), 0),
    (("genera", "--from", "2", "--to", "20"), 1),
    (("validate", "--g", "9", "--special", "1=4,2=7,3=8"), 0),
    (("nonsense",), 1),
    (("pi", "--d", "8", "--r", "3", "--format", "xml"), 1),
]


@pytest.mark.parametrize("argv,code", EXIT_MATRIX)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    if code:
        assert out == "" and err.strip()
    else:
        assert out and err == ""


def test_example_table(capsys):
    code, out, _ = run(capsys, "complete", "--g", "9", "--special", "1=4,2=7,3=8", "--max-r", "10",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["genus"] == 9 and doc["violations"] == [3]
    assert [e["d"] for e in doc["entries"]] == [4, 7, 8, 11, 12, 14, 15, 16, 18, 19]
    assert doc["entries"][3] == {"r": 4, "d": 11, "provenance": "duality"}


def test_markdown_is_transposed_table(capsys):
    _, out, _ = run(capsys, "complete", "--g", "9", "--special", "1=4,2=7,3=8", "--max-r", "10")
    assert "| d | 4 | 7 | 8 | 11 | 12 | 14 | 15 | 16 | 18 | 19 |" in out


def test_slope_plane(capsys):
    _, out, _ = run(capsys, "slope", "--family", "plane", "--d", "7", "--max-r", "12", "--format", "json")
    assert json.loads(out)["violations"] == [2, 5, 9]


def test_genera_marks_non_members(capsys):
    _, out, _ = run(capsys, "genera", "--from", "3", "--to", "200", "--verify", "--format", "json")
    doc = json.loads(out)
    non = {row["g"] for row in doc["rows"] if not row["member"]}
    assert {4, 8, 14, 3, 5, 7, 199} <= non
    assert all(row["member"] for row in doc["rows"] if row["g"] % 2 == 0 and row["g"] not in (4, 8, 14))


def _csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize("argv", [
    ("complete", "--g", "16", "--special", "1=5,2=9,3=10,4=14,5=15", "--max-r", "12"),
    ("genera", "--from", "3", "--to", "60"),
    ("seq", "--family", "pentagonal", "--g", "23"),
])
def test_json_and_csv_agree(capsys, argv):
    _, js, _ = run(capsys, *argv, "--format", "json")
    _, cs, _ = run(capsys, *argv, "--format", "csv")
    doc = json.loads(js)
    rows = doc.get("entries", doc.get("rows"))
    flat = _csv_rows(cs)
    assert len(rows) == len(flat)
    for a, b in zip(rows, flat):
        assert list(a) == list(b)
        for k, v in a.items():
            if isinstance(v, bool):
                v = str(v).lower()
            elif isinstance(v, list):
                v = ";".join(":".join(map(str, x)) if isinstance(x, list) else str(x) for x in v)
            elif v is None:
                v = ""
            assert str(v) == b[k], (k, v, b[k])


@pytest.mark.parametrize("fmt", ["md", "json", "csv"])
def test_determinism(capsys, fmt):
    argv = ("genera", "--from", "3", "--to", "300", "--format", fmt)
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv, "--workers", "3")
    _, c, _ = run(capsys, *argv)
    assert a == b == c


def test_complete_round_trips_through_validate(capsys, tmp_path):
    _, out, _ = run(capsys, "complete", "--g", "16", "--special", "1=5,2=9,3=10,4=14,5=15",
                    "--max-r", "12", "--format", "json")
    path = tmp_path / "seq.json"
    path.write_text(out)
    code, res, _ = run(capsys, "validate", "--input", str(path), "--plane", "false", "--format", "json")
    doc = json.loads(res)
    assert code == 0 and doc["valid"] and doc["violations"] == []


def test_validate_reports_violations(capsys):
    code, out, _ = run(capsys, "validate", "--g", "9", "--special", "1=4,2=8,3=11", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and not doc["valid"]
    assert doc["violations"] == [{"rule": "upper_bound", "indices": [3], "detail": "d_3=11 > 10"}]


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "gonality", "pi", "--d", "8", "--r", "1"],
                       capture_output=True, text=True)
    assert p.returncode == 1 and p.stdout == "" and "r" in p.stderr
