import json

import pytest

from conftest import DATA
from dompoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_barbell_text(capsys):
    code, out, _ = run(capsys, "poly", "--family", "barbell:3")
    assert code == 0
    assert out.splitlines() == ["barbell:3: 9x^2 + 18x^3 + 15x^4 + 6x^5 + x^6", "closed-form: MATCH"]


def test_poly_descending_and_graph6(capsys):
    code, out, _ = run(capsys, "poly", "--graph6", "C~", "--descending")
    assert code == 0
    assert out.strip() == "C~: x^4 + 4x^3 + 6x^2 + 4x"


def test_poly_edges_file(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("n 3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "poly", "--edges", str(path))
    assert code == 0 and out.strip() == f"{path}: x + 3x^2 + x^3"


def test_json_schema(capsys):
    code, out, _ = run(capsys, "poly", "--family", "book_c:2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"command", "inputs", "results", "failures"}
    assert doc["command"] == "poly" and doc["failures"] == []
    row = doc["results"][0]
    assert row["key"] == "0,0,9,18,15,6,1" == row["closed_form"]
    assert row["match"] is True


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "--family", "barbell:2", "--as", "edges")
    assert code == 0
    assert out.splitlines()[0] == "n 4"
    code, out, _ = run(capsys, "family", "--family", "K:2")
    assert out.strip() == "A_"


def test_covered_and_irrelevant(capsys):
    code, out, _ = run(capsys, "irrelevant", "--family", "barbell:3", "--check")
    assert code == 0 and "(2, 5)" in out
    code, out, _ = run(capsys, "covered", "--family", "star:3", "--format", "json")
    assert json.loads(out)["results"][0]["covered"] == [0]


def test_recurrence_check(capsys):
    code, out, _ = run(capsys, "recurrence-check", "--family", "book:2")
    assert code == 0 and "OK" in out


def test_members_connected6(capsys):
    code, out, _ = run(capsys, "members", "--target", "barbell:3", "--catalog", str(DATA / "connected6.g6"),
                       "--connected", "--format", "json")
    assert code == 0
    [rep] = json.loads(out)["results"]
    assert rep["key"] == "0,0,9,18,15,6,1"
    assert len(rep["iso_classes"]) == rep["connected_iso_classes"] == rep["size"] == 7


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--catalog", str(DATA / "graphs_le5.g6"), "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "source_id,polynomial"
    assert len(lines) == 1 + 52
    assert sorted(l.split(",", 1)[0] for l in lines[1:])[0].startswith("graphs_le5.g6:")


def test_verify_without_catalog_skips(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "SKIP" in out and "FAIL" not in out


def test_guard_failure_exit_code(capsys):
    code, _, err = run(capsys, "poly", "--family", "K:3", "--family", "barbell:8", "--max-n", "10")
    assert code == 1
    assert "barbell:8" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "--family", "lollipop:3"],
        ["poly", "--graph6", "A"],
        ["poly"],
        ["members", "--catalog", str(DATA / "graphs_le5.g6")],
        ["classify"],
        ["poly", "--edges", "/nonexistent/file"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("dompoly: error:")
