import json

import pytest

from polytype import cli
from polytype import families as F
from polytype.errors import FalsificationError
from polytype.formats import from_graph6, to_edge_json, to_graph6


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def write(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("".join(line + "\n" for line in lines), encoding="ascii")
    return str(path)


def test_gen_graph6_and_json(capsys):
    rc, out, err = run(capsys, "gen", "t:8")
    assert rc == 0
    g = from_graph6(out.strip())
    assert g == F.t_graph(8)
    assert "type {2,3,8}" in err
    rc, out, _ = run(capsys, "gen", "pyr:5", "--format", "edge-json")
    assert rc == 0 and json.loads(out)["p"] == 6


@pytest.mark.parametrize("spec", ["b:5", "w3:n=6;e=0-2,2-4", "zz:1", "s:11"])
def test_gen_bad_spec(capsys, spec):
    rc, out, err = run(capsys, "gen", spec)
    assert rc == 1 and out == "" and "error" in err.lower()


def test_gen_to_file(capsys, tmp_path):
    path = tmp_path / "g.g6"
    rc, out, _ = run(capsys, "gen", "cat123:6,7,10,12", "--out", str(path))
    assert rc == 0 and out == ""
    assert from_graph6(path.read_text().strip()).p == 30


def test_type_lines(capsys, tmp_path):
    path = write(tmp_path, "in.txt", [
        to_graph6(F.cube()).decode(),
        "",
        to_edge_json(F.octahedron()),
        ">>graph6<<" + to_graph6(F.pyramid(5)).decode(),
    ])
    rc, out, _ = run(capsys, "type", path)
    assert rc == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert [r["type"] for r in rows] == [[0, 2], [2, 4], [1, 2]]
    assert [r["id"] for r in rows] == [1, 2, 3]
    assert rows[0]["p"] == 8 and rows[0]["q"] == 12


def test_type_bad_line_continues(capsys, tmp_path):
    path = write(tmp_path, "in.txt", ["Bx", to_graph6(F.tetrahedron()).decode()])
    rc, out, err = run(capsys, "type", path)
    assert rc == 1
    assert json.loads(out)["type"] == [2]
    assert "line 1" in err


def test_empty_input(capsys, tmp_path):
    path = write(tmp_path, "empty.txt", [])
    for cmd in ("type", "classify"):
        rc, out, _ = run(capsys, cmd, path)
        assert rc == 0 and out == ""


def test_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, "type", str(tmp_path / "nope"))
    assert rc == 1 and err


def test_classify_lines(capsys, tmp_path):
    path = write(tmp_path, "in.txt", [to_graph6(F.b_prime_graph(8)).decode(), to_graph6(F.octahedron()).decode()])
    rc, out, _ = run(capsys, "classify", path)
    assert rc == 0
    a, b = (json.loads(x) for x in out.splitlines())
    assert a["table_row"]["id"] == "one:1,2,even" and a["family"] == "bp:8"
    assert b["family"] == "bipyr:4"
    rc, out, _ = run(capsys, "classify", path, "--no-lemmas")
    assert json.loads(out.splitlines()[0])["lemma_report"] is None


def test_classify_non_polyhedral(capsys, tmp_path):
    path = write(tmp_path, "in.txt", ['{"edges": [[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]}'])
    rc, out, _ = run(capsys, "classify", path)
    assert rc == 1
    obj = json.loads(out)
    assert obj["certificate"]["separator"] == [0, 1]


def test_classify_falsification_exit_code(capsys, tmp_path, monkeypatch):
    def boom(g, lemmas=True):
        raise FalsificationError("planted")
    monkeypatch.setattr(cli, "classify", boom)
    path = write(tmp_path, "in.txt", [to_graph6(F.cube()).decode()])
    rc, out, err = run(capsys, "classify", path)
    assert rc == 2
    assert json.loads(out)["falsification"] == "planted"
    assert "FALSIFICATION" in err


def test_verify_falsification_exit_code(capsys, monkeypatch):
    def planted(*a, **k):
        return {"suite": "lemmas", "ok": False}, False
    monkeypatch.setattr(cli, "run_suite", planted)
    rc, out, _ = run(capsys, "verify", "lemmas")
    assert rc == 2 and json.loads(out)["ok"] is False


def test_enumerate(capsys, tmp_path):
    report = tmp_path / "r.json"
    rc, out, err = run(capsys, "enumerate", "tri", "8", "--report", str(report))
    assert rc == 0
    assert len(out.splitlines()) == 14
    obj = json.loads(report.read_text())
    assert obj["count"] == 14 and "elapsed" not in obj
    rc, out, err = run(capsys, "enumerate", "poly", "6")
    assert rc == 0 and len(out.splitlines()) == 7 and json.loads(err.splitlines()[-1])["count"] == 7


def test_enumerate_caps(capsys):
    rc, out, err = run(capsys, "enumerate", "tri", "20")
    assert rc == 1 and out == "" and "--force" in err
    rc, _, err = run(capsys, "enumerate", "poly", "8", "--cap", "7")
    assert rc == 1
    rc, _, err = run(capsys, "enumerate", "poly", "6", "--cap", "50")
    assert rc == 1


def test_verify_families_report(capsys):
    rc, out, _ = run(capsys, "verify", "families", "--samples", "3")
    assert rc == 0
    obj = json.loads(out)
    assert obj["ok"] and obj["failed"] == [] and obj["samples_per_construction"] == 3


def test_repeated_runs_identical(capsys, tmp_path):
    path = write(tmp_path, "in.txt", [to_graph6(F.build(s)).decode() for s in ("t:6", "b:6", "c124:5", "s:7")])
    outs = {run(capsys, "classify", path)[1] for _ in range(2)}
    assert len(outs) == 1
    outs = {run(capsys, "enumerate", "poly", "7")[1] for _ in range(2)}
    assert len(outs) == 1


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code != 0
