import json
import subprocess
import sys

import pytest

from stpoly.cli import main
from stpoly.io import parse_document
from stpoly.render import render_svg


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, corpus_dir):
    code, out, _ = run(capsys, "validate", corpus_dir / "triangle-a.json")
    assert code == 0 and out.splitlines() == ["valid", "(0,0) delzant", "(4,0) delzant", "(2,1) fake(1)"]
    code, out, err = run(capsys, "validate", corpus_dir / "not-delzant-triangle.json")
    assert code == 1 and "(2,1)" in err and "det 4" in err
    code, out, _ = run(capsys, "validate", corpus_dir / "delzant-triangle-halfspaces.json")
    assert code == 0 and out == "delzant\n"


def test_equiv(capsys, corpus_dir):
    assert run(capsys, "equiv", corpus_dir / "triangle-a.json", corpus_dir / "triangle-b.json")[0] == 0
    assert run(capsys, "equiv", corpus_dir / "triangle-a.json", corpus_dir / "hidden-a.json")[0] == 1


def test_canon_is_orbit_constant(capsys, corpus_dir):
    outs = {run(capsys, "canon", corpus_dir / f"2ff-{s}.json")[1] for s in ("uu", "ud", "du", "dd")}
    assert len(outs) == 1
    doc = parse_document(outs.pop())
    assert all(c.cut == 1 for c in doc.representative.marks)


def test_act_and_flip(capsys, corpus_dir, tmp_path):
    code, out, _ = run(capsys, "flip", corpus_dir / "triangle-a.json", "--cut", 0)
    assert code == 0
    assert parse_document(out).representative == parse_document(
        (corpus_dir / "triangle-b.json").read_text()).representative
    code, out, _ = run(capsys, "act", corpus_dir / "triangle-a.json", "--shear", 1, "--translate", "1/2", "--flips", "down")
    assert code == 0
    f = tmp_path / "moved.json"
    f.write_text(out)
    assert run(capsys, "equiv", f, corpus_dir / "triangle-a.json")[0] == 0
    assert run(capsys, "act", corpus_dir / "triangle-a.json", "--translate", "0.5")[0] == 2
    assert run(capsys, "act", corpus_dir / "triangle-a.json", "--flips", "up,up")[0] == 2
    assert run(capsys, "flip", corpus_dir / "triangle-a.json", "--cut", 3)[0] == 2


def test_chop_unchop_minimal(capsys, corpus_dir, tmp_path):
    code, out, _ = run(capsys, "chop", corpus_dir / "unit-square.json", "--vertex", 0, "--size", "1/2")
    assert code == 0
    f = tmp_path / "pentagon.json"
    f.write_text(out)
    assert run(capsys, "minimal", f)[1] == "not-minimal(edge=0, flips=[])\n"
    code, out, _ = run(capsys, "unchop", f, "--edge", 0)
    assert code == 0 and out == (corpus_dir / "unit-square.json").read_text()
    code, _, err = run(capsys, "unchop", corpus_dir / "unit-square.json", "--edge", 0)
    assert code == 1 and "cannot be un-chopped" in err
    code, _, err = run(capsys, "chop", corpus_dir / "unit-square.json", "--vertex", 0, "--size", 2)
    assert code == 1 and "refused" in err
    assert run(capsys, "minimal", corpus_dir / "type1-a2.json")[1] == "type1(a=2)\n"


def test_transition(capsys, corpus_dir):
    code, out, err = run(capsys, "transition", corpus_dir / "type1-a2.json", "--mark", 0, "--dir", "up")
    assert code == 1 and "(2,1)" in err and "det 4" in err
    code, out, _ = run(capsys, "transition", corpus_dir / "type1-a2.json", "--mark", 0, "--dir", "down")
    assert code == 0 and json.loads(out)["vertices"] == [["0", "0"], ["2", "0"], ["4", "2"]]
    assert run(capsys, "transition", corpus_dir / "family-middle-up.json", "--mark", 0, "--dir", "up")[0] == 0
    assert run(capsys, "transition", corpus_dir / "family-middle-up.json", "--mark", 0, "--dir", "down")[0] == 0


def test_delzant_commands(capsys, corpus_dir):
    code, out, _ = run(capsys, "delzant-construct", corpus_dir / "delzant-triangle-halfspaces.json")
    assert code == 0
    lines = out.splitlines()
    assert lines[lines.index("kernel") + 1] == "1 1 1"
    assert lines[lines.index("level") + 1] == "-1"
    code, out, _ = run(capsys, "delzant-construct", corpus_dir / "delzant-triangle.json")
    assert code == 0 and "1 1 1" in out.splitlines()
    code, out, err = run(capsys, "delzant-check", corpus_dir / "not-delzant-triangle.json")
    assert code == 1 and out == "not delzant\n" and "(2,1)" in err
    assert run(capsys, "delzant-construct", corpus_dir / "not-delzant-triangle.json")[0] == 1
    assert run(capsys, "delzant-check", corpus_dir / "triangle-a.json")[0] == 2


def test_render(capsys, corpus_dir, tmp_path):
    out_file = tmp_path / "t.svg"
    assert run(capsys, "render", corpus_dir / "2ff-uu.json", "-o", out_file)[0] == 0
    doc = parse_document((corpus_dir / "2ff-uu.json").read_text())
    assert out_file.read_text() == render_svg(doc.representative)
    assert run(capsys, "render", corpus_dir / "not-delzant-triangle.json")[0] == 1


def test_labels(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "labels", "extend", "--s0", "1/2 + Y", "--chain", "2*Y")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 6 and data["g"][1][0] == "1/2*Y"
    monkeypatch.setenv("STPOLY_TRUNCATION_ORDER", "2")
    code, out, _ = run(capsys, "labels", "extend", "--s0", "Y", "--chain", "Y + X*Y")
    assert json.loads(out)["order"] == 2
    assert run(capsys, "labels", "extend", "--s0", "0.5*Y")[0] == 2
    assert run(capsys, "labels", "extend", "--s0", "Y", "--chain=-Y")[0] == 1
    monkeypatch.delenv("STPOLY_TRUNCATION_ORDER")

    doc = {
        "schema": 1,
        "vertices": [["0", "0"], ["3", "0"], ["2", "1"], ["1", "1"]],
        "marks": [{"x": "1", "y": "2/5", "cut": "up"}, {"x": "2", "y": "3/4", "cut": "up"}],
        "labels": {"order": 3, "simple": [{"series": "1/3*X + Y", "kappa": 0},
                                         {"series": "Y", "kappa": 1}]},
    }
    f = tmp_path / "labeled.json"
    f.write_text(json.dumps(doc))
    assert run(capsys, "labels", "verify", f)[0] == 0
    code, out, _ = run(capsys, "labels", "act", f, "--shear", 1, "--flips", "down,up")
    assert code == 0
    g = tmp_path / "moved.json"
    g.write_text(out)
    assert json.loads(out)["labels"]["simple"][1]["kappa"] == 3
    assert run(capsys, "equiv", f, g)[0] == 0
    doc["labels"]["simple"][1]["kappa"] = 2
    h = tmp_path / "other.json"
    h.write_text(json.dumps(doc))
    assert run(capsys, "equiv", f, h)[0] == 1


@pytest.mark.parametrize("argv", [[], ["bogus"], ["validate"], ["chop", "x.json", "--vertex", "a"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_io_and_parse_errors(capsys, tmp_path):
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": 1, "vertices": [["0","0"],["1","0"],["0","0.5"]]}')
    code, _, err = run(capsys, "validate", bad)
    assert code == 2 and "floating point forbidden" in err and "$.vertices[2][1]" in err


def test_strict_flag(capsys, tmp_path):
    f = tmp_path / "cw.json"
    f.write_text('{"schema": 1, "vertices": [["0","0"],["0","1"],["1","0"]]}')
    code, _, err = run(capsys, "validate", f)
    assert code == 0 and "warning" in err
    assert run(capsys, "--strict", "validate", f)[0] == 2


def test_module_entry_point(corpus_dir):
    proc = subprocess.run([sys.executable, "-m", "stpoly", "validate", str(corpus_dir / "hidden-a.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "(1,1) hidden(1)" in proc.stdout
