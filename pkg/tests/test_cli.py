"""Command-line surface: subcommands, formats, exit codes."""

import json

import pytest

from halindraw.cli import main


@pytest.fixture
def tree_file(tmp_path):
    p = tmp_path / "t.tree"
    p.write_text("(a,(b,),c)")
    return p


def test_width(tree_file, capsys):
    assert main(["width", str(tree_file)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rpw"] == 2 and doc["chiExt"] == 0


def test_draw_validate_render(tree_file, tmp_path, capsys):
    out = tmp_path / "d.json"
    svg = tmp_path / "d.svg"
    assert main(["draw", str(tree_file), "--out", str(out),
                 "--svg", str(svg)]) == 0
    assert main(["validate", str(out)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["planar"] and doc["planeEmbedding"] and doc["straightLine"]
    assert main(["validate", str(out), "--bound", "thm6",
                 "--params", "rpw=2", "chi=0"]) == 0
    assert main(["render", str(out), "--out", str(tmp_path / "r.svg")]) == 0
    assert svg.read_text().startswith("<?xml")


def test_draw_modes(tree_file, tmp_path):
    for mode in ("ymonotone", "polyline-transform"):
        out = tmp_path / f"{mode}.json"
        assert main(["draw", str(tree_file), "--mode", mode,
                     "--out", str(out)]) == 0
        assert out.exists()
    out = tmp_path / "skirted.json"
    assert main(["draw", str(tree_file), "--type", "WNW",
                 "--root", "auto", "--out", str(out)]) == 0


def test_gen_roundtrip(tmp_path):
    out = tmp_path / "c2.tree"
    assert main(["gen", "C", "--w", "2", "--S", "3", "--L", "1",
                 "--out", str(out)]) == 0
    assert main(["width", str(out), "--out", str(tmp_path / "w.json")]) == 0
    doc = json.loads((tmp_path / "w.json").read_text())
    assert doc["rpw"] <= 3
    assert main(["gen", "Chat", "--w", "2", "--S", "2", "--L", "1",
                 "--format", "edges", "--out", str(tmp_path / "chat.tree")]) == 0


def test_batch(tmp_path):
    for i, text in enumerate(["(a,(b,),c)", "(,,)"]):
        (tmp_path / f"t{i}.tree").write_text(text)
    outdir = tmp_path / "out"
    outdir.mkdir()
    assert main(["draw", "--batch", str(tmp_path), "--out", str(outdir)]) == 0
    assert len(list(outdir.glob("*.json"))) == 2


def test_input_error_exit_code(tmp_path):
    bad = tmp_path / "bad.tree"
    bad.write_text("((,)")
    assert main(["width", str(bad)]) == 2
    assert main(["width", str(tmp_path / "missing.tree")]) == 2


def test_validation_failure_exit_code(tmp_path, tree_file):
    out = tmp_path / "d.json"
    main(["draw", str(tree_file), "--out", str(out)])
    # break the drawing: move a vertex onto another's layer/column
    doc = json.loads(out.read_text())
    names = list(doc["vertexPos"])
    doc["vertexPos"][names[0]] = doc["vertexPos"][names[1]]
    out.write_text(json.dumps(doc))
    assert main(["validate", str(out)]) == 1
