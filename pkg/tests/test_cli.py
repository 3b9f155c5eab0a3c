import json

import pytest

from cascades.cli import EXIT_OK, EXIT_USAGE, main
from cascades.graph import complete, complete_bipartite
from cascades.graph_io import format_edge_list

from conftest import G_CYL, g_star


@pytest.fixture
def files(tmp_path):
    def write(name, *graphs):
        p = tmp_path / name
        p.write_text("".join(format_edge_list(g) for g in graphs))
        return str(p)
    return write


def test_genus(files, tmp_path, capsys):
    tree = "n 4\n0 1\n1 2\n1 3\n"
    (tmp_path / "tree.txt").write_text(tree)
    out = tmp_path / "r.json"
    rc = main(["--out", str(out), "genus", files("k5.txt", complete(5)), str(tmp_path / "tree.txt")])
    assert rc == EXIT_OK
    rows = json.loads(out.read_text())["graphs"]
    assert [r["genus"] for r in rows] == [1, 0]
    assert "genus 1" in capsys.readouterr().out


def test_genus_plus_and_witness(files, tmp_path):
    out = tmp_path / "r.json"
    assert main(["--out", str(out), "genus", "--witness", files("c.txt", G_CYL)]) == EXIT_OK
    (row,) = json.loads(out.read_text())["graphs"]
    assert row["genus"] == 0 and row["genus_plus"] == 2 and "rotation" in row["witness"]


def test_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("n 3\n0 1\n1 x\n")
    assert main(["genus", str(p)]) == EXIT_USAGE
    assert "bad.txt:3" in capsys.readouterr().err


def test_usage_errors(files):
    assert main(["nope"]) == EXIT_USAGE
    assert main(["--timeout", "0", "genus", files("k.txt", complete(4))]) == EXIT_USAGE
    assert main(["--workers", "0", "genus", files("k.txt", complete(4))]) == EXIT_USAGE


def test_env_override(files, monkeypatch):
    monkeypatch.setenv("CASCADES_TIMEOUT", "-3")
    assert main(["genus", files("k.txt", complete(4))]) == EXIT_USAGE


def test_classify(files, tmp_path):
    out = tmp_path / "r.json"
    rc = main(["--out", str(out), "classify",
               files("g.txt", g_star(), G_CYL, complete_bipartite(3, 3))])
    assert rc == EXIT_OK
    star, cyl, plain = json.loads(out.read_text())["reports"]
    assert star["classes"]["in_S1"] is True
    assert cyl["classes"]["is_cascade"] is False
    assert "is_cascade" not in plain["classes"] and plain["classes"]["in_E_k"] is True


def test_cache_dir_created_and_stable(files, tmp_path):
    cache = tmp_path / "nested" / "cache"
    src = files("k.txt", complete(6), complete_bipartite(3, 4))
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        assert main(["--cache", str(cache), "--out", str(out), "genus", src]) == EXIT_OK
        outs.append(out.read_text())
    assert (cache / "genus.tsv").exists()
    assert outs[0] == outs[1]


def test_census_bases_only(tmp_path, capsys):
    out = tmp_path / "census"
    assert main(["--out", str(out), "census", "--bases-only"]) == EXIT_OK
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["bases_only"] and manifest["complete"]
    assert manifest["count"] == 15
    assert all(m["provenance"] and m["provenance"][0]["base"] for m in manifest["members"])
    assert len(list(out.glob("member_*.txt"))) == 15
    assert manifest["verification"]["passed"] == manifest["verification"]["checked"]
    assert "census: 15 graphs" in capsys.readouterr().out
