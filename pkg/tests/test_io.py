import pytest

from cascades.graph import complete
from cascades.graph_io import (
    ParseError, format_edge_list, from_graph6, parse_edge_list, read_graphs, to_graph6,
)


def test_roundtrip_edge_list():
    g = complete(4).with_terminals(0, 3)
    assert parse_edge_list(format_edge_list(g)) == [g]


def test_roundtrip_graph6():
    g = complete(5).with_terminals(1, 4)
    assert from_graph6(to_graph6(g)) == g


def test_parse_error_has_line():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("n 3\n0 1\n1 7\n", "f.txt")
    assert exc.value.line == 3 and "f.txt:3" in str(exc.value)


def test_several_graphs(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# two\nn 2\n0 1\n\nn 3\nt 0 2\n0 1\n1 2\n")
    gs = read_graphs(p)
    assert [g.n for g in gs] == [2, 3] and gs[1].terminals == (0, 2)


def test_g6_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(to_graph6(complete(5)) + "\n!!bad\n")
    with pytest.raises(ParseError) as exc:
        read_graphs(p)
    assert exc.value.line == 2
