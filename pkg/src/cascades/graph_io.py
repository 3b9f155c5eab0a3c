"""Text formats: the edge-list format and graph6 with a terminal sidecar."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from .graph import GraphError, LabeledGraph


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = f"{source or '<input>'}:{line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.source = source


def parse_edge_list(text: str, source: str | None = None) -> list[LabeledGraph]:
    """Parse one or more graphs; each starts with ``n <count>``.

    Optional ``t <x> <y>`` gives terminals; other lines are ``u v`` pairs.
    Blank lines and ``#`` comments are ignored.
    """
    graphs: list[LabeledGraph] = []
    n = None
    terms = None
    edges: list[tuple[int, int]] = []
    start = None

    def flush():
        if n is None:
            return
        try:
            graphs.append(LabeledGraph.from_edges(n, edges, terms))
        except GraphError as exc:
            raise ParseError(str(exc), start, source) from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "n":
                if len(parts) != 2:
                    raise ValueError("expected 'n <count>'")
                flush()
                n, terms, edges, start = int(parts[1]), None, [], lineno
                if n < 0:
                    raise ValueError("negative vertex count")
            elif parts[0] == "t":
                if n is None or len(parts) != 3:
                    raise ValueError("expected 't <x> <y>' after a header")
                terms = (int(parts[1]), int(parts[2]))
            else:
                if n is None or len(parts) != 2:
                    raise ValueError("expected 'u v'")
                u, v = int(parts[0]), int(parts[1])
                if not (0 <= u < n and 0 <= v < n) or u == v:
                    raise ValueError(f"bad edge {u} {v}")
                edges.append((u, v))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, source) from None
    flush()
    if not graphs:
        raise ParseError("no graph found", None, source)
    return graphs


def format_edge_list(g: LabeledGraph) -> str:
    lines = [f"n {g.n}"]
    if g.terminals is not None:
        lines.append(f"t {g.terminals[0]} {g.terminals[1]}")
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_graph6(line: str) -> LabeledGraph:
    """One graph6 line, optionally followed by a tab and ``x y``."""
    fields = line.strip().split()
    if not fields:
        raise ParseError("empty graph6 line")
    try:
        nxg = nx.from_graph6_bytes(fields[0].encode())
    except Exception as exc:  # networkx raises several types
        raise ParseError(f"bad graph6: {exc}") from None
    g = LabeledGraph.from_networkx(nxg)
    if len(fields) == 3:
        g = g.with_terminals(int(fields[1]), int(fields[2]))
    elif len(fields) != 1:
        raise ParseError("expected 'g6' or 'g6 x y'")
    return g


def to_graph6(g: LabeledGraph) -> str:
    code = nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
    if g.terminals is not None:
        return f"{code}\t{g.terminals[0]} {g.terminals[1]}"
    return code


def read_graphs(path: str | Path) -> list[LabeledGraph]:
    """Read an edge-list file, or graph6 lines when the suffix is .g6/.tsv."""
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".g6", ".tsv"):
        out = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                out.append(from_graph6(line))
            except ParseError as exc:
                raise ParseError(str(exc), lineno, str(path)) from None
        return out
    return parse_edge_list(text, str(path))


def iter_graph6(lines: Iterable[str]) -> Iterator[LabeledGraph]:
    for line in lines:
        if line.strip() and not line.startswith("#"):
            yield from_graph6(line)
