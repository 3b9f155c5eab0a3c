"""Minor containment for small graphs, terminals respected."""
from __future__ import annotations

from networkx.algorithms.isomorphism import GraphMatcher

from .canon import canonical_form
from .graph import LabeledGraph, SizeCapExceeded

MINOR_CAP = 20


def _spanning_monomorphic(h: LabeledGraph, g: LabeledGraph) -> bool:
    """Is ``h`` isomorphic to a spanning subgraph of ``g`` (same order)?"""
    if h.m > g.m:
        return False
    gh, gg = h.to_networkx(), g.to_networkx()
    for v in range(h.n):
        gh.nodes[v]["t"] = h.is_terminal(v)
    for v in range(g.n):
        gg.nodes[v]["t"] = g.is_terminal(v)
    gm = GraphMatcher(gg, gh, node_match=lambda a, b: a["t"] == b["t"])
    return gm.subgraph_is_monomorphic()


def is_minor(h: LabeledGraph, g: LabeledGraph, delete_vertices: bool = True) -> bool:
    """True iff ``h`` arises from ``g`` by edge deletions and contractions
    (never contracting the terminal pair) and, when ``delete_vertices`` is set,
    deletions of non-terminal vertices.

    Terminal graphs only contain terminal graphs; a terminal-free ``h`` is
    compared against the underlying graph of ``g``.
    """
    if g.n > MINOR_CAP or h.n > MINOR_CAP:
        raise SizeCapExceeded(f"minor test limited to {MINOR_CAP} vertices")
    if h.terminals is not None and g.terminals is None:
        return False
    if h.terminals is None:
        g = g.underlying()
    if h.n > g.n or h.m > g.m:
        return False
    seen: set[bytes] = set()

    def rec(cur: LabeledGraph) -> bool:
        key = canonical_form(cur)
        if key in seen:
            return False
        seen.add(key)
        if cur.m < h.m:
            return False
        if cur.n == h.n:
            return _spanning_monomorphic(h, cur)
        for u, v in sorted(cur.edges):
            if cur.terminals is not None and {u, v} == set(cur.terminals):
                continue
            if cur.is_terminal(v) and not cur.is_terminal(u):
                u, v = v, u
            if rec(cur.merge(u, v)):
                return True
        if delete_vertices:
            for v in range(cur.n):
                if cur.is_terminal(v):
                    continue
                rest = [w for w in range(cur.n) if w != v]
                sub, _ = cur.induced(rest)
                if rec(sub):
                    return True
        return False

    return rec(g)
