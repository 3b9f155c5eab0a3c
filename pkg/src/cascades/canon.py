"""Canonical labeling under terminal-respecting isomorphism.

Colour refinement plus individualization, taking the lexicographically
smallest relabeled edge list over all leaves of the search tree.  Both
terminals start in one shared colour class, so exchanging x and y is an
allowed isomorphism while terminals never map to non-terminals.
Automorphisms found at equal leaves prune sibling branches.
"""
from __future__ import annotations

from functools import lru_cache

from .graph import LabeledGraph


def _refine(g: LabeledGraph, colors: list[int]) -> list[int]:
    """Equitable refinement; colour ids are ranks, stable in the old order."""
    n = g.n
    adj = g.adj
    while True:
        sigs = []
        for v in range(n):
            nb = adj[v]
            counts = []
            while nb:
                low = nb & -nb
                counts.append(colors[low.bit_length() - 1])
                nb ^= low
            counts.sort()
            sigs.append((colors[v], tuple(counts)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _leaf_code(g: LabeledGraph, colors: list[int]) -> tuple:
    return tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in g.edges))


def _find(parent: dict, a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def canonical_labeling(g: LabeledGraph) -> tuple[tuple, list[int]]:
    """Return (code, perm) where perm[v] is the canonical position of v."""
    n = g.n
    if n == 0:
        return (), []
    init = [1 if g.is_terminal(v) else 0 for v in range(n)]
    best: list = [None, None]
    autos: list[list[int]] = []

    def search(colors: list[int], prefix: tuple[int, ...]) -> None:
        colors = _refine(g, colors)
        k = max(colors) + 1
        if k == n:
            code = _leaf_code(g, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, colors
            elif code == best[0]:
                inv = [0] * n
                for v, c in enumerate(best[1]):
                    inv[c] = v
                autos.append([inv[colors[v]] for v in range(n)])
            return
        # target cell: smallest non-singleton, first by colour
        sizes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            sizes.setdefault(c, []).append(v)
        cell = min((vs for vs in sizes.values() if len(vs) > 1), key=lambda vs: (len(vs), colors[vs[0]]))
        c0 = colors[cell[0]]
        explored: list[int] = []
        for v in cell:
            if explored and _same_orbit(v, explored, prefix, autos):
                continue
            explored.append(v)
            child = [2 * c + (0 if c != c0 or u == v else 1) for u, c in enumerate(colors)]
            search(child, prefix + (v,))

    search(init, ())
    return best[0], best[1]


def _same_orbit(v: int, explored: list[int], prefix: tuple[int, ...], autos: list[list[int]]) -> bool:
    gens = [a for a in autos if all(a[p] == p for p in prefix)]
    if not gens:
        return False
    parent = {w: w for w in range(len(autos[0]))}
    for a in gens:
        for w, img in enumerate(a):
            ra, rb = _find(parent, w), _find(parent, img)
            if ra != rb:
                parent[ra] = rb
    rv = _find(parent, v)
    return any(_find(parent, w) == rv for w in explored)


@lru_cache(maxsize=200_000)
def canonical_form(g: LabeledGraph) -> bytes:
    """Byte code equal for two graphs iff they are isomorphic (terminals respected)."""
    code, _ = canonical_labeling(g)
    head = bytes([g.n, 1 if g.terminals is not None else 0])
    return head + bytes(x for e in code for x in e)


def canonical_graph(g: LabeledGraph) -> LabeledGraph:
    """The canonical representative; terminals, if any, are the two last vertices."""
    _, perm = canonical_labeling(g)
    if g.n == 0:
        return g
    return g.relabel(perm)


def is_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or (g1.terminals is None) != (g2.terminals is None):
        return False
    return canonical_form(g1) == canonical_form(g2)
