"""Slow independent reference implementations used only by the tests."""
from __future__ import annotations

import itertools

import networkx as nx

from cascades.embed import Embedding, euler_genus_of_embedding
from cascades.graph import LabeledGraph


def cyclic_orders(items):
    items = list(items)
    if len(items) <= 2:
        yield tuple(items)
        return
    first = items[0]
    for rest in itertools.permutations(items[1:]):
        yield (first,) + rest


def brute_genus(g: LabeledGraph) -> int:
    """Minimum Euler genus over every rotation system and every signature that
    is +1 on a fixed spanning tree, for a connected graph."""
    nxg = g.to_networkx()
    tree = {tuple(sorted(e)) for e in nx.minimum_spanning_edges(nxg, data=False)}
    cotree = [e for e in g.sorted_edges() if e not in tree]
    best = None
    rot_choices = [list(cyclic_orders(g.neighbors(v))) for v in range(g.n)]
    for rot in itertools.product(*rot_choices):
        for signs in itertools.product((1, -1), repeat=len(cotree)):
            sig = {e: 1 for e in g.edges}
            sig.update(zip(cotree, signs))
            val = euler_genus_of_embedding(g, Embedding(tuple(rot), sig))
            if best is None or val < best:
                best = val
                if best == 0:
                    return 0
    return best


def brute_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or (g1.terminals is None) != (g2.terminals is None):
        return False
    for perm in itertools.permutations(range(g1.n)):
        if g1.terminals is not None:
            x, y = g1.terminals
            if {perm[x], perm[y]} != set(g2.terminals):
                continue
        if all(g2.has_edge(perm[u], perm[v]) for u, v in g1.edges):
            return True
    return False
