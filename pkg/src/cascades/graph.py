"""Simple graphs with an optional ordered pair of terminals.

Vertices are the integers ``0 .. n-1``.  Graphs are immutable; every
operation returns a new graph.  Contraction keeps the smaller endpoint
index and renumbers the vertices above the removed one.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graphs or invalid operations."""


class InvalidEdge(GraphError):
    pass


class ForbiddenTerminalContraction(GraphError):
    pass


class MissingTerminals(GraphError):
    pass


class SizeCapExceeded(GraphError):
    pass


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset
    terminals: tuple[int, int] | None = None
    adj: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        if self.n > MAX_VERTICES:
            raise SizeCapExceeded(f"{self.n} vertices exceeds cap {MAX_VERTICES}")
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range")
            edges.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        if self.terminals is not None:
            x, y = self.terminals
            if x == y or not (0 <= x < self.n and 0 <= y < self.n):
                raise GraphError(f"bad terminals {self.terminals}")
            object.__setattr__(self, "terminals", (int(x), int(y)))
        adj = [0] * self.n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    # construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   terminals: tuple[int, int] | None = None) -> "LabeledGraph":
        return cls(n, frozenset(_norm(u, v) for u, v in edges), terminals)

    @classmethod
    def from_networkx(cls, g, terminals=None) -> "LabeledGraph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        t = None if terminals is None else (index[terminals[0]], index[terminals[1]])
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()), t)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    # queries ---------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def has_terminals(self) -> bool:
        return self.terminals is not None

    def is_terminal(self, v: int) -> bool:
        return self.terminals is not None and v in self.terminals

    @property
    def in_gxy_circ(self) -> bool:
        """Terminals present and not adjacent."""
        return self.terminals is not None and not self.has_edge(*self.terminals)

    def underlying(self) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges) if self.terminals else self

    def with_terminals(self, x: int, y: int) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges, (x, y))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # edits -----------------------------------------------------------------

    def add_edges(self, new: Iterable[Sequence[int]]) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges | {_norm(u, v) for u, v in new}, self.terminals)

    def remove_edges(self, old: Iterable[Sequence[int]]) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges - {_norm(u, v) for u, v in old}, self.terminals)

    def add_vertices(self, k: int) -> "LabeledGraph":
        return LabeledGraph(self.n + k, self.edges, self.terminals)

    def induced(self, vertices: Iterable[int]) -> tuple["LabeledGraph", list[int]]:
        """Induced subgraph, renumbered; returns the graph and the old labels."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        t = None
        if self.terminals and all(z in index for z in self.terminals):
            t = (index[self.terminals[0]], index[self.terminals[1]])
        return LabeledGraph.from_edges(len(keep), edges, t), keep

    def edge_subgraph(self, edges: Iterable[Sequence[int]]) -> tuple["LabeledGraph", list[int]]:
        """Subgraph spanned by ``edges`` (vertices = their ends), renumbered."""
        es = [_norm(u, v) for u, v in edges]
        keep = sorted({v for e in es for v in e})
        index = {v: i for i, v in enumerate(keep)}
        return LabeledGraph.from_edges(len(keep), [(index[u], index[v]) for u, v in es]), keep

    def relabel(self, perm: Sequence[int]) -> "LabeledGraph":
        """Apply ``v -> perm[v]``."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        t = None if self.terminals is None else (perm[self.terminals[0]], perm[self.terminals[1]])
        return LabeledGraph.from_edges(self.n, edges, t)

    def merge(self, keep: int, drop: int) -> "LabeledGraph":
        """Identify ``drop`` into ``keep`` (no adjacency needed), simplify."""
        if keep == drop:
            raise GraphError("cannot merge a vertex with itself")

        def ren(v: int) -> int:
            v = keep if v == drop else v
            return v - 1 if v > drop else v

        edges = {_norm(ren(u), ren(v)) for u, v in self.edges}
        edges = {e for e in edges if e[0] != e[1]}
        t = None
        if self.terminals is not None:
            tx, ty = (ren(z) for z in self.terminals)
            if tx != ty:
                t = (tx, ty)
        return LabeledGraph(self.n - 1, frozenset(edges), t)

    def __str__(self) -> str:
        t = f" t={self.terminals}" if self.terminals else ""
        return f"LabeledGraph(n={self.n}, m={self.m}{t})"


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# minor operations -----------------------------------------------------------


class OpKind(str, Enum):
    DELETE = "-"
    CONTRACT = "/"


@dataclass(frozen=True, order=True)
class MinorOp:
    edge: tuple[int, int]
    kind: OpKind

    def __str__(self) -> str:
        return f"{self.edge[0]}{self.edge[1]}{self.kind.value}"

    def to_json(self) -> list:
        return [self.edge[0], self.edge[1], self.kind.value]


def minor_ops(g: LabeledGraph) -> list[MinorOp]:
    ops = []
    for e in g.sorted_edges():
        ops.append(MinorOp(e, OpKind.DELETE))
        if g.terminals is None or set(e) != set(g.terminals):
            ops.append(MinorOp(e, OpKind.CONTRACT))
    return ops


def apply_minor_op(g: LabeledGraph, op: MinorOp) -> LabeledGraph:
    u, v = _norm(*op.edge)
    if (u, v) not in g.edges:
        raise InvalidEdge(f"{(u, v)} is not an edge")
    if op.kind is OpKind.DELETE:
        return g.remove_edges([(u, v)])
    if g.terminals is not None and {u, v} == set(g.terminals):
        raise ForbiddenTerminalContraction("the terminal pair cannot be contracted")
    # merge() carries a terminal role over to the kept endpoint
    h = g.merge(u, v)
    return h


def augment(g: LabeledGraph) -> LabeledGraph:
    """G+ : add the edge xy if it is absent."""
    if g.terminals is None:
        raise MissingTerminals("augment needs terminals")
    return g.add_edges([g.terminals])


def identify_terminals(g: LabeledGraph) -> LabeledGraph:
    """G/xy : identify the terminals; the result has no terminals."""
    if g.terminals is None:
        raise MissingTerminals("identify_terminals needs terminals")
    x, y = g.terminals
    h = g.merge(min(x, y), max(x, y))
    return LabeledGraph(h.n, h.edges)


# blocks -----------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset
    block_edges: tuple[frozenset, ...]


def blocks(g: LabeledGraph) -> BlockDecomposition:
    """Biconnected components via Hopcroft-Tarjan (iterative)."""
    index = [-1] * g.n
    low = [0] * g.n
    counter = 0
    stack: list[tuple[int, int]] = []
    out_edges: list[frozenset] = []
    cuts = set()
    for root in range(g.n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        children = 0
        work = [(root, -1, iter(g.neighbors(root)))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if index[w] == -1:
                    stack.append((v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        children += 1
                    work.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= index[parent]:
                    if parent != root:
                        cuts.add(parent)
                    comp = set()
                    while True:
                        e = stack.pop()
                        comp.add(_norm(*e))
                        if e == (parent, v):
                            break
                    out_edges.append(frozenset(comp))
        if children > 1:
            cuts.add(root)
    out_edges.sort(key=lambda es: min(es))
    vsets = tuple(frozenset(v for e in es for v in e) for es in out_edges)
    return BlockDecomposition(vsets, frozenset(cuts), tuple(out_edges))


def block_graphs(g: LabeledGraph) -> list[LabeledGraph]:
    return [g.edge_subgraph(es)[0] for es in blocks(g).block_edges]


# standard graphs ---------------------------------------------------------------


def complete(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    return LabeledGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def petersen() -> LabeledGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return LabeledGraph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return LabeledGraph.from_edges(g.n + h.n, edges)


def one_sum(g: LabeledGraph, gv: int, h: LabeledGraph, hv: int) -> LabeledGraph:
    """Glue ``g`` and ``h`` by identifying ``gv`` with ``hv``."""
    u = disjoint_union(g, h)
    return u.merge(gv, g.n + hv)


def iter_edges_text(edges: Iterator[tuple[int, int]]) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)
