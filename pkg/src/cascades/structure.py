"""Bridges, overlap graphs, separating cycles, K-graphs, separation and linkages."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .embed import (
    Embedding,
    _ear_decomposition,
    _faces_to_embedding,
    _Search,
    _suppress,
    is_planar,
    planar_embedding,
)
from .graph import GraphError, LabeledGraph, augment, blocks


class NotASubgraph(GraphError):
    pass


class NotACycle(GraphError):
    pass


class NonplanarInput(GraphError):
    pass


class WitnessesNotDisjoint(GraphError):
    pass


class AttachmentOffCycle(GraphError):
    pass


def _e(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# bridges


@dataclass(frozen=True)
class Bridge:
    vertices: frozenset
    edges: frozenset
    attachments: frozenset
    trivial: bool

    @property
    def interior(self) -> frozenset:
        return self.vertices - self.attachments

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
            "attachments": sorted(self.attachments),
            "trivial": self.trivial,
        }


@dataclass
class BridgeDecomposition:
    host_vertices: frozenset
    host_edges: frozenset
    bridges: list[Bridge]

    def interiors(self) -> list[frozenset]:
        return [b.interior for b in self.bridges]


def bridges(g: LabeledGraph, host_edges, host_vertices=()) -> BridgeDecomposition:
    """H-bridges of the subgraph H spanned by ``host_edges`` plus ``host_vertices``."""
    he = frozenset(_e(u, v) for u, v in host_edges)
    for e in he:
        if e not in g.edges:
            raise NotASubgraph(f"edge {e} not in graph")
    hv = frozenset(v for e in he for v in e) | frozenset(host_vertices)
    for v in hv:
        if not 0 <= v < g.n:
            raise NotASubgraph(f"vertex {v} not in graph")
    out: list[Bridge] = []
    for u, v in g.edges:
        if (u, v) not in he and u in hv and v in hv:
            out.append(Bridge(frozenset((u, v)), frozenset([(u, v)]), frozenset((u, v)), True))
    seen: set[int] = set()
    for s in range(g.n):
        if s in hv or s in seen:
            continue
        comp = {s}
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in hv and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        es = frozenset(_e(a, b) for a in comp for b in g.neighbors(a))
        att = frozenset(w for a in comp for w in g.neighbors(a) if w in hv)
        out.append(Bridge(frozenset(comp) | att, es, att, False))
    out.sort(key=lambda b: (min(b.vertices), sorted(b.edges)))
    return BridgeDecomposition(hv, he, out)


# ---------------------------------------------------------------------------
# overlap graph and separation


def _check_cycle(g: LabeledGraph, cyc) -> list[int]:
    cyc = list(cyc)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycle("a cycle needs at least three distinct vertices")
    for i in range(len(cyc)):
        if not g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]):
            raise NotACycle(f"{cyc[i]}-{cyc[(i + 1) % len(cyc)]} is not an edge")
    return cyc


def _cycle_edges(cyc) -> list[tuple[int, int]]:
    return [_e(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def _interlaced(pos: dict, a1, a2) -> bool:
    """Do attachment sets a1, a2 contain v1, v3 and v2, v4 in cyclic order?"""
    p1 = sorted(pos[v] for v in a1)
    p2 = [pos[v] for v in a2]
    for i, j in itertools.combinations(p1, 2):
        inside = any(i < q < j for q in p2)
        outside = any(q < i or q > j for q in p2)
        if inside and outside:
            return True
    return False


@dataclass
class OverlapGraph:
    bridges: list[Bridge]
    edges: dict  # (i, j) -> tuple of tags, i < j

    def graph(self) -> nx.Graph:
        og = nx.Graph()
        og.add_nodes_from(range(len(self.bridges)))
        og.add_edges_from(self.edges)
        return og

    def bridge_of(self, v: int) -> int | None:
        for i, b in enumerate(self.bridges):
            if not b.trivial and v in b.interior:
                return i
        return None


def overlap_graph(g: LabeledGraph, cyc) -> OverlapGraph:
    cyc = _check_cycle(g, cyc)
    bd = bridges(g, _cycle_edges(cyc))
    pos = {v: i for i, v in enumerate(cyc)}
    edges = {}
    for i, j in itertools.combinations(range(len(bd.bridges)), 2):
        a1, a2 = bd.bridges[i].attachments, bd.bridges[j].attachments
        tags = []
        if _interlaced(pos, a1, a2):
            tags.append("skew")
        if len(a1 & a2) >= 3:
            tags.append("three-common")
        if tags:
            edges[(i, j)] = tuple(tags)
    return OverlapGraph(bd.bridges, edges)


def separates(g: LabeledGraph, cyc, u: int, v: int, og: OverlapGraph | None = None) -> bool:
    """Odd distance between the bridges containing u and v; different
    components of the overlap graph count as not separated."""
    og = og or overlap_graph(g, cyc)
    bu, bv = og.bridge_of(u), og.bridge_of(v)
    if bu is None or bv is None:
        raise ValueError("u and v must lie off the cycle")
    try:
        d = nx.shortest_path_length(og.graph(), bu, bv)
    except nx.NetworkXNoPath:
        return False
    return d % 2 == 1


# ---------------------------------------------------------------------------
# separating cycles and face distance


def _simple_cycles(g: LabeledGraph, avoid=()) -> list[list[int]]:
    avoid = set(avoid)
    nxg = g.to_networkx()
    nxg.remove_nodes_from(avoid)
    return [c for c in nx.simple_cycles(nxg) if len(c) >= 3]


def separating_cycles(g: LabeledGraph, x: int, y: int) -> list[list[int]]:
    out = []
    for c in _simple_cycles(g, (x, y)):
        if separates(g, c, x, y):
            out.append(c)
    return out


def max_disjoint_separating_cycles(g: LabeledGraph, x: int, y: int) -> int:
    """Exact maximum by brute force over vertex-disjoint families."""
    masks = sorted({sum(1 << v for v in c) for c in separating_cycles(g, x, y)})
    best = 0

    def rec(start: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (len(masks) - start) <= best:
            return
        for i in range(start, len(masks)):
            if not masks[i] & used:
                rec(i + 1, used | masks[i], count + 1)

    rec(0, 0, 0)
    return best


@dataclass
class FaceDistanceResult:
    distance: int
    witness_embedding: Embedding | None
    witness_chain: list  # alternating vertex, face (tuple of vertices), ..., vertex


def planar_face_sets(g: LabeledGraph):
    """Yield the faces (as vertex walks) of every planar embedding of a
    2-connected graph, each embedding once per mirror image."""
    blk = _suppress(g)
    if blk is None:  # a cycle: one embedding
        cyc = _cycle_order(g)
        yield [cyc, cyc[::-1]], None
        return
    search = _Search(blk, None)
    for faces in _all_planar(search):
        walks = []
        for f in faces:
            walk = []
            for v, eid in f:
                a, b, chain = blk.edges[eid]
                bv = blk.verts[v]
                seq = list(chain) if chain[0] == bv else list(reversed(chain))
                walk.extend(seq[:-1])
            walks.append(walk)
        yield walks, (blk, faces)


def _cycle_order(g: LabeledGraph) -> list[int]:
    start = next(v for v in range(g.n) if g.degree(v))
    order = [start]
    prev, cur = None, start
    while True:
        nb = [w for w in g.neighbors(cur) if w != prev]
        nxt = nb[0]
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > g.n:
            raise NotACycle("not a cycle")


def _all_planar(search: _Search):
    """Every complete planar placement of the ears (budget 0)."""

    def rec(faces, remaining, present):
        if not remaining:
            yield faces
            return
        occ: dict[int, list[tuple[int, int]]] = {}
        for fi, f in enumerate(faces):
            for pi, (v, _) in enumerate(f):
                occ.setdefault(v, []).append((fi, pi))
        best = None
        best_k = -1
        for k, ei in enumerate(remaining):
            s, t, _, _ = search.ears[ei]
            if not (present >> s & 1 and present >> t & 1):
                continue
            opts = [(fi, pi, pj) for fi, pi in occ[s] for fj, pj in occ[t] if fi == fj]
            if not opts:
                return
            if best is None or len(opts) < len(best):
                best, best_k = opts, k
        ei = remaining[best_k]
        rest = remaining[:best_k] + remaining[best_k + 1:]
        s, t, inner, eids = search.ears[ei]
        fwd = [(s, eids[0])] + [(inner[i], eids[i + 1]) for i in range(len(inner))]
        back = [(t, eids[-1])] + [(inner[i], eids[i]) for i in range(len(inner) - 1, -1, -1)]
        newp = present
        for v in inner:
            newp |= 1 << v
        for fi, pi, pj in best:
            f = faces[fi]
            w = f[pi:] + f[:pi]
            j = (pj - pi) % len(f)
            new = faces[:fi] + faces[fi + 1:] + [w[:j] + back, w[j:] + fwd]
            yield from rec(new, rest, newp)

    yield from rec(search.init_faces, list(range(len(search.ears))), search.init_present)


def _chain_in_faces(faces: list[list[int]], x: int, y: int):
    """Shortest vertex-face chain from x to y: returns (distance, chain)."""
    if x == y:
        return 0, [x]
    vf: dict[int, list[int]] = {}
    for fi, f in enumerate(faces):
        for v in set(f):
            vf.setdefault(v, []).append(fi)
    # BFS over faces; distance = number of faces in chain - 1
    prev = {}
    queue = deque()
    for fi in vf.get(x, []):
        prev[("f", fi)] = None
        queue.append(("f", fi))
    while queue:
        node = queue.popleft()
        if node[0] == "f":
            for v in set(faces[node[1]]):
                if ("v", v) not in prev:
                    prev[("v", v)] = node
                    if v == y:
                        chain = []
                        cur = ("v", v)
                        while cur is not None:
                            chain.append(cur)
                            cur = prev[cur]
                        chain.reverse()
                        out = [x]
                        for kind, val in chain:
                            out.append(tuple(faces[val]) if kind == "f" else val)
                        return (len(out) - 1) // 2 - 1, out
                    queue.append(("v", v))
        else:
            for fi in vf[node[1]]:
                if ("f", fi) not in prev:
                    prev[("f", fi)] = node
                    queue.append(("f", fi))
    raise ValueError("vertices are not connected")


def _block_face_distance(b: LabeledGraph, u: int, v: int):
    best = None
    for walks, data in planar_face_sets(b):
        d, chain = _chain_in_faces(walks, u, v)
        if best is None or d < best[0]:
            best = (d, chain, data)
            if d == 0:
                break
    return best


def face_distance(g: LabeledGraph, x: int, y: int) -> FaceDistanceResult:
    """Minimum face-distance over all planar embeddings, blockwise."""
    if not g.is_connected():
        raise ValueError("face distance needs a connected graph")
    if not is_planar(g):
        raise NonplanarInput("face distance is defined for planar graphs")
    if x == y:
        return FaceDistanceResult(0, None, [x])
    bd = blocks(g)
    # block-cut tree path from x to y
    bc = nx.Graph()
    for i, vs in enumerate(bd.blocks):
        for v in vs:
            bc.add_edge(("b", i), ("v", v))
    route = nx.shortest_path(bc, ("v", x), ("v", y))
    total = 0
    chain: list = [x]
    emb = None
    single = len(route) == 3
    for k in range(1, len(route) - 1, 2):
        bi = route[k][1]
        a, c = route[k - 1][1], route[k + 1][1]
        sub, labels = g.edge_subgraph(bd.block_edges[bi])
        idx = {w: i for i, w in enumerate(labels)}
        if sub.m == 1:
            d, ch, data = 0, [idx[a], (idx[a], idx[c]), idx[c]], None
        else:
            d, ch, data = _block_face_distance(sub, idx[a], idx[c])
        total += d
        mapped = [labels[z] if isinstance(z, int) else tuple(labels[w] for w in z) for z in ch]
        if len(chain) > 1:
            # the last face before the cut vertex merges with the first one after it
            merged = tuple(chain[-2]) + mapped[1]
            chain = chain[:-2] + [merged] + mapped[2:]
        else:
            chain = mapped
        if single:
            if data is not None:
                emb = _faces_to_embedding(sub, data[0], data[1])
                emb = _relabel_embedding(emb, labels, g) if sub.n == g.n else None
            elif sub.m == g.m:
                emb = planar_embedding(g)
    return FaceDistanceResult(total, emb, chain)


def _relabel_embedding(emb: Embedding, labels: list[int], g: LabeledGraph) -> Embedding:
    rot = [()] * g.n
    for i, r in enumerate(emb.rotation):
        rot[labels[i]] = tuple(labels[u] for u in r)
    sig = {_e(labels[u], labels[v]): s for (u, v), s in emb.signature.items()}
    return Embedding(tuple(rot), sig)


# ---------------------------------------------------------------------------
# K-graphs


@dataclass
class KGraphWitness:
    kind: str  # "K4" or "K23"
    branch_vertices: tuple
    branches: tuple  # paths as vertex tuples between branch vertices
    terminal: int | None = None
    boundary: tuple | None = None  # cycle as vertex tuple
    principal_bridge: Bridge | None = field(default=None, compare=False)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for p in self.branches for v in p)

    @property
    def edges(self) -> frozenset:
        return frozenset(_e(p[i], p[i + 1]) for p in self.branches for i in range(len(p) - 1))

    @property
    def interior(self) -> frozenset:
        """Vertices of L off the boundary cycle."""
        if self.boundary is None:
            return frozenset()
        return self.vertices - frozenset(self.boundary)

    def open_branches(self) -> list[tuple]:
        return [p[1:-1] for p in self.branches]

    def boundary_targets(self) -> list[frozenset]:
        """Branch vertices (K4) or open branches (K23) on the boundary."""
        if self.boundary is None:
            raise ValueError("only z-K-graphs have a boundary")
        if self.kind == "K4":
            return [frozenset([v]) for v in self.branch_vertices if v != self.terminal]
        return [frozenset(p[1:-1]) for p in self.branches if self.terminal not in p]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "branch_vertices": list(self.branch_vertices),
            "branches": [list(p) for p in self.branches],
            "terminal": self.terminal,
            "boundary": list(self.boundary) if self.boundary else None,
        }


def _paths(g: LabeledGraph, s: int, t: int, blocked: int, budget: int):
    """Simple s-t paths avoiding the ``blocked`` vertex mask, length <= budget."""
    out = []
    path = [s]

    def rec(v: int, used: int) -> None:
        if len(path) - 1 >= budget:
            return
        nb = g.adj[v] & ~used
        while nb:
            low = nb & -nb
            w = low.bit_length() - 1
            nb ^= low
            if w == t:
                out.append(tuple(path) + (t,))
                continue
            path.append(w)
            rec(w, used | low)
            path.pop()

    rec(s, blocked | (1 << s))
    return out


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _theta_graphs(g: LabeledGraph, budget: int, must_inner: int | None = None):
    """K2,3-homeomorphs: (w1, w2, three internally disjoint paths)."""
    deg3 = [v for v in range(g.n) if g.degree(v) >= 3]
    for w1, w2 in itertools.combinations(deg3, 2):
        if must_inner in (w1, w2):
            continue
        p1s = _paths(g, w1, w2, 0, budget - 3)
        for p1 in p1s:
            m1 = _mask(p1[1:-1])
            for p2 in _paths(g, w1, w2, m1, budget - len(p1) + 1 - 2):
                if p2 <= p1:
                    continue
                m2 = m1 | _mask(p2[1:-1])
                for p3 in _paths(g, w1, w2, m2, budget - (len(p1) - 1) - (len(p2) - 1)):
                    if p3 <= p2:
                        continue
                    ps = (p1, p2, p3)
                    if sum(len(p) == 2 for p in ps) > 1:
                        continue
                    if must_inner is not None and not any(must_inner in p[1:-1] for p in ps):
                        continue
                    yield (w1, w2), ps


def _k4_graphs(g: LabeledGraph, budget: int, must_branch: int | None = None):
    deg3 = [v for v in range(g.n) if g.degree(v) >= 3]
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    for quad in itertools.combinations(deg3, 4):
        if must_branch is not None and must_branch not in quad:
            continue
        bmask = _mask(quad)

        def rec(k: int, used: int, acc: list, spent: int):
            if k == 6:
                yield tuple(acc)
                return
            a, b = quad[pairs[k][0]], quad[pairs[k][1]]
            left = budget - spent - (5 - k)
            for p in _paths(g, a, b, used | (bmask & ~((1 << a) | (1 << b))), left):
                acc.append(p)
                yield from rec(k + 1, used | _mask(p[1:-1]), acc, spent + len(p) - 1)
                acc.pop()

        for ps in rec(0, 0, [], 0):
            yield quad, ps


def _principal(ambient: LabeledGraph, kind: str, bv, branches) -> Bridge | None:
    es = [_e(p[i], p[i + 1]) for p in branches for i in range(len(p) - 1)]
    bd = bridges(ambient, es)
    if kind == "K4":
        need = [frozenset([v]) for v in bv]
    else:
        need = [frozenset(p[1:-1]) for p in branches]
        if any(not s for s in need):
            return None
    for b in bd.bridges:
        if all(b.attachments & s for s in need):
            return b
    return None


def _witness(kind, bv, branches, z, principal) -> KGraphWitness:
    boundary = None
    if z is not None:
        if kind == "K4":
            others = [v for v in bv if v != z]
            segs = [p for p in branches if z not in (p[0], p[-1])]
            boundary = _join_cycle(segs, others[0])
        else:
            segs = [p for p in branches if z not in p]
            boundary = _join_cycle(segs, bv[0])
    return KGraphWitness(kind, tuple(bv), tuple(branches), z, boundary, principal)


def _join_cycle(segs, start: int) -> tuple:
    segs = [list(s) for s in segs]
    cyc = [start]
    cur = start
    while segs:
        for i, s in enumerate(segs):
            if s[0] == cur:
                nxt = s
            elif s[-1] == cur:
                nxt = s[::-1]
            else:
                continue
            cyc.extend(nxt[1:])
            cur = nxt[-1]
            segs.pop(i)
            break
        else:
            raise ValueError("segments do not form a cycle")
    return tuple(cyc[:-1])


def find_k_graphs(g: LabeledGraph, z: int | None = None, max_edges: int | None = None,
                  cap: int = 100_000, ambient: LabeledGraph | None = None) -> list[KGraphWitness]:
    """K-graphs of ``g`` (certified in ``ambient``, default ``g``), in order of size.

    With a terminal ``z`` this returns z-K-graphs: pre-K-graphs certified in
    the augmented graph, z a branch vertex (K4) or on an open branch (K23).
    """
    if z is not None:
        ambient = ambient or augment(g)
    ambient = ambient or g
    budget = g.m if max_edges is None else max_edges
    out = []
    for bv, ps in _k4_graphs(g, budget, must_branch=z):
        pb = _principal(ambient, "K4", bv, ps)
        if pb is not None:
            out.append(_witness("K4", bv, ps, z, pb))
            if len(out) >= cap:
                break
    for bv, ps in _theta_graphs(g, budget, must_inner=z):
        if len(out) >= cap:
            break
        pb = _principal(ambient, "K23", bv, ps)
        if pb is not None:
            out.append(_witness("K23", bv, ps, z, pb))
    out.sort(key=lambda w: (len(w.edges), w.kind, sorted(w.edges)))
    return out


def disjoint_xy_k_graphs(g: LabeledGraph, cap: int = 100_000):
    """A vertex-disjoint (x-K-graph, y-K-graph) pair of least total size, or None."""
    if g.terminals is None:
        raise GraphError("terminals required")
    x, y = g.terminals
    amb = augment(g)
    for budget in range(6, g.m + 1):
        lx = find_k_graphs(g, x, max_edges=budget, cap=cap, ambient=amb)
        ly = find_k_graphs(g, y, max_edges=budget, cap=cap, ambient=amb)
        best = None
        for a in lx:
            va = a.vertices
            for b in ly:
                if va & b.vertices:
                    continue
                size = len(a.edges) + len(b.edges)
                if best is None or size < best[0]:
                    best = (size, a, b)
        if best is not None:
            # a cheaper pair would have its larger member within size - 6
            lim = best[0] - 6
            if lim > budget:
                lx = find_k_graphs(g, x, max_edges=lim, cap=cap, ambient=amb)
                ly = find_k_graphs(g, y, max_edges=lim, cap=cap, ambient=amb)
                for a in lx:
                    for b in ly:
                        if a.vertices & b.vertices:
                            continue
                        size = len(a.edges) + len(b.edges)
                        if size < best[0]:
                            best = (size, a, b)
            return best[1], best[2]
    return None


def has_two_disjoint_k_graphs(g: LabeledGraph, cap: int = 20_000) -> bool:
    """Two vertex-disjoint K-graphs (each certified in g); forces genus >= 2."""
    if g.n < 8:
        return False
    ks = find_k_graphs(g, None, cap=cap)
    masks = [_mask(k.vertices) for k in ks]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not masks[i] & masks[j]:
                return True
    return False


# ---------------------------------------------------------------------------
# separation and linkages


@dataclass
class SeparationResult:
    k: int
    cut: frozenset
    case: str  # "i", "ii" or "iii": which of U, U+x, U+y completes the block
    paths: list


def _disjoint_paths(g: LabeledGraph, sources, sinks, forbidden, banned_edges=frozenset()):
    """Max vertex-disjoint paths from ``sources`` to ``sinks`` with inner
    vertices outside ``forbidden``, sources and sinks.

    Returns (count, paths, min vertex cut)."""
    sources, sinks = set(sources), set(sinks)
    free = set(range(g.n)) - set(forbidden) - sources - sinks
    d = nx.DiGraph()
    S, T = "S", "T"
    usable = sources | sinks | free
    for v in usable:
        d.add_edge(("i", v), ("o", v), capacity=1)
    for s in sources:
        d.add_edge(S, ("i", s))
    for t in sinks:
        d.add_edge(("o", t), T)
    tails = (sources | free) - sinks
    heads = free | sinks
    for u, v in g.edges:
        if (u, v) in banned_edges:
            continue
        for a, b in ((u, v), (v, u)):
            if a in tails and b in heads:
                d.add_edge(("o", a), ("i", b))
    if S not in d or T not in d:
        return 0, [], frozenset()
    value, flow = nx.maximum_flow(d, S, T)
    _, (reach, _) = nx.minimum_cut(d, S, T)
    cut = frozenset(v for v in usable if ("i", v) in reach and ("o", v) not in reach)
    paths = []
    for s in sorted(sources):
        if flow[S].get(("i", s), 0) != 1:
            continue
        p = [s]
        cur = s
        while flow[("o", cur)].get(T, 0) != 1:
            cur = next(b for b, f in flow[("o", cur)].items() if f == 1 and b != T)[1]
            p.append(cur)
        paths.append(tuple(p))
    return int(value), paths, cut


def separation_number(g: LabeledGraph, lx: KGraphWitness, ly: KGraphWitness) -> SeparationResult:
    if lx.vertices & ly.vertices:
        raise WitnessesNotDisjoint("K-graphs share a vertex")
    bx, by = set(lx.boundary), set(ly.boundary)
    banned = lx.edges | ly.edges
    forb = lx.vertices | ly.vertices
    k, paths, cut = _disjoint_paths(g, bx, by, forb, banned)
    kx, _, _ = _disjoint_paths(g, bx, ly.vertices, forb, banned)
    ky, _, _ = _disjoint_paths(g, lx.vertices, by, forb, banned)
    case = "i"
    if kx > k:
        case = "iii"
    elif ky > k:
        case = "ii"
    return SeparationResult(k, cut, case, paths)


@dataclass
class Foot:
    u: int
    path: tuple
    removable: bool


@dataclass
class LinkageWitness:
    core: KGraphWitness
    U: frozenset
    paths: list
    boundary_access_paths: list
    feet: list[Foot]

    def removable(self) -> dict:
        return {f.u: f.removable for f in self.feet}


def _access_path(g: LabeledGraph, core: KGraphWitness, src: frozenset, U) -> tuple | None:
    if src & set(U):
        return (min(src & set(U)),)
    forb = core.vertices
    k, paths, _ = _disjoint_paths(g, src, U, forb - set(U), core.edges)
    return paths[0] if k else None


def _linkage_paths(g: LabeledGraph, core: KGraphWitness, U):
    U = frozenset(U)
    k, paths, _ = _disjoint_paths(g, core.boundary, U, core.vertices - U, core.edges)
    if k < len(U):
        return None
    access = []
    for t in core.boundary_targets():
        p = _access_path(g, core, t, U)
        if p is None:
            return None
        access.append(p)
    return paths, access


def check_linkage(g: LabeledGraph, core: KGraphWitness, U) -> LinkageWitness | None:
    """Is ``g`` (taken as the host H) a U-linkage of ``core``?"""
    U = frozenset(U)
    res = _linkage_paths(g, core, U)
    if res is None:
        return None
    paths, access = res
    feet = []
    for u in sorted(U):
        if g.degree(u) >= 2 or u in core.vertices:
            fp = (u,)
        else:
            fp = [u]
            prev, cur = None, u
            while g.degree(cur) <= 2 and not (cur != u and cur in core.vertices):
                nb = [w for w in g.neighbors(cur) if w != prev]
                if not nb:
                    break
                prev, cur = cur, nb[0]
                fp.append(cur)
            fp = tuple(fp)
        rem = _linkage_paths(g, core, U - {u}) is not None
        feet.append(Foot(u, fp, rem))
    return LinkageWitness(core, U, paths, access, feet)


def blocks_from(g: LabeledGraph, lz: KGraphWitness, lo: KGraphWitness, U, z: int) -> bool:
    """Does U block lz from lo: U + z separates them and lz is U-linked?"""
    U = frozenset(U)
    sep = U | {z}
    seen = set(lz.vertices - sep)
    queue = list(seen)
    while queue:
        v = queue.pop()
        for w in g.neighbors(v):
            if w not in sep and w not in seen:
                seen.add(w)
                queue.append(w)
    if seen & (lo.vertices - sep):
        return False
    k, _, _ = _disjoint_paths(g, lz.boundary, U, lz.vertices - U, lz.edges)
    return k >= len(U)


# ---------------------------------------------------------------------------
# disk embeddings


def disk_embeddable(g: LabeledGraph, cyc) -> tuple[bool, str | None]:
    """Can g be drawn in a disk with ``cyc`` as the boundary?  On failure the
    obstruction is tagged 'crossing-paths', 'tripod' or 'kuratowski'."""
    cyc = _check_cycle(g, cyc)
    bd = bridges(g, _cycle_edges(cyc))
    for b in bd.bridges:
        if not b.attachments:
            raise AttachmentOffCycle("a component does not touch the cycle")
    apex = g.add_vertices(1).add_edges((g.n, v) for v in cyc)
    if is_planar(apex):
        return True, None
    pos = {v: i for i, v in enumerate(cyc)}
    if _crossing_paths(g, cyc, pos):
        return False, "crossing-paths"
    # bridges confined to three attachments that cannot share the disk
    for tri in itertools.combinations(cyc, 3):
        group = [b for b in bd.bridges if not b.trivial and b.attachments <= set(tri)]
        if group and not is_planar(_with_apex(g, group, cyc)):
            return False, "tripod"
    return False, "kuratowski"


def _with_apex(g: LabeledGraph, group, cyc) -> LabeledGraph:
    es = set(_cycle_edges(cyc)).union(*(b.edges for b in group))
    return LabeledGraph.from_edges(g.n + 1, list(es) + [(g.n, v) for v in cyc])


def _crossing_paths(g: LabeledGraph, cyc, pos) -> bool:
    on = set(cyc)
    n = len(cyc)
    inner_mask = _mask(on)

    def cpaths(a: int, c: int):
        # paths a..c with interior off the cycle (chords included)
        return _paths(g, a, c, inner_mask & ~((1 << a) | (1 << c)), g.n)

    for a, c in itertools.combinations(cyc, 2):
        i, j = sorted((pos[a], pos[c]))
        if j - i < 2 or (i == 0 and j == n - 1):
            continue
        ins = [v for v in cyc if i < pos[v] < j]
        outs = [v for v in cyc if pos[v] < i or pos[v] > j]
        p1s = cpaths(a, c)
        if not p1s:
            continue
        for b in ins:
            for d in outs:
                for p1 in p1s:
                    if p1 == (a, c) and g.has_edge(a, c) and _e(a, c) in _cycle_edges(cyc):
                        continue
                    m1 = _mask(p1)
                    for p2 in _paths(g, b, d, (inner_mask | m1) & ~((1 << b) | (1 << d)), g.n):
                        if _e(b, d) in _cycle_edges(cyc) and len(p2) == 2:
                            continue
                        return True
    return False
