"""Combinatorial embeddings and an exact Euler genus engine.

An embedding is a rotation system plus an edge signature.  Faces are traced
with the usual signed face-tracing walk; each face is met twice (once per
direction) among the orbits of the walk on flags ``(v, e, s)``.

The genus search works block by block.  Inside a block, maximal chains of
degree-2 vertices are suppressed into single edges of a multigraph, an ear
decomposition of that multigraph is fixed, and ears are inserted one at a
time into a face-set.  Inserting an ear between two corners of one face
either splits it (genus +0) or twists through it (+1); joining corners of
two faces merges them (+2) in one of two relative orientations.  Every
embedding of the block restricts to an embedding of each ear prefix, so the
search is exhaustive.  The ear with the fewest admissible placements under
the remaining budget is always placed next.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import networkx as nx

from .graph import LabeledGraph, MissingTerminals, augment, blocks, bits

Face = list  # list of (vertex, edge_id) pairs; leave vertex along edge_id


class GenusTimeout(RuntimeError):
    pass


class DisconnectedGraph(ValueError):
    pass


# ---------------------------------------------------------------------------
# embeddings and face tracing


@dataclass(frozen=True)
class Embedding:
    """``rotation[v]`` is the cyclic order of the neighbours of v;
    ``signature[(u, v)]`` (u < v) is +1 or -1."""

    rotation: tuple
    signature: dict = field(hash=False)

    def sign(self, u: int, v: int) -> int:
        return self.signature[(u, v) if u < v else (v, u)]

    def to_json(self) -> dict:
        return {
            "rotation": [list(r) for r in self.rotation],
            "negative_edges": sorted([list(e) for e, s in self.signature.items() if s < 0]),
        }


@dataclass
class FaceSet:
    faces: list  # each face: list of darts (u, v)

    @property
    def count(self) -> int:
        return len(self.faces)

    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


def check_embedding(g: LabeledGraph, emb: Embedding) -> None:
    if len(emb.rotation) != g.n:
        raise ValueError("rotation has wrong length")
    for v in range(g.n):
        if sorted(emb.rotation[v]) != g.neighbors(v):
            raise ValueError(f"rotation at {v} is not a permutation of its neighbours")
    if set(emb.signature) != set(g.edges):
        raise ValueError("signature must be defined on exactly the edges")


def trace_faces(g: LabeledGraph, emb: Embedding) -> FaceSet:
    if not g.is_connected():
        raise DisconnectedGraph("face tracing needs a connected graph")
    check_embedding(g, emb)
    if g.m == 0:
        return FaceSet([[]])  # a lone vertex on the sphere
    succ = []
    pred = []
    for v in range(g.n):
        r = emb.rotation[v]
        k = len(r)
        succ.append({r[i]: r[(i + 1) % k] for i in range(k)})
        pred.append({r[i]: r[(i - 1) % k] for i in range(k)})
    # orbit of each flag (v, w, s): at v with local orientation s, leaving along vw
    orbit: dict[tuple[int, int, int], int] = {}
    walks = []
    for v in range(g.n):
        for w in emb.rotation[v]:
            for s in (1, -1):
                if (v, w, s) in orbit:
                    continue
                oid = len(walks)
                walk = []
                state = (v, w, s)
                while state not in orbit:
                    orbit[state] = oid
                    a, b, t = state
                    walk.append((a, b))
                    t2 = t * emb.sign(a, b)
                    nxt = (succ if t2 > 0 else pred)[b][a]
                    state = (b, nxt, t2)
                walks.append((walk, state))
    # the reverse of flag (a, b, t) is (b, a, -t * sign(ab)); a face is a pair
    # of mutually reverse orbits, keep the one met first
    kept = []
    taken = set()
    for oid, (walk, (a, b, t)) in enumerate(walks):
        if oid in taken:
            continue
        taken.add(oid)
        taken.add(orbit[(b, a, -t * emb.sign(a, b))])
        kept.append(walk)
    return FaceSet(kept)


def euler_genus_of_embedding(g: LabeledGraph, emb: Embedding) -> int:
    fs = trace_faces(g, emb)
    return 2 - g.n + g.m - fs.count


def planar_embedding(g: LabeledGraph) -> Embedding | None:
    """A planar rotation system (networkx LR-planarity) for connected ``g``."""
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        return None
    rot = tuple(tuple(emb.neighbors_cw_order(v)) if g.degree(v) else () for v in range(g.n))
    return Embedding(rot, {e: 1 for e in g.edges})


# ---------------------------------------------------------------------------
# planarity and Kuratowski subgraphs


def is_planar(g: LabeledGraph) -> bool:
    return nx.check_planarity(g.to_networkx())[0]


def find_kuratowski(g: LabeledGraph) -> LabeledGraph | None:
    """A subgraph homeomorphic to K5 or K3,3 on the same vertex labels."""
    ok, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
    if ok:
        return None
    return LabeledGraph.from_edges(g.n, cert.edges())


def kuratowski_type(sub: LabeledGraph) -> str | None:
    """'K5' or 'K33' if the non-isolated part of ``sub`` is a subdivision of one."""
    h, _ = sub.edge_subgraph(sub.edges)
    branch = [v for v in range(h.n) if h.degree(v) != 2]
    if any(h.degree(v) == 1 for v in range(h.n)) or not h.is_connected():
        return None
    # suppress degree-2 vertices and read off the branch graph
    adj = {v: set() for v in branch}
    for b in branch:
        for nb in h.neighbors(b):
            prev, cur = b, nb
            while h.degree(cur) == 2:
                a, c = h.neighbors(cur)
                prev, cur = cur, (c if a == prev else a)
            if cur == b:
                return None
            if cur in adj[b] and b != cur:
                return None if len([1 for x in h.neighbors(b)]) == len(adj[b]) else None
            adj[b].add(cur)
    degs = sorted(len(s) for s in adj.values())
    edges = sum(degs) // 2
    if len(branch) == 5 and degs == [4] * 5 and edges == 10:
        return "K5"
    if len(branch) == 6 and degs == [3] * 6 and edges == 9:
        bg = nx.Graph([(a, b) for a in adj for b in adj[a]])
        if nx.is_bipartite(bg):
            return "K33"
    return None


# ---------------------------------------------------------------------------
# block search


@dataclass
class _Block:
    """Multigraph of a 2-connected block with degree-2 chains suppressed."""

    n_orig: int
    m_orig: int
    verts: list[int]  # multigraph vertex -> block vertex
    edges: list[tuple[int, int, tuple]]  # (a, b, chain of block vertices a..b)


def _suppress(g: LabeledGraph) -> _Block | None:
    branch = [v for v in range(g.n) if g.degree(v) >= 3]
    if not branch:
        return None
    idx = {v: i for i, v in enumerate(branch)}
    edges = []
    seen = set()
    for b in branch:
        for nb in g.neighbors(b):
            if (b, nb) in seen:
                continue
            chain = [b, nb]
            prev, cur = b, nb
            while g.degree(cur) == 2:
                a, c = g.neighbors(cur)
                prev, cur = cur, (c if a == prev else a)
                chain.append(cur)
            seen.add((b, chain[1]))
            seen.add((cur, chain[-2]))
            edges.append((idx[b], idx[cur], tuple(chain)))
    return _Block(g.n, g.m, branch, edges)


def _ear_decomposition(nv: int, edges: list[tuple[int, int, tuple]]) -> tuple[list[int], list[tuple]]:
    """Return (initial cycle as alternating path data, ears).

    The initial structure is a path ``p0 .. pk`` given as (vertices, edge ids);
    every ear is (start, end, internal vertices, edge ids)."""
    inc: dict[int, list[tuple[int, int]]] = {v: [] for v in range(nv)}
    for eid, (a, b, _) in enumerate(edges):
        inc[a].append((b, eid))
        inc[b].append((a, eid))
    used = [False] * len(edges)
    # initial cycle through edge 0
    a0, b0, _ = edges[0]
    prev = {b0: None}
    queue = [b0]
    while queue and a0 not in prev:
        nxt = []
        for v in queue:
            for w, eid in inc[v]:
                if eid == 0 or w in prev:
                    continue
                prev[w] = (v, eid)
                nxt.append(w)
        queue = nxt
    path_v = [a0]
    path_e = []
    cur = a0
    while cur != b0:
        v, eid = prev[cur]
        path_e.append(eid)
        path_v.append(v)
        cur = v
    # path a0 .. b0 along tree edges; edge 0 closes it and is the first ear
    for eid in path_e:
        used[eid] = True
    present = set(path_v)
    ears = [(b0, a0, (), (0,))]
    used[0] = True
    while not all(used):
        found = None
        for eid, (a, b, _) in enumerate(edges):
            if used[eid]:
                continue
            if a in present and b in present:
                found = (a, b, (), (eid,))
                break
            for s, t in ((a, b), (b, a)):
                if s not in present or t in present:
                    continue
                back = {t: (s, eid)}
                queue = [t]
                hit = None
                while queue and hit is None:
                    nxt = []
                    for v in queue:
                        for w, f in inc[v]:
                            if used[f] or f == eid or w in back:
                                continue
                            if w in present:
                                if w != s:
                                    back[w] = (v, f)
                                    hit = w
                                    break
                                continue
                            back[w] = (v, f)
                            nxt.append(w)
                        if hit is not None:
                            break
                    queue = nxt
                if hit is None:
                    continue
                ev, ee = [], []
                cur = hit
                while cur != s:
                    v, f = back[cur]
                    ee.append(f)
                    ev.append(v)
                    cur = v
                ev.pop()  # drop s
                ev.reverse()
                ee.reverse()
                found = (s, hit, tuple(ev), tuple(ee))
                break
            if found:
                break
        if found is None:
            raise ValueError("block is not 2-connected")
        for f in found[3]:
            used[f] = True
        present.update(found[2])
        ears.append(found)
    return (path_v, path_e), ears


class _Search:
    def __init__(self, blk: _Block, deadline: float | None):
        self.blk = blk
        self.deadline = deadline
        self.nodes = 0
        (pv, pe), ears = _ear_decomposition(len(blk.verts), blk.edges)
        self.ears = ears
        face = [(pv[i], pe[i]) for i in range(len(pe))]
        face.append((pv[-1], pe[-1]))
        for i in range(len(pe) - 1, 0, -1):
            face.append((pv[i], pe[i - 1]))
        self.init_faces = [face]
        self.init_present = 0
        for v in pv:
            self.init_present |= 1 << v
        self.mb = len(blk.edges)
        self.nb = len(blk.verts)

    def run(self, target: int) -> list | None:
        # the path has one face: genus 0 on nb' vertices; genus accounting is
        # done through the budget, every ear changes genus by 0, 1 or 2
        remaining = list(range(len(self.ears)))
        return self._rec(self.init_faces, remaining, self.init_present, target)

    def _rec(self, faces, remaining, present, budget):
        if not remaining:
            return faces
        self.nodes += 1
        if self.deadline is not None and (self.nodes & 255) == 0 and time.monotonic() > self.deadline:
            raise GenusTimeout("genus search exceeded its time budget")
        occ: dict[int, list[tuple[int, int]]] = {}
        for fi, f in enumerate(faces):
            for pi, (v, _) in enumerate(f):
                occ.setdefault(v, []).append((fi, pi))
        best = None
        best_idx = -1
        for k, ei in enumerate(remaining):
            s, t, _, _ = self.ears[ei]
            if not (present >> s & 1 and present >> t & 1):
                continue
            opts = []
            os_, ot = occ[s], occ[t]
            for fi, pi in os_:
                for fj, pj in ot:
                    if fi == fj:
                        opts.append((0, fi, pi, pj))
            if budget >= 1:
                opts += [(1, o[1], o[2], o[3]) for o in opts if o[0] == 0]
            if budget >= 2:
                for fi, pi in os_:
                    for fj, pj in ot:
                        if fi != fj:
                            opts.append((2, fi, pi, fj, pj, False))
                            opts.append((2, fi, pi, fj, pj, True))
            if not opts:
                return None
            if best is None or len(opts) < len(best):
                best, best_idx = opts, k
                if len(opts) == 1:
                    break
        ei = remaining[best_idx]
        rest = remaining[:best_idx] + remaining[best_idx + 1:]
        s, t, inner, eids = self.ears[ei]
        fwd = [(s, eids[0])] + [(inner[i], eids[i + 1]) for i in range(len(inner))]
        back = [(t, eids[-1])] + [(inner[i], eids[i]) for i in range(len(inner) - 1, -1, -1)]
        new_present = present
        for v in inner:
            new_present |= 1 << v
        for opt in best:
            cost = opt[0]
            if cost == 0 or cost == 1:
                _, fi, pi, pj = opt
                f = faces[fi]
                w = f[pi:] + f[:pi]
                j = (pj - pi) % len(f)
                others = faces[:fi] + faces[fi + 1:]
                if cost == 0:
                    new = others + [w[:j] + back, w[j:] + fwd]
                else:
                    seg = w[j:]
                    # walk the second segment backwards, from s to t
                    rev = []
                    for q in range(len(seg) - 1, -1, -1):
                        nxt_v = w[0][0] if q == len(seg) - 1 else seg[q + 1][0]
                        rev.append((nxt_v, seg[q][1]))
                    new = others + [w[:j] + back + rev + back]
            else:
                _, fi, pi, fj, pj, flip = opt
                f1 = faces[fi][pi:] + faces[fi][:pi]
                f2 = faces[fj][pj:] + faces[fj][:pj]
                if flip:
                    r2 = []
                    for q in range(len(f2) - 1, -1, -1):
                        nxt_v = f2[0][0] if q == len(f2) - 1 else f2[q + 1][0]
                        r2.append((nxt_v, f2[q][1]))
                    f2 = r2
                others = [f for k2, f in enumerate(faces) if k2 != fi and k2 != fj]
                new = others + [f1 + fwd + f2 + back]
            res = self._rec(new, rest, new_present, budget - cost)
            if res is not None:
                return res
        return None


def _faces_to_embedding(g: LabeledGraph, blk: _Block, mfaces: list) -> Embedding:
    """Turn multigraph faces of a block into a rotation system with signs."""
    # expand to block-vertex walks
    walks = []
    for f in mfaces:
        walk = []
        for v, eid in f:
            a, b, chain = blk.edges[eid]
            bv = blk.verts[v]
            seq = list(chain) if chain[0] == bv and (a == v) else list(reversed(chain))
            if seq[0] != bv:
                seq = list(reversed(seq))
            walk.extend(seq[:-1])
        walks.append(walk)
    # corners give adjacency of consecutive neighbours
    nbr_pairs: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for w in walks:
        k = len(w)
        for i in range(k):
            nbr_pairs[w[i]].append((w[i - 1], w[(i + 1) % k]))
    rotation = []
    for v in range(g.n):
        d = g.degree(v)
        if d <= 2:
            rotation.append(tuple(g.neighbors(v)))
            continue
        link: dict[int, list[int]] = {}
        for a, b in nbr_pairs[v]:
            link.setdefault(a, []).append(b)
            link.setdefault(b, []).append(a)
        start = min(link)
        order = [start]
        prev, cur = None, start
        while len(order) < d:
            c1, c2 = link[cur]
            nxt = c1 if c1 != prev else c2
            if prev is None:
                nxt = min(c1, c2)
            order.append(nxt)
            prev, cur = cur, nxt
        rotation.append(tuple(order))
    pos = [{u: i for i, u in enumerate(r)} for r in rotation]

    def direction(prev_v: int, v: int, next_v: int) -> int:
        r = rotation[v]
        return 1 if r[(pos[v][prev_v] + 1) % len(r)] == next_v else -1

    sig = {e: 1 for e in g.edges}
    done_chains = set()
    for w in walks:
        k = len(w)
        branch_idx = [i for i in range(k) if g.degree(w[i]) >= 3]
        for bi, i in enumerate(branch_idx):
            j = branch_idx[(bi + 1) % len(branch_idx)]
            seg = [w[(i + q) % k] for q in range(((j - i) % k) or k + 1)]
            seg.append(w[j])
            first = (seg[0], seg[1]) if seg[0] < seg[1] else (seg[1], seg[0])
            key = (first, frozenset(zip(seg, seg[1:])) | frozenset(zip(seg[1:], seg)))
            chain_id = frozenset(tuple(sorted(p)) for p in zip(seg, seg[1:]))
            if chain_id in done_chains:
                continue
            done_chains.add(chain_id)
            s_start = direction(w[(i - 1) % k], w[i], w[(i + 1) % k])
            s_end = direction(w[(j - 1) % k], w[j], w[(j + 1) % k])
            e0 = min(chain_id)
            sig[e0] = s_start * s_end
            del key
    return Embedding(tuple(rotation), sig)


# ---------------------------------------------------------------------------
# genus cache


class GenusCache:
    """Bounds on the Euler genus keyed by canonical code of the plain graph.

    Exact values can be persisted as TSV ``hexcode<TAB>genus`` (append-only)."""

    def __init__(self, path: str | Path | None = None):
        self.lo: dict[bytes, int] = {}
        self.hi: dict[bytes, int] = {}
        self.path = Path(path) if path else None
        self._written: set[bytes] = set()
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                code, val = line.split("\t")
                key = bytes.fromhex(code)
                self.lo[key] = self.hi[key] = int(val)
                self._written.add(key)

    def exact(self, key: bytes) -> int | None:
        lo = self.lo.get(key)
        return lo if lo is not None and self.hi.get(key) == lo else None

    def bounds(self, key: bytes) -> tuple[int, int | None]:
        return self.lo.get(key, 0), self.hi.get(key)

    def note_at_least(self, key: bytes, value: int) -> None:
        if key not in self.lo or value > self.lo[key]:
            self.lo[key] = value
        self._maybe_persist(key)

    def note_at_most(self, key: bytes, value: int) -> None:
        if key not in self.hi or value < self.hi[key]:
            self.hi[key] = value
        self._maybe_persist(key)

    def _maybe_persist(self, key: bytes) -> None:
        val = self.exact(key)
        if val is None or self.path is None or key in self._written:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(f"{key.hex()}\t{val}\n")
        self._written.add(key)

    def __len__(self) -> int:
        return sum(1 for k in self.lo if self.exact(k) is not None)


_DEFAULT_CACHE = GenusCache()


def default_cache() -> GenusCache:
    return _DEFAULT_CACHE


def set_default_cache(cache: GenusCache) -> None:
    global _DEFAULT_CACHE
    _DEFAULT_CACHE = cache


# ---------------------------------------------------------------------------
# lower bounds


def girth(g: LabeledGraph) -> float:
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for w in g.neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif parent[v] != w:
                        best = min(best, dist[v] + dist[w] + 1)
            queue = nxt
    return best


def density_bound(n: int, m: int, gir: float) -> int:
    if m == 0 or gir == math.inf:
        return 0
    return max(0, 2 - n + m - (2 * m) // int(gir))


def _block_lower_bound(b: LabeledGraph) -> tuple[int, str]:
    lb = density_bound(b.n, b.m, girth(b))
    trace = "euler-density"
    if lb < 1 and not is_planar(b):
        lb, trace = 1, "nonplanarity"
    return lb, trace


def genus_lower_bound(g: LabeledGraph, use_k_graphs: bool = True) -> int:
    """Sound lower bound on the Euler genus."""
    total = 0
    for es in blocks(g).block_edges:
        b, _ = g.edge_subgraph(es)
        total += _block_lower_bound(b)[0]
    if use_k_graphs and total < 2:
        from .structure import has_two_disjoint_k_graphs

        if has_two_disjoint_k_graphs(g):
            total = 2
    return total


# ---------------------------------------------------------------------------
# exact genus


@dataclass
class GenusResult:
    genus: int
    witness: Embedding | None = None
    lower_bound_trace: str = ""


def _block_key(b: LabeledGraph) -> bytes:
    from .canon import canonical_form

    return canonical_form(b.underlying())


def _block_genus_at_most(b: LabeledGraph, k: int, cache: GenusCache, deadline,
                         want_faces: bool = False):
    """Decide genus(b) <= k for a 2-connected block; returns (bool, faces|None)."""
    key = _block_key(b)
    lo, hi = cache.bounds(key)
    if lo == 0 and key not in cache.lo:
        lo, _ = _block_lower_bound(b)
        cache.note_at_least(key, lo)
    if lo > k:
        return False, None
    if hi is not None and hi <= k and not want_faces:
        return True, None
    blk = _suppress(b)
    if blk is None:  # a cycle
        cache.note_at_most(key, 0)
        return True, None
    search = _Search(blk, deadline)
    # start at the cached lower bound: smaller targets are already excluded
    base = 2 - len(blk.verts) + len(blk.edges)
    for target in range(lo, k + 1):
        faces = search.run(target)
        if faces is not None:
            g_found = base - len(faces)
            cache.note_at_most(key, g_found)
            cache.note_at_least(key, target)
            return True, (blk, faces)
        cache.note_at_least(key, target + 1)
    return False, None


def _deadline(timeout: float | None):
    return None if timeout is None else time.monotonic() + timeout


def _block_list(g: LabeledGraph) -> list[tuple[LabeledGraph, list[int]]]:
    out = []
    for es in blocks(g).block_edges:
        if len(es) < 3:
            continue  # bridges and single edges are planar
        out.append(g.edge_subgraph(es))
    return out


def genus_at_most(g: LabeledGraph, k: int, cache: GenusCache | None = None,
                  timeout: float | None = None, planarity_shortcut: bool = True) -> bool:
    """Decide ``euler_genus(g) <= k`` without necessarily computing it exactly."""
    cache = _DEFAULT_CACHE if cache is None else cache
    if k < 0:
        return False
    if planarity_shortcut and is_planar(g):
        return True
    if k == 0 and planarity_shortcut:
        return False
    deadline = _deadline(timeout)
    bl = [b for b, _ in _block_list(g)]
    lows = []
    for b in bl:
        key = _block_key(b)
        if key not in cache.lo:
            lo, _ = _block_lower_bound(b)
            if planarity_shortcut and lo == 0 and is_planar(b):
                cache.note_at_most(key, 0)
            cache.note_at_least(key, lo)
        lows.append(cache.lo[key])
    if sum(lows) > k:
        return False
    order = sorted(range(len(bl)), key=lambda i: -lows[i])
    for i in order:
        key = _block_key(bl[i])
        ex = cache.exact(key)
        if ex is not None:
            lows[i] = ex
            continue
        budget = k - (sum(lows) - lows[i])
        ok, _ = _block_genus_at_most(bl[i], budget, cache, deadline)
        if not ok:
            return False
        # exact: deepening started at a valid lower bound
        lows[i] = cache.lo[key] if cache.exact(key) is None else cache.exact(key)
        if sum(lows) > k:
            return False
    return sum(lows) <= k


def euler_genus(g: LabeledGraph, cache: GenusCache | None = None, timeout: float | None = 60.0,
                witness: bool = False, planarity_shortcut: bool = True) -> GenusResult:
    """Exact Euler genus, summed over blocks (block additivity)."""
    cache = _DEFAULT_CACHE if cache is None else cache
    deadline = _deadline(timeout)
    total = 0
    traces = []
    block_embs = []
    for b, labels in _block_list(g):
        key = _block_key(b)
        lo, trace = _block_lower_bound(b)
        if not planarity_shortcut and trace == "nonplanarity":
            lo, trace = density_bound(b.n, b.m, girth(b)), "euler-density"
        if planarity_shortcut and lo == 0 and is_planar(b):
            cache.note_at_most(key, 0)
        cache.note_at_least(key, lo)
        ex = cache.exact(key)
        if ex is not None and not witness:
            total += ex
            traces.append("cache")
            continue
        k = cache.lo[key]
        while True:
            ok, data = _block_genus_at_most(b, k, cache, deadline, want_faces=witness)
            if ok:
                break
            k += 1
        gb = cache.exact(key)
        if gb is None:
            gb = k
        total += gb
        traces.append(trace if gb == lo else "search")
        if witness:
            if data is None:
                emb = planar_embedding(b)
                if emb is None:
                    raise RuntimeError("missing witness")
            else:
                emb = _faces_to_embedding(b, data[0], data[1])
            block_embs.append((labels, emb))
    wit = None
    if witness and g.is_connected():
        wit = _combine_block_embeddings(g, block_embs)
    return GenusResult(total, wit, ",".join(traces) or "trivial")


def _combine_block_embeddings(g: LabeledGraph, block_embs) -> Embedding:
    rot: list[list[int]] = [[] for _ in range(g.n)]
    sig = {e: 1 for e in g.edges}
    covered = set()
    for labels, emb in block_embs:
        for i, r in enumerate(emb.rotation):
            rot[labels[i]].extend(labels[u] for u in r)
        for (u, v), s in emb.signature.items():
            a, b = labels[u], labels[v]
            sig[(a, b) if a < b else (b, a)] = s
            covered.add((a, b) if a < b else (b, a))
    for u, v in g.edges:
        if (u, v) not in covered:  # bridges
            rot[u].append(v)
            rot[v].append(u)
    return Embedding(tuple(tuple(r) for r in rot), sig)


def euler_genus_plus(g: LabeledGraph, **kw) -> GenusResult:
    if g.terminals is None:
        raise MissingTerminals("euler_genus_plus needs terminals")
    return euler_genus(augment(g), **kw)


def genus_plus_at_most(g: LabeledGraph, k: int, **kw) -> bool:
    return genus_at_most(augment(g), k, **kw)
