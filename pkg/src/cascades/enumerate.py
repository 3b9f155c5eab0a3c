"""Candidate generation and the census of cascades with augmented genus 2."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_form, canonical_graph
from .criticality import ParameterId, is_P_critical, is_s1
from .embed import GenusCache, default_cache, euler_genus, genus_at_most, is_planar
from .graph import GraphError, LabeledGraph, augment, complete, complete_bipartite, identify_terminals
from .graph_io import ParseError, from_graph6
from .structure import KGraphWitness, check_linkage, planar_face_sets


class CountMismatch(GraphError):
    pass


class ValidationFailure(GraphError):
    pass


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# small helpers


def assemble(n: int, edges, identify=(), terminals=None) -> LabeledGraph:
    """Build a graph on ``n`` vertices, then glue the vertex pairs in ``identify``."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in identify:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(v) for v in range(n)})
    idx = {r: i for i, r in enumerate(roots)}
    es = {(idx[find(u)], idx[find(v)]) for u, v in edges if find(u) != find(v)}
    t = None if terminals is None else (idx[find(terminals[0])], idx[find(terminals[1])])
    return LabeledGraph.from_edges(len(roots), es, t)


def suppress_degree_two(g: LabeledGraph) -> LabeledGraph:
    """Contract non-terminal degree-2 vertices whose neighbours are non-adjacent."""
    while True:
        for v in range(g.n):
            if g.is_terminal(v) or g.degree(v) != 2:
                continue
            a, b = g.neighbors(v)
            if not g.has_edge(a, b):
                g = g.merge(a, v)
                break
        else:
            return g


def drop_isolated(g: LabeledGraph) -> LabeledGraph:
    keep = [v for v in range(g.n) if g.degree(v) or g.is_terminal(v)]
    if len(keep) == g.n:
        return g
    return g.induced(keep)[0]


# ---------------------------------------------------------------------------
# linkage catalog
#
# Core vertex numbering.  K4: 0 is the terminal z, 1, 2, 3 the boundary
# triangle.  K23: 0 is z on the inner branch 1-0-2, the boundary cycle is
# 1-3-2-4 with open boundary branches {3} (alpha) and {4} (beta).

K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
K23_EDGES = ((1, 0), (0, 2), (1, 3), (3, 2), (1, 4), (4, 2))


@dataclass(frozen=True)
class LinkageSpec:
    name: str
    core: str
    n: int
    edges: tuple  # edges outside the core
    feet: tuple  # u1, u2, ... in boundary order
    removable: tuple  # expected removable flag per foot
    source: str  # the proof case the shape is read from

    @property
    def core_n(self) -> int:
        return 4 if self.core == "K4" else 5

    def graph(self) -> LabeledGraph:
        base = K4_EDGES if self.core == "K4" else K23_EDGES
        return LabeledGraph.from_edges(self.n, list(base) + list(self.edges))

    def core_witness(self) -> KGraphWitness:
        if self.core == "K4":
            branches = tuple(K4_EDGES)
            return KGraphWitness("K4", (0, 1, 2, 3), branches, 0, (1, 2, 3))
        branches = ((1, 0, 2), (1, 3, 2), (1, 4, 2))
        return KGraphWitness("K23", (1, 2), branches, 0, (1, 3, 2, 4))


LINKAGES: dict[str, LinkageSpec] = {
    s.name: s
    for s in [
        LinkageSpec("a", "K4", 5, ((4, 1), (4, 2), (4, 3)), (4,), (False,),
                    "K4 core, one foot: three paths from the boundary branch vertices meet at u1"),
        LinkageSpec("b", "K23", 6, ((5, 3), (5, 4)), (5,), (False,),
                    "K23 core, one foot: both open boundary branches reach u1"),
        LinkageSpec("c", "K4", 6, ((4, 1), (4, 3), (5, 2)), (4, 5), (False, False),
                    "K4 core, two feet: P1, P2 disjoint, P3 meets only P1"),
        LinkageSpec("d", "K23", 7, ((5, 3), (6, 4)), (5, 6), (False, False),
                    "K23 core, two feet: disjoint paths from the two open boundary branches"),
        LinkageSpec("e", "K23", 7, ((5, 3), (5, 4), (6, 1)), (5, 6), (False, True),
                    "K23 core, two feet: P2 meets P1, Q2 starts at a boundary branch vertex"),
        LinkageSpec("f", "K4", 7, ((4, 1), (5, 2), (6, 3)), (4, 5, 6), (False, False, False),
                    "K4 core, three feet: three disjoint paths"),
        LinkageSpec("g", "K23", 8, ((5, 3), (6, 1), (7, 4)), (5, 6, 7), (False, True, False),
                    "K23 core, three feet: Q1 = P1 and P2 runs into exactly one other Q"),
        LinkageSpec("h", "K23", 9, ((5, 3), (5, 4), (6, 5), (7, 1), (8, 2)), (6, 7, 8),
                    (False, True, True),
                    "K23 core, three feet: P2 joins P1 before reaching U"),
        LinkageSpec("i", "K23", 9, ((5, 3), (6, 2), (7, 4), (8, 1)), (5, 6, 7, 8),
                    (False, True, False, True),
                    "K23 core, four feet: one foot at every boundary vertex"),
    ]
}


def glue(hx: LinkageSpec, hy: LinkageSpec, mapping: dict, suppress: bool = True) -> LabeledGraph:
    """Glue two linkages: the foot ``u'_j`` of hy is identified with ``u_mapping[j]`` of hx.

    ``mapping`` is keyed by 1-based foot indices; the terminals are the two cores' z."""
    off = hx.n
    edges = list(hx.graph().edges) + [(u + off, v + off) for u, v in hy.graph().edges]
    ident = [(hx.feet[mapping[j] - 1], hy.feet[j - 1] + off) for j in mapping]
    g = assemble(hx.n + hy.n, edges, ident, (0, off))
    return suppress_degree_two(g) if suppress else g


BASE_RECIPES = [
    ("f+f", "f", "f", {1: 1, 2: 2, 3: 3}),
    ("f+g", "f", "g", {1: 1, 2: 2, 3: 3}),
    ("g+g aligned", "g", "g", {1: 1, 2: 2, 3: 3}),
    ("g+g crossed", "g", "g", {1: 2, 2: 1, 3: 3}),
    ("i+i", "i", "i", {1: 2, 2: 3, 3: 4, 4: 1}),
]


@dataclass
class Base:
    name: str
    graph: LabeledGraph
    parent: str | None = None  # for split variants: the base it came from

    def to_json(self) -> dict:
        return {"name": self.name, "parent": self.parent, "n": self.graph.n,
                "edges": [list(e) for e in self.graph.sorted_edges()],
                "terminals": list(self.graph.terminals)}


@dataclass
class BaseCatalog:
    linkage_catalog: dict
    bases_B: list[Base]
    bases_B_star: list[Base]

    def extras(self) -> list[Base]:
        return [b for b in self.bases_B_star if b.parent is not None]


def split_vertex(g: LabeledGraph, v: int, keep: tuple) -> LabeledGraph:
    """Split v: it keeps the neighbours in ``keep``; a new neighbour takes the rest."""
    w = g.n
    rest = [u for u in g.neighbors(v) if u not in keep]
    es = [e for e in g.edges if v not in e or (e[0] in keep or e[1] in keep)]
    es += [(w, u) for u in rest] + [(v, w)]
    return LabeledGraph.from_edges(g.n + 1, es, g.terminals)


def _splits(g: LabeledGraph):
    for v in range(g.n):
        if g.degree(v) != 4 or g.is_terminal(v):
            continue
        nb = g.neighbors(v)
        for other in nb[1:]:
            yield split_vertex(g, v, (nb[0], other))


def _contains_base(g: LabeledGraph, bases: list[LabeledGraph]) -> bool:
    from .minors import is_minor

    # a base minor forces augmented genus 2; check that cheap bound first
    if genus_at_most(augment(g), 1):
        return False
    return any(is_minor(b, g) for b in bases)


def build_bases() -> BaseCatalog:
    bases = []
    for name, a, b, mapping in BASE_RECIPES:
        bases.append(Base(name, canonical_graph(glue(LINKAGES[a], LINKAGES[b], mapping))))
    plain = [b.graph for b in bases]
    seen = {canonical_form(g) for g in plain}
    extras = []
    # a split of a non-minimal graph is never minimal (the deletable edge stays
    # deletable), so only minimal graphs are split further
    frontier = [(b.name, b.graph) for b in bases]
    while frontier:
        nxt = []
        for parent, g in frontier:
            for h in _splits(g):
                key = canonical_form(h)
                if key in seen or not is_planar(h):
                    continue
                seen.add(key)
                if all(not _contains_base(h.remove_edges([e]), plain) for e in sorted(h.edges)):
                    extras.append(Base(f"{parent} split {len(extras) + 1}", canonical_graph(h), parent))
                    nxt.append((parent, h))
        frontier = nxt
    return BaseCatalog(dict(LINKAGES), bases, bases + extras)


# ---------------------------------------------------------------------------
# extensions of a base


@dataclass
class Candidate:
    graph: LabeledGraph
    family: str
    base: str | None
    detail: str
    # homeomorphic embedding of the base: base vertex i -> i, base edge -> path
    eta_paths: dict | None = None

    def provenance(self) -> dict:
        return {"family": self.family, "base": self.base, "detail": self.detail}


def unique_faces(h: LabeledGraph) -> list[list[int]]:
    """Faces of the unique planar embedding of a planar graph (up to mirror)."""
    sets = {}
    for walks, _ in planar_face_sets(h):
        key = frozenset(frozenset(w) for w in walks)
        sets.setdefault(key, walks)
        if len(sets) > 1:
            raise ValueError("planar embedding is not unique")
    return next(iter(sets.values()))


class _Ext:
    """η(H) plus an obstruction, built by subdividing base edges and adding vertices."""

    def __init__(self, h: LabeledGraph):
        self.h = h
        self.n = h.n
        self.edges = set(h.edges)
        self.paths = {e: e for e in h.edges}

    def sub(self, e) -> int:
        a, b = e
        s = self.n
        self.n += 1
        self.edges.discard(e)
        self.edges |= {(a, s), (s, b)}
        self.paths[e] = (a, s, b)
        return s

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def path(self, a: int, b: int) -> None:
        """A new path a..b; subdivided once when the edge already exists."""
        if (min(a, b), max(a, b)) in self.edges:
            c = self.new()
            self.edges |= {(a, c), (c, b)}
        else:
            self.edges.add((min(a, b), max(a, b)))

    def graph(self) -> LabeledGraph:
        return LabeledGraph.from_edges(self.n, self.edges, self.h.terminals)


def enumerate_extensions(h: LabeledGraph, name: str = "base") -> list[Candidate]:
    """η(H) ∪ O for a superset of the minimal jump, cross, tripod and triad obstructions."""
    faces = unique_faces(h)
    fsets = [frozenset(f) for f in faces]
    vfaces = {v: {i for i, f in enumerate(fsets) if v in f} for v in range(h.n)}

    def efaces(e):
        a, b = e
        out = set()
        for i, f in enumerate(faces):
            k = len(f)
            for j in range(k):
                if {f[j], f[(j + 1) % k]} == {a, b}:
                    out.add(i)
        return out

    out: list[Candidate] = []

    def emit(x: _Ext, family: str, detail: str):
        g = x.graph()
        if not is_planar(g):
            out.append(Candidate(g, family, name, detail, dict(x.paths)))

    # (T1) jumps between vertices and/or fresh subdivision points
    points = [("v", v) for v in range(h.n)] + [("e", e) for e in sorted(h.edges)]

    def pfaces(p):
        return vfaces[p[1]] if p[0] == "v" else efaces(p[1])

    for p, q in itertools.combinations(points, 2):
        if pfaces(p) & pfaces(q):
            continue
        x = _Ext(h)
        ends = [t[1] if t[0] == "v" else x.sub(t[1]) for t in (p, q)]
        x.path(*ends)
        emit(x, "jump", f"{p} -- {q}")
    # (T2) crosses on one face
    for fi, f in enumerate(faces):
        for i, j, k, l in itertools.combinations(range(len(f)), 4):
            x = _Ext(h)
            x.path(f[i], f[k])
            x.path(f[j], f[l])
            emit(x, "cross", f"face {fi}: {f[i]}-{f[k]} x {f[j]}-{f[l]}")
    # (T3) tripods with trivial feet, and weak tripods on one or two branches
    for fi, f in enumerate(faces):
        for tri in itertools.combinations(sorted(set(f)), 3):
            x = _Ext(h)
            a, b = x.new(), x.new()
            for v in tri:
                x.path(a, v)
                x.path(b, v)
            emit(x, "tripod", f"face {fi}: {tri}")
        k = len(f)
        for j in range(k):
            v1, v2 = f[j], f[(j + 1) % k]
            for v3 in f:
                if v3 in (v1, v2):
                    continue
                x = _Ext(h)
                s = x.sub((min(v1, v2), max(v1, v2)))
                m = x.new()
                for v in (v1, v2, v3):
                    x.path(m, v)
                x.path(s, v3)
                emit(x, "weak tripod (one branch)", f"face {fi}: {v1}-{v2} with {v3}")
            d1, c, d2 = f[j - 1], f[j], f[(j + 1) % k]
            x = _Ext(h)
            q = x.sub((min(d1, c), max(d1, c)))
            r = x.sub((min(c, d2), max(c, d2)))
            x.path(d1, r)
            x.path(q, d2)
            emit(x, "weak tripod (two branches)", f"face {fi}: {d1}-{c}-{d2}")
    # (T4) triads
    for tri in itertools.combinations(range(h.n), 3):
        if any(h.has_edge(a, b) for a, b in itertools.combinations(tri, 2)):
            continue
        if not all(vfaces[a] & vfaces[b] for a, b in itertools.combinations(tri, 2)):
            continue
        if vfaces[tri[0]] & vfaces[tri[1]] & vfaces[tri[2]]:
            continue
        x = _Ext(h)
        c = x.new()
        for v in tri:
            x.path(c, v)
        emit(x, "triad", f"{tri}")
    return _dedupe(out)


def _dedupe(cands: list[Candidate]) -> list[Candidate]:
    seen = set()
    out = []
    for c in cands:
        key = canonical_form(c.graph)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def check_homeomorphic_embedding(h: LabeledGraph, g: LabeledGraph, paths: dict) -> bool:
    """Identity on base vertices, base edges to internally disjoint paths with
    inner vertices off the base vertex set."""
    used: set[int] = set()
    for e in h.edges:
        p = paths.get(e)
        if p is None or {p[0], p[-1]} != set(e):
            return False
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
        inner = set(p[1:-1])
        if inner & used or any(v < h.n for v in inner) or len(set(p)) != len(p):
            return False
        used |= inner
    return g.terminals == h.terminals


# ---------------------------------------------------------------------------
# low separation


def _linkage_variants(spec: LinkageSpec):
    """The linkage graph with any subset of feet contracted onto the core."""
    g = spec.graph()
    options = []
    for u in spec.feet:
        targets = [w for w in g.neighbors(u) if w < spec.core_n]
        options.append([None] + targets)
    for choice in itertools.product(*options):
        ident = [(t, u) for u, t in zip(spec.feet, choice) if t is not None]
        yield choice, list(g.edges), ident


def _c0_parts():
    """The three critical graphs of augmented genus 1, as (graph, (a, b))."""
    k5 = complete(5).remove_edges([(0, 1)])
    k33 = complete_bipartite(3, 3)
    return [("K5-e", k5, (0, 1)), ("K33-e", k33.remove_edges([(0, 3)]), (0, 3)),
            ("K33 same part", k33, (0, 1))]


def enumerate_low_separation() -> list[Candidate]:
    out: list[Candidate] = []
    # 1-separated: (a)/(b) glued at u1 to K5 or K3,3 containing y adjacent to u1
    kur = [("K5", complete(5), 0, 1), ("K33", complete_bipartite(3, 3), 0, 3)]
    for lname in ("a", "b"):
        spec = LINKAGES[lname]
        for choice, es, ident in _linkage_variants(spec):
            for kname, kg, ku, ky in kur:
                off = spec.n
                edges = es + [(a + off, b + off) for a, b in kg.edges]
                idn = ident + [(spec.feet[0], ku + off)]
                g = suppress_degree_two(drop_isolated(assemble(off + kg.n, edges, idn, (0, ky + off))))
                out.append(Candidate(g, "1-separated", None, f"({lname}) feet {choice} + {kname}"))
    # 2-separated: (c)/(d)/(e) glued at {u1, u2} to a critical graph of augmented genus 1
    for lname in ("c", "d", "e"):
        spec = LINKAGES[lname]
        for choice, es, ident in _linkage_variants(spec):
            for pname, pg, (pa, pb) in _c0_parts():
                for y in range(pg.n):
                    if y in (pa, pb):
                        continue
                    for ta, tb in ((pa, pb), (pb, pa)):
                        off = spec.n
                        edges = es + [(a + off, b + off) for a, b in pg.edges]
                        idn = ident + [(spec.feet[0], ta + off), (spec.feet[1], tb + off)]
                        g = assemble(off + pg.n, edges, idn, (0, y + off))
                        g = suppress_degree_two(drop_isolated(g))
                        out.append(Candidate(g, "2-separated", None,
                                             f"({lname}) feet {choice} + {pname} y={y}"))
    # 2-separated with x among the feet of the y-side linkage
    for xn in ("c", "d", "e"):
        sx = LINKAGES[xn]
        for yn in ("f", "g", "h"):
            sy = LINKAGES[yn]
            for perm in itertools.permutations(range(3)):
                for cx, ex, ix in _linkage_variants(sx):
                    for cy, ey, iy in _linkage_variants(sy):
                        off = sx.n
                        edges = ex + [(a + off, b + off) for a, b in ey]
                        idn = ix + [(a + off, b + off) for a, b in iy]
                        targets = [sx.feet[0], sx.feet[1], 0]
                        for j, p in enumerate(perm):
                            idn.append((targets[p], sy.feet[j] + off))
                        g = assemble(off + sy.n, edges, idn, (0, off))
                        if g.terminals is None or g.terminals[0] == g.terminals[1]:
                            continue
                        g = suppress_degree_two(drop_isolated(g))
                        out.append(Candidate(g, "2-separated (x in U_y)", None,
                                             f"({xn})+({yn}) feet {cx}/{cy} order {perm}"))
    return _dedupe([c for c in out if not is_planar(c.graph)])


# ---------------------------------------------------------------------------
# critical graphs of augmented genus 1 on few vertices


def c0_plus_census(max_n: int = 6, order_seed: int | None = None) -> list[LabeledGraph]:
    """All terminal graphs without isolated vertices on at most ``max_n``
    vertices that are critical for the augmented genus with value 1."""
    found = {}
    for n in range(2, max_n + 1):
        pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if (u, v) != (0, 1)]
        masks = list(range(1 << len(pairs)))
        if order_seed is not None:
            random.Random(order_seed + n).shuffle(masks)
        for mask in masks:
            es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = LabeledGraph.from_edges(n, es, (0, 1))
            if any(g.degree(v) == 0 for v in range(n)):
                continue
            plus = augment(g)
            if plus.m < 9 or is_planar(plus):
                continue
            key = canonical_form(g)
            if key in found:
                continue
            if _plus_critical(g):
                found[key] = canonical_graph(g)
    return [found[k] for k in sorted(found)]


def _plus_critical(g: LabeledGraph) -> bool:
    from .graph import apply_minor_op, minor_ops

    if not genus_at_most(augment(g), 1):
        return False
    return all(is_planar(augment(apply_minor_op(g, op))) for op in minor_ops(g))


# ---------------------------------------------------------------------------
# obstruction data


@dataclass
class ObstructionDataset:
    e1: list[LabeledGraph]
    e1_star_extra: list[LabeledGraph]


def load_obstructions(path, verify: str = "spot", expected=(35, 68),
                      cache: GenusCache | None = None) -> ObstructionDataset:
    """Graph6 lines under ``#E1`` and ``#E1STAR_EXTRA`` headers."""
    cache = default_cache() if cache is None else cache
    text = Path(path).read_text()
    sections: dict[str, list[LabeledGraph]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            head = line[1:].strip().upper()
            if head in ("E1", "E1STAR_EXTRA"):
                current = head
                sections.setdefault(current, [])
            continue
        if current is None:
            raise ParseError("graph before any section header", lineno, str(path))
        try:
            sections[current].append(from_graph6(line))
        except (GraphError, ValueError) as exc:
            raise ParseError(str(exc), lineno, str(path)) from None
    e1 = sections.get("E1", [])
    extra = sections.get("E1STAR_EXTRA", [])
    if (len(e1), len(extra)) != tuple(expected):
        raise CountMismatch(f"expected {expected[0]} + {expected[1]} graphs, found {len(e1)} + {len(extra)}")
    allg = e1 + extra
    for i, g in enumerate(allg):
        if is_planar(g) or genus_at_most(g, 1, cache):
            raise ValidationFailure(f"graph {i} embeds in the projective plane")
    sample = allg if verify == "full" else random.Random(0).sample(allg, min(10, len(allg)))
    for g in sample:
        if euler_genus(g, cache=cache).genus != 2:
            raise ValidationFailure("graph with Euler genus other than 2")
    crit = e1 if verify == "full" else e1[:10]
    for g in crit:
        if not is_P_critical(g, ParameterId.EULER_GENUS, cache):
            raise ValidationFailure("E1 member is not critical")
    return ObstructionDataset(e1, extra)


def derive_planar_c1plus(ds: ObstructionDataset, cache: GenusCache | None = None) -> list[LabeledGraph]:
    cache = default_cache() if cache is None else cache
    found = {}
    e1_keys = {canonical_form(q) for q in ds.e1}
    for q in ds.e1:
        for x, y in sorted(q.edges):
            h = q.remove_edges([(x, y)]).with_terminals(x, y)
            if not is_planar(h):
                continue
            key = canonical_form(h)
            if key not in found and is_P_critical(h, ParameterId.EULER_GENUS_PLUS, cache):
                found[key] = canonical_graph(h)
    for q in ds.e1_star_extra:
        for x, y in sorted(q.edges):
            h = q.remove_edges([(x, y)]).with_terminals(x, y)
            if not is_planar(h):
                continue
            if canonical_form(drop_isolated(identify_terminals(h))) in e1_keys:
                found.setdefault(canonical_form(h), canonical_graph(h))
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# the census


@dataclass
class CensusResult:
    members: list[LabeledGraph]
    provenance: list[list[dict]]
    family_counts: dict = field(default_factory=dict)
    complete: bool = True
    elapsed: float = 0.0

    def codes(self) -> set[bytes]:
        return {canonical_form(g) for g in self.members}


def _check(args):
    g, timeout = args
    return is_s1(g, timeout=timeout)


def census_s1(workers: int = 1, timeout: float | None = 300.0, budget: float | None = 3600.0,
              bases_only: bool = False, shuffle_seed: int | None = None,
              progress=None) -> CensusResult:
    start = time.monotonic()
    cands: list[Candidate] = []
    if not bases_only:
        cands += enumerate_low_separation()
    cat = build_bases()
    for b in cat.bases_B_star:
        cands += enumerate_extensions(b.graph, b.name)
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(cands)
    groups: dict[bytes, list[Candidate]] = {}
    for c in cands:
        groups.setdefault(canonical_form(c.graph), []).append(c)
    keys = sorted(groups)
    counts: dict[str, dict] = {}
    for c in cands:
        counts.setdefault(c.family, {"generated": 0, "unique": 0, "members": 0})["generated"] += 1
    for k in keys:
        counts[groups[k][0].family]["unique"] += 1
    jobs = [(groups[k][0].graph, timeout) for k in keys]
    results: list[bool] = []
    complete = True
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check, jobs, chunksize=8))
    else:
        for i, job in enumerate(jobs):
            if budget is not None and time.monotonic() - start > budget:
                complete = False
                break
            results.append(_check(job))
            if progress:
                progress(i + 1, len(jobs))
    members, prov = [], []
    for k, ok in zip(keys, results):
        if ok:
            members.append(canonical_graph(groups[k][0].graph))
            prov.append([c.provenance() for c in groups[k]])
            counts[groups[k][0].family]["members"] += 1
    return CensusResult(members, prov, counts, complete, time.monotonic() - start)
