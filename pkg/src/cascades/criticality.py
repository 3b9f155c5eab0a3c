"""Decreaser sets, criticality and the cascade predicate."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .embed import GenusCache, default_cache, euler_genus, genus_at_most, is_planar
from .graph import LabeledGraph, MinorOp, MissingTerminals, OpKind, apply_minor_op, augment, minor_ops


class ParameterId(str, Enum):
    EULER_GENUS = "genus"
    EULER_GENUS_PLUS = "genus_plus"


def parameter(g: LabeledGraph, p: ParameterId, cache: GenusCache | None = None,
              timeout: float | None = 60.0) -> int:
    if p is ParameterId.EULER_GENUS:
        return euler_genus(g, cache=cache, timeout=timeout).genus
    if g.terminals is None:
        raise MissingTerminals("the augmented genus needs terminals")
    return euler_genus(augment(g), cache=cache, timeout=timeout).genus


def decreasers(g: LabeledGraph, p: ParameterId, k: int = 1, cache: GenusCache | None = None,
               timeout: float | None = 60.0) -> set[MinorOp]:
    """dc_k: the operations lowering ``p`` by at least k."""
    base = parameter(g, p, cache, timeout)
    return {op for op in minor_ops(g)
            if parameter(apply_minor_op(g, op), p, cache, timeout) <= base - k}


def is_P_critical(g: LabeledGraph, p: ParameterId, cache: GenusCache | None = None,
                  timeout: float | None = 60.0) -> bool:
    return len(decreasers(g, p, 1, cache, timeout)) == len(minor_ops(g))


@dataclass
class OpRecord:
    op: MinorOp
    genus: int
    genus_plus: int | None

    def to_json(self) -> dict:
        return {"op": self.op.to_json(), "genus": self.genus, "genus_plus": self.genus_plus}


@dataclass
class CriticalityReport:
    graph: LabeledGraph
    genus: int
    genus_plus: int | None
    ops: list[OpRecord]
    dc1_genus: set = field(default_factory=set)
    dc1_genus_plus: set = field(default_factory=set)
    classes: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def is_cascade(self) -> bool:
        return bool(self.classes.get("is_cascade"))

    @property
    def in_S1(self) -> bool:
        return bool(self.classes.get("in_S1"))

    def to_json(self) -> dict:
        g = self.graph
        return {
            "graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()],
                      "terminals": list(g.terminals) if g.terminals else None},
            "genus": self.genus,
            "genus_plus": self.genus_plus,
            "ops": [r.to_json() for r in self.ops],
            "classes": self.classes,
            "witnesses": {k: (v.to_json() if isinstance(v, MinorOp) else [o.to_json() for o in v])
                          if v is not None else None for k, v in self.witnesses.items()},
        }


def _critical_flags(g: LabeledGraph, value: int, cache, timeout) -> dict:
    """ℰ and ℰ* membership of a terminal-free graph of Euler genus ``value``."""
    if value == 0:
        return {"in_E_k": False, "in_E_star_k": False, "k": None}
    k = value - 1
    ops = minor_ops(g)
    crit = all(euler_genus(apply_minor_op(g, op), cache=cache, timeout=timeout).genus < value
               for op in ops)
    mindeg = min((g.degree(v) for v in range(g.n)), default=0)
    star = mindeg >= 3 and all(
        euler_genus(apply_minor_op(g, op), cache=cache, timeout=timeout).genus <= k
        for op in ops if op.kind is OpKind.DELETE)
    return {"in_E_k": crit, "in_E_star_k": star, "k": k}


def classify(g: LabeledGraph, cache: GenusCache | None = None, timeout: float | None = 300.0) -> CriticalityReport:
    """Full report: parameters on every minor, decreaser sets and class flags."""
    cache = default_cache() if cache is None else cache
    gen = euler_genus(g, cache=cache, timeout=timeout).genus
    gp = euler_genus(augment(g), cache=cache, timeout=timeout).genus if g.terminals else None
    records = []
    for op in minor_ops(g):
        h = apply_minor_op(g, op)
        a = euler_genus(h, cache=cache, timeout=timeout).genus
        b = euler_genus(augment(h), cache=cache, timeout=timeout).genus if gp is not None else None
        records.append(OpRecord(op, a, b))
    rep = CriticalityReport(g, gen, gp, records)
    rep.dc1_genus = {r.op for r in records if r.genus <= gen - 1}
    under = g.underlying()
    if g.terminals is not None and g.has_edge(*g.terminals):
        flags = _critical_flags(under, gen, cache, timeout)
    else:
        flags = {"in_E_k": gen > 0 and len(rep.dc1_genus) == len(records),
                 "k": gen - 1 if gen > 0 else None}
        mindeg = min((g.degree(v) for v in range(g.n)), default=0)
        flags["in_E_star_k"] = gen > 0 and mindeg >= 3 and all(
            r.genus <= gen - 1 for r in records if r.op.kind is OpKind.DELETE)
    rep.classes.update(flags)
    if gp is None:
        return rep
    rep.dc1_genus_plus = {r.op for r in records if r.genus_plus <= gp - 1}
    circ = not g.has_edge(*g.terminals)
    every = rep.dc1_genus | rep.dc1_genus_plus
    c1 = len(every) == len(records)
    c2 = next((r.op for r in records if r.op not in rep.dc1_genus), None)
    c3 = next((r.op for r in records if r.op not in rep.dc1_genus_plus), None)
    rep.classes["in_C_circ_k_plus"] = circ and gp > 0 and len(rep.dc1_genus_plus) == len(records)
    rep.classes["k_plus"] = gp - 1 if gp > 0 else None
    cascade = circ and c1 and c2 is not None and c3 is not None
    rep.classes["C1"], rep.classes["C2"], rep.classes["C3"] = c1, c2 is not None, c3 is not None
    rep.classes["is_cascade"] = cascade
    rep.classes["in_S1"] = cascade and gp == 2
    rep.witnesses = {
        "C1_violations": [r.op for r in records if r.op not in every],
        "C2": c2,
        "C3": c3,
    }
    return rep


def is_s1(g: LabeledGraph, cache: GenusCache | None = None, timeout: float | None = 300.0) -> bool:
    """Fast membership test for cascades with augmented genus 2.

    Uses only monotone bounds: G nonplanar with genus_plus(G) = 2 means any
    op is in dc1(genus) iff the minor is planar and in dc1(genus_plus) iff
    its augmented genus is at most 1."""
    cache = default_cache() if cache is None else cache
    if g.terminals is None or g.has_edge(*g.terminals):
        return False
    for v in range(g.n):
        if g.is_terminal(v):
            continue
        d = g.degree(v)
        # a pendant edge, or a suppressible degree-2 vertex, changes neither parameter
        if d == 1 or d == 2 and not g.has_edge(*g.neighbors(v)):
            return False
    if is_planar(g):
        return False
    plus = augment(g)
    if genus_at_most(plus, 1, cache, timeout) or not genus_at_most(plus, 2, cache, timeout):
        return False
    if not genus_at_most(g, 1, cache, timeout):
        return False  # a cascade in S_1 has Euler genus 1
    some_nonplanar = some_plus2 = False
    for op in minor_ops(g):
        h = apply_minor_op(g, op)
        if is_planar(h):
            if not some_plus2 and not genus_at_most(augment(h), 1, cache, timeout):
                some_plus2 = True
            continue
        some_nonplanar = True
        if not genus_at_most(augment(h), 1, cache, timeout):
            return False  # (C1) fails
    return some_nonplanar and some_plus2
