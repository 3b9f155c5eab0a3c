import pytest
from hypothesis import given, strategies as st

from cascades.graph import (
    ForbiddenTerminalContraction, GraphError, InvalidEdge, LabeledGraph, MinorOp, MissingTerminals,
    OpKind, apply_minor_op, augment, blocks, complete, identify_terminals, minor_ops, path,
)


def tri():
    # x=0, y=1, a=2
    return LabeledGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)], terminals=(0, 1))


def test_delete_edge():
    h = apply_minor_op(tri(), MinorOp((0, 2), OpKind.DELETE))
    assert h.edges == {(0, 1), (1, 2)}


def test_contract_keeps_terminal_role():
    h = apply_minor_op(tri(), MinorOp((1, 2), OpKind.CONTRACT))
    assert h.n == 2 and h.m == 1
    assert h.terminals is not None and h.has_edge(*h.terminals)


def test_terminal_contraction_forbidden():
    with pytest.raises(ForbiddenTerminalContraction):
        apply_minor_op(tri(), MinorOp((0, 1), OpKind.CONTRACT))


def test_missing_edge():
    with pytest.raises(InvalidEdge):
        apply_minor_op(path(3), MinorOp((0, 2), OpKind.DELETE))


def test_op_counts():
    assert len(minor_ops(tri())) == 5
    assert sum(op.kind is OpKind.DELETE for op in minor_ops(tri())) == 3
    assert len(minor_ops(LabeledGraph.from_edges(2, [(0, 1)], (0, 1)))) == 1
    assert len(minor_ops(complete(4))) == 12


def test_augment_and_identify_path():
    g = LabeledGraph.from_edges(3, [(0, 2), (2, 1)], terminals=(0, 1))
    assert augment(g).m == 3
    h = identify_terminals(g)
    assert h.n == 2 and h.m == 1 and h.terminals is None


def test_augment_idempotent():
    assert augment(tri()) == tri()


def test_identify_c4_merges_parallels():
    g = LabeledGraph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)], terminals=(0, 1))
    h = identify_terminals(g)
    assert (h.n, h.m) == (3, 2)


def test_augment_needs_terminals():
    with pytest.raises(MissingTerminals):
        augment(complete(3))


def test_blocks_examples():
    bowtie = LabeledGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bd = blocks(bowtie)
    assert len(bd.blocks) == 2 and bd.cut_vertices == {2}
    assert len(blocks(complete(5)).blocks) == 1
    assert len(blocks(path(4)).blocks) == 3


def test_bad_input():
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(2, [(0, 1)], terminals=(0, 0))


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    es = draw(st.lists(st.sampled_from(pairs), unique=True))
    g = LabeledGraph.from_edges(n, es)
    if draw(st.booleans()):
        x, y = draw(st.permutations(range(n)))[:2]
        g = g.with_terminals(x, y)
    return g


@given(graphs())
def test_minor_ops_shrink(g):
    for op in minor_ops(g):
        h = apply_minor_op(g, op)
        assert h.m < g.m
        assert (h.terminals is None) == (g.terminals is None)
        assert h.n == g.n - (op.kind is OpKind.CONTRACT)


@given(graphs())
def test_blocks_match_networkx(g):
    import networkx as nx

    nxg = g.to_networkx()
    ours = {frozenset(es) for es in blocks(g).block_edges}
    theirs = {frozenset(tuple(sorted(e)) for e in c) for c in nx.biconnected_component_edges(nxg)}
    assert ours == theirs
    assert blocks(g).cut_vertices == set(nx.articulation_points(nxg))
