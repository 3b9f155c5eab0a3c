import random

import pytest
from hypothesis import given, settings, strategies as st

from cascades.criticality import ParameterId, classify, decreasers, is_P_critical, is_s1, parameter
from cascades.embed import is_planar
from cascades.graph import (
    LabeledGraph, MissingTerminals, apply_minor_op, complete, complete_bipartite, cycle, minor_ops,
)

from conftest import G_CYL, g_star, random_graph

G, GP = ParameterId.EULER_GENUS, ParameterId.EULER_GENUS_PLUS


def k5_minus_xy():
    return complete(5).remove_edges([(0, 1)]).with_terminals(0, 1)


def test_k5_all_ops_decrease():
    k5 = complete(5)
    dc = decreasers(k5, G)
    assert len(dc) == 20 == len(minor_ops(k5))
    assert all(is_planar(apply_minor_op(k5, op)) for op in dc)


def test_planar_has_no_decreasers():
    assert decreasers(cycle(5), G) == set()


def test_k5_minus_xy_plus_critical():
    g = k5_minus_xy()
    assert len(decreasers(g, GP)) == len(minor_ops(g))
    assert is_P_critical(g, GP)


def test_k33_critical_and_pendant():
    k33 = complete_bipartite(3, 3)
    assert is_P_critical(k33, G)
    assert not is_P_critical(k33.add_vertices(1).add_edges([(0, 6)]), G)


def test_plus_needs_terminals():
    with pytest.raises(MissingTerminals):
        parameter(complete(4), GP)


def test_planar_never_cascade():
    rep = classify(G_CYL)
    assert not rep.is_cascade and rep.genus == 0 and rep.genus_plus == 2


def test_k33_same_part_not_cascade():
    rep = classify(complete_bipartite(3, 3).with_terminals(0, 1))
    assert rep.classes["in_E_k"] and not rep.classes["C2"]
    assert not rep.is_cascade
    assert rep.witnesses["C2"] is None


def test_g_star_in_s1():
    rep = classify(g_star())
    assert rep.in_S1 and rep.genus == 1 and rep.genus_plus == 2
    assert rep.witnesses["C1_violations"] == []
    assert is_s1(g_star())


def test_terminal_free_flags():
    rep = classify(complete(5))
    assert rep.classes["in_E_k"] and rep.classes["k"] == 0
    assert "is_cascade" not in rep.classes


def test_report_json_schema():
    data = classify(g_star()).to_json()
    assert set(data) == {"graph", "genus", "genus_plus", "ops", "classes", "witnesses"}
    assert len(data["ops"]) == len(minor_ops(g_star()))


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_minor_monotone(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(4, 8), 0.6, terminals=True)
    a, b = parameter(g, G), parameter(g, GP)
    for op in minor_ops(g):
        h = apply_minor_op(g, op)
        assert parameter(h, G) <= a and parameter(h, GP) <= b


def test_is_s1_agrees_with_classify():
    rng = random.Random(2)
    samples = [g_star(), G_CYL, complete_bipartite(3, 3).with_terminals(0, 1)]
    # a few perturbations of g_star
    base = g_star()
    for op in minor_ops(base)[:12]:
        samples.append(apply_minor_op(base, op))
    for _ in range(6):
        samples.append(base.add_edges([tuple(rng.sample(range(1, 8), 2))]))
    for g in samples:
        assert is_s1(g) == classify(g).in_S1
