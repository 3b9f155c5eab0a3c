import math
import random

import pytest

from cascades.embed import (
    Embedding, GenusCache, check_embedding, density_bound, euler_genus, euler_genus_of_embedding,
    euler_genus_plus, find_kuratowski, genus_at_most, genus_lower_bound, girth, is_planar,
    kuratowski_type, trace_faces,
)
from cascades.graph import (
    LabeledGraph, complete, complete_bipartite, cycle, one_sum, path, petersen,
)

from conftest import random_graph
from oracles import brute_genus


def _embedding_cost(g):
    cost = 2 ** (g.m - g.n + 1)
    for v in range(g.n):
        cost *= math.factorial(max(g.degree(v) - 1, 0))
    return cost


def test_triangle_faces():
    g = cycle(3)
    emb = Embedding(((1, 2), (0, 2), (0, 1)), {e: 1 for e in g.edges})
    assert trace_faces(g, emb).count == 2
    assert euler_genus_of_embedding(g, emb) == 0


def test_single_edge_face():
    g = path(2)
    fs = trace_faces(g, Embedding(((1,), (0,)), {(0, 1): 1}))
    assert fs.lengths() == [2]


def test_tree_any_embedding():
    rng = random.Random(3)
    g = LabeledGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])
    for _ in range(10):
        rot = []
        for v in range(g.n):
            nb = g.neighbors(v)
            rng.shuffle(nb)
            rot.append(tuple(nb))
        assert euler_genus_of_embedding(g, Embedding(tuple(rot), {e: rng.choice((1, -1)) for e in g.edges})) == 0


def test_k5_witness_has_six_faces():
    g = complete(5)
    res = euler_genus(g, witness=True)
    assert res.genus == 1
    check_embedding(g, res.witness)
    assert trace_faces(g, res.witness).count == 6


@pytest.mark.parametrize("g,val", [
    (complete(4), 0), (complete(5), 1), (complete_bipartite(3, 3), 1),
    (complete(6), 1), (complete(7), 2), (petersen(), 1),
])
def test_known_values(g, val):
    res = euler_genus(g, witness=True)
    assert res.genus == val
    assert euler_genus_of_embedding(g, res.witness) == val


def test_k7_density_bound():
    assert density_bound(7, 21, girth(complete(7))) == 2


def test_two_k5_blocks():
    g = one_sum(complete(5), 0, complete(5), 0)
    assert euler_genus(g).genus == 2
    assert genus_lower_bound(g) == 2
    assert euler_genus(g, planarity_shortcut=False, cache=GenusCache()).genus == 2


def test_k5_minus_edge_plus():
    g = complete(5).remove_edges([(0, 1)]).with_terminals(0, 1)
    assert euler_genus(g).genus == 0
    assert euler_genus_plus(g).genus == 1


def test_k33_same_part_plus():
    assert euler_genus_plus(complete_bipartite(3, 3).with_terminals(0, 1)).genus == 1


def test_cofacial_terminals():
    g = cycle(6).with_terminals(0, 3)
    assert euler_genus_plus(g).genus == 0


def test_kuratowski():
    assert kuratowski_type(find_kuratowski(complete(5))) == "K5"
    assert kuratowski_type(find_kuratowski(petersen())) == "K33"
    assert find_kuratowski(path(5)) is None


def test_against_brute_force():
    rng = random.Random(11)
    done = 0
    while done < 40:
        g = random_graph(rng, rng.randint(4, 7), 0.6)
        if not g.is_connected() or _embedding_cost(g) > 200_000:
            continue
        assert euler_genus(g, cache=GenusCache()).genus == brute_genus(g), g
        done += 1


def test_genus_at_most_consistent():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(5, 9), 0.55)
        val = euler_genus(g).genus
        assert genus_at_most(g, val) and not genus_at_most(g, val - 1)


def test_persistent_cache(tmp_path):
    p = tmp_path / "c" / "genus.tsv"
    c = GenusCache(p)
    assert euler_genus(complete(6), cache=c).genus == 1
    warm = GenusCache(p)
    assert len(warm) >= 1
    assert euler_genus(complete(6), cache=warm).genus == 1
