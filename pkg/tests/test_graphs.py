import random

import networkx as nx
import pytest

from monlc import Graph, edge_ideal, odd_cycle_census
from monlc._bits import labels_of, popcount
from monlc.graphs import cycle_order, has_odd_hole, induced_cycles, is_bipartite, minimum_odd_cycle

from conftest import TRIANGLE_PENDANT_PATH, TWO_VALUES, random_connected_graph


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(G.edges)
    return g


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
    assert Graph(3, [(2, 1), (1, 2)]).edges == ((1, 2),)


def test_edge_ideals():
    assert set(edge_ideal(Graph.cycle(5)).gens) == {(1, 1, 0, 0, 0), (1, 0, 0, 0, 1), (0, 1, 1, 0, 0),
                                                    (0, 0, 1, 1, 0), (0, 0, 0, 1, 1)}
    assert edge_ideal(Graph(2, [(1, 2)])).gens == ((1, 1),)
    assert len(edge_ideal(Graph.complete(3)).gens) == 3
    with pytest.warns(RuntimeWarning):
        assert edge_ideal(Graph(3)).is_zero()


def test_neighbourhoods():
    G = TRIANGLE_PENDANT_PATH
    assert G.neighbors(1) == {2, 3, 4}
    assert G.closed_nbhd([1, 2, 3]) == {1, 2, 3, 4}
    assert G.open_nbhd([5]) == {4}
    assert G.degree(4) == 2
    H, labels = G.delete(G.closed_mask([1, 2, 3]))
    assert labels == (5,) and H.n == 1 and not H.edges


def test_induced_cycles_match_networkx():
    rng = random.Random(51)
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(3, 8), rng.choice([0.3, 0.45, 0.6]))
        ours = {frozenset(labels_of(m)) for m in induced_cycles(G)}
        theirs = {frozenset(c) for c in nx.chordless_cycles(to_nx(G)) if len(c) >= 3}
        assert ours == theirs


def test_cycle_order_walks_the_cycle():
    G = Graph.cycle(7)
    order = cycle_order(G, (1 << 7) - 1)
    assert order[0] == 1 and len(order) == 7
    assert all(G.adj[order[k] - 1] >> (order[(k + 1) % 7] - 1) & 1 for k in range(7))


def test_alpha_matches_networkx():
    rng = random.Random(52)
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(2, 9), 0.4)
        comp = nx.complement(to_nx(G))
        best = max(len(c) for c in nx.find_cliques(comp))
        assert G.alpha() == best
    assert Graph(3).alpha(0) == 0


def test_independent_sets_ordered():
    sets = Graph.cycle(5).independent_sets()
    assert len(sets) == 10
    sizes = [popcount(m) for m in sets]
    assert sizes == sorted(sizes)


def test_census_examples():
    c5 = odd_cycle_census(Graph.cycle(5))
    assert c5.c == 2 and not c5.is_bipartite and c5.is_unicyclic and not c5.is_perfect
    c7 = odd_cycle_census(Graph.cycle(7))
    assert c7.c == 3 and not c7.is_perfect
    c6 = odd_cycle_census(Graph.cycle(6))
    assert c6.c == 0 and c6.is_bipartite and c6.is_perfect
    tp = odd_cycle_census(TRIANGLE_PENDANT_PATH)
    assert tp.c == 1 and tp.is_unicyclic and tp.is_perfect
    tv = odd_cycle_census(TWO_VALUES)
    assert tv.c == 2 and not tv.is_unicyclic
    assert tv.as_dict()["odd_cycles"] == [[1, 6, 7], [1, 2, 3, 4, 5]]


def test_bipartite_and_perfection_match_networkx():
    rng = random.Random(53)
    for _ in range(40):
        G = random_connected_graph(rng, rng.randint(3, 8), rng.choice([0.3, 0.5]))
        g = to_nx(G)
        assert is_bipartite(G) == nx.is_bipartite(g)
        census = odd_cycle_census(G)
        assert census.is_bipartite == nx.is_bipartite(g)
        assert (census.c == 0) == census.is_bipartite
        # odd holes in G or its complement, via networkx chordless cycles
        holes = any(len(c) >= 5 and len(c) % 2 for c in nx.chordless_cycles(g))
        coholes = any(len(c) >= 5 and len(c) % 2 for c in nx.chordless_cycles(nx.complement(g)))
        assert census.is_perfect == (not holes and not coholes)
        assert has_odd_hole(G) == holes


def test_minimum_odd_cycle():
    assert minimum_odd_cycle(Graph.cycle(6)) is None
    assert sorted(minimum_odd_cycle(TWO_VALUES)) == [1, 6, 7]
    assert minimum_odd_cycle(Graph.cycle(5)) == (1, 2, 3, 4, 5)


def test_components_and_complement():
    G = Graph(5, [(1, 2), (3, 4)])
    assert not G.is_connected()
    assert len(G.components()) == 3
    assert G.complement().complement() == G
    assert Graph.complete(4).complement().edges == ()
    assert Graph.path(4).edges == ((1, 2), (2, 3), (3, 4))
