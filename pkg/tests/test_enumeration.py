import random

import pytest
from hypothesis import given, settings, strategies as st

from cliquedelta import Graph, GraphError, f_max, moon_moser, ttt, ttt_ext
from cliquedelta.oracle import oracle_cliques


def random_graph(rng, n, density):
    g = Graph()
    for v in range(1, n + 1):
        g.add_vertex(v)
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < density:
                g.add_edge(u, v)
    return g


def test_triangle():
    g = Graph.from_edges([(1, 2), (2, 3), (1, 3)])
    assert set(ttt(g)) == {(1, 2, 3)}


def test_path():
    g = Graph.from_edges([(1, 2), (2, 3)])
    assert set(ttt(g)) == {(1, 2), (2, 3)}


def test_isolated_vertices_are_singletons():
    g = Graph.from_edges([], vertices=[1, 2, 3])
    assert set(ttt(g)) == {(1,), (2,), (3,)}


def test_moon_moser_6():
    assert sum(1 for _ in ttt(moon_moser(6))) == 9
    assert all(len(c) == 2 for c in ttt(moon_moser(6)))


@pytest.mark.parametrize("n", range(2, 13))
def test_moon_moser_counts(n):
    assert sum(1 for _ in ttt(moon_moser(n))) == f_max(n)


def test_no_duplicates_random():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        out = list(ttt(g))
        assert len(out) == len(set(out))


def test_matches_oracle_random():
    rng = random.Random(17)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        assert set(ttt(g)) == oracle_cliques(g)


def brute_force_subset_cliques(g):
    # exhaustive reference independent of all enumerator code paths
    vs = sorted(g.vertices())
    cliques = []
    for mask in range(1, 1 << len(vs)):
        sub = [vs[i] for i in range(len(vs)) if mask >> i & 1]
        if all(g.has_edge(u, v) for i, u in enumerate(sub) for v in sub[i + 1:]):
            cliques.append(set(sub))
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return {tuple(sorted(c)) for c in maximal}


def test_matches_subset_enumeration():
    rng = random.Random(23)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert set(ttt(g)) == brute_force_subset_cliques(g)


# -- ttt_ext -----------------------------------------------------------


def test_ttt_ext_reduces_to_ttt():
    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        full = set(ttt(g))
        assert set(ttt_ext(g, (), g.vertices(), (), ())) == full


def test_ttt_ext_excluded_edge_in_triangle():
    g = Graph.from_edges([(1, 2), (2, 3), (1, 3)])
    assert list(ttt_ext(g, (), {1, 2, 3}, (), [(1, 2)])) == []


def test_ttt_ext_is_filter_equivalent():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 10), rng.random())
        edges = sorted(g.edges())
        excl = rng.sample(edges, min(len(edges), rng.randint(0, 3)))
        got = set(ttt_ext(g, (), g.vertices(), (), excl))
        want = {c for c in ttt(g)
                if not any(u in c and v in c for u, v in excl)}
        assert got == want


def test_ttt_ext_per_edge_scenario():
    # two batch edges into a 6-vertex graph; processing the second edge with
    # the first excluded emits only the clique not already found
    g = Graph.from_edges([(2, 3), (2, 4), (2, 6), (3, 4), (4, 5), (5, 6),
                          (3, 6), (4, 6)])
    cand = set(g.common_neighbors(4, 6))
    sub = g.induced_subgraph(cand | {4, 6})
    got = set(ttt_ext(sub, (4, 6), cand, (), [(3, 6)]))
    assert got == {(4, 5, 6)}
    cand36 = set(g.common_neighbors(3, 6))
    sub36 = g.induced_subgraph(cand36 | {3, 6})
    assert set(ttt_ext(sub36, (3, 6), cand36, (), [])) == {(2, 3, 4, 6)}


def test_ttt_ext_precondition_errors():
    g = Graph.from_edges([(1, 2), (3, 4)])
    with pytest.raises(GraphError):
        list(ttt_ext(g, (1, 3), {2}, (), ()))  # seed not a clique
    with pytest.raises(GraphError):
        list(ttt_ext(g, (), {1, 2}, {2}, ()))  # cand/fini overlap
    with pytest.raises(GraphError):
        list(ttt_ext(g, (1,), {1, 2}, (), ()))  # seed overlaps cand


@settings(max_examples=60)
@given(st.integers(0, 2 ** 20))
def test_ttt_deterministic(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 9), rng.random())
    assert list(ttt(g)) == list(ttt(g.copy()))
