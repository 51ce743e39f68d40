import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gpsierpinski import generators as gen
from gpsierpinski.corpus import atlas_connected, random_graphs, random_trees
from gpsierpinski.graph import (
    GraphError,
    all_pairs_distances,
    bridges,
    build_graph,
    in_interval,
    is_block_graph,
    is_convex_subset,
    is_isometric_subset,
    simplicial_vertices,
)

from oracles import nx_block_graph, nx_bridges, nx_distances


def test_build_small_examples():
    k2 = build_graph(2, [(0, 1)])
    assert k2.n == 2 and k2.m == 1
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert p3.distances()[0, 2] == 2
    k4 = build_graph(4, list(itertools.combinations(range(4), 2)))
    assert k4.distances().diameter == 1


def test_build_dedupes_in_relaxed_mode():
    g = build_graph(3, [(0, 1), (1, 0), (1, 2)], strict=False)
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(0, 1), (1, 0), (1, 2)]),  # duplicate
        (2, [(0, 0), (0, 1)]),  # loop
        (2, [(0, 2)]),  # out of range
        (4, [(0, 1), (2, 3)]),  # disconnected
    ],
)
def test_build_errors(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_relaxed_still_rejects_loops():
    with pytest.raises(GraphError):
        build_graph(2, [(1, 1)], strict=False)
    assert not build_graph(4, [(0, 1), (2, 3)], strict=False).connected


def test_distance_examples():
    assert gen.cycle(6).distances()[0, 3] == 3
    assert gen.petersen().distances().diameter == 2
    assert gen.path(5).distances()[0, 4] == 4


def test_in_interval_examples():
    d = gen.path(3).distances()
    assert in_interval(d, 0, 2, 1)
    d = gen.cycle(4).distances()
    assert in_interval(d, 0, 2, 1) and in_interval(d, 0, 2, 3)
    assert not in_interval(gen.complete(4).distances(), 0, 1, 2)


def test_bridges_examples():
    t = gen.random_tree(12, seed=3)
    assert bridges(t) == list(t.edges)
    assert bridges(gen.cycle(5)) == []
    assert gen.FIXTURE_H_BRIDGE in bridges(gen.fixture_h())


def test_simplicial_examples():
    assert simplicial_vertices(gen.complete(5)) == list(range(5))
    assert simplicial_vertices(gen.path(4)) == [0, 3]
    assert simplicial_vertices(gen.cycle(5)) == []


def test_block_graph_examples():
    assert is_block_graph(gen.random_tree(9, seed=1))
    assert is_block_graph(gen.complete(4))
    assert not is_block_graph(gen.cycle(4))


def test_convex_examples():
    c6 = gen.cycle(6)
    assert is_convex_subset(c6, [0, 1, 2])
    assert not is_convex_subset(gen.cycle(4), [0, 2])
    assert is_convex_subset(gen.petersen(), range(10))
    with pytest.raises(GraphError):
        is_convex_subset(c6, [])


def test_isometric_examples():
    c6 = gen.cycle(6)
    assert is_isometric_subset(c6, [0, 1, 2, 3])
    assert not is_isometric_subset(c6, [0, 1, 2, 3, 4])
    assert is_isometric_subset(c6, range(6))
    with pytest.raises(GraphError):
        is_isometric_subset(c6, [0, 3])


def test_generator_examples():
    chain = gen.cycle_chain(3, 5)
    assert chain.n == 26
    h = gen.fixture_h()
    assert (h.n, h.m) == (13, 17)
    p = gen.petersen()
    assert (p.n, p.m) == (10, 15) and all(p.degree(v) == 3 for v in range(10))
    hp = gen.fixture_h_prime()
    assert hp.n == 11 and gen.FIXTURE_H_PRIME_BRIDGE in bridges(hp)


def test_cycle_chain_orders_and_anchors():
    for k in (2, 3, 4):
        for count in (2, 3, 5):
            g = gen.cycle_chain(k, count)
            assert g.n == count * (2 * k - 1) + 1
            u, v = gen.cycle_chain_anchors(k, count)
            assert g.degree(u) == 2 and g.degree(v) == 4
            assert bridges(g) == []


def test_from_spec():
    assert gen.from_spec("complete:5").m == 10
    assert gen.from_spec("cycle_chain:3:5").n == 26
    assert gen.from_spec("petersen").n == 10
    with pytest.raises(GraphError):
        gen.from_spec("nosuch:3")
    with pytest.raises(GraphError):
        gen.from_spec("cycle:2")


def _all_generators():
    yield from (gen.complete(n) for n in (1, 2, 5))
    yield from (gen.path(n) for n in (1, 2, 6))
    yield from (gen.cycle(n) for n in (3, 4, 7))
    yield gen.star(4)
    yield gen.complete_bipartite(2, 3)
    yield gen.petersen()
    yield gen.cycle_chain(3, 5)
    yield gen.fixture_h()
    yield gen.fixture_h_prime()
    yield gen.sierpinski_demo_k4()[0]


CORPUS = list(_all_generators()) + random_trees(100, 2, 30, seed=11) + random_graphs(100, 2, 20, seed=12)


def test_distance_matrix_invariants_on_corpus():
    for g in CORPUS:
        d = g.distances().rows
        assert d == nx_distances(g)
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
        for u, v, w in itertools.product(range(min(g.n, 12)), repeat=3):
            assert d[u][w] <= d[u][v] + d[v][w]


def test_adjacency_symmetric_and_connected():
    for g in CORPUS:
        for u in range(g.n):
            assert not g.has_edge(u, u)
            for v in g.neighbors(u):
                assert g.has_edge(v, u)
        assert g.connected and len(g.components()) == 1


def test_bridges_match_reference_on_corpus():
    for g in CORPUS:
        assert bridges(g) == nx_bridges(g)


def test_block_graph_exhaustive_small():
    graphs = atlas_connected(7)
    assert len(graphs) == 1 + 1 + 2 + 6 + 21 + 112 + 853
    for g in graphs:
        assert is_block_graph(g) == nx_block_graph(g)


def test_all_pairs_distances_matches_method():
    g = gen.petersen()
    assert all_pairs_distances(g).rows == g.distances().rows


@st.composite
def graph_and_subset(draw):
    n = draw(st.integers(2, 10))
    seed = draw(st.integers(0, 10_000))
    p = draw(st.floats(0.1, 0.8))
    g = gen.random_connected(n, p, seed)
    s = draw(st.sets(st.integers(0, n - 1), min_size=1))
    return g, sorted(s)


@settings(max_examples=300, deadline=None)
@given(graph_and_subset())
def test_convex_implies_isometric(case):
    g, s = case
    if is_convex_subset(g, s):
        sub, _ = g.induced(s)
        assert sub.connected
        assert is_isometric_subset(g, s)


@settings(max_examples=200, deadline=None)
@given(graph_and_subset())
def test_convex_matches_definition(case):
    g, s = case
    d = nx_distances(g)
    inside = set(s)
    expected = not any(
        d[a][w] + d[w][b] == d[a][b] for a in s for b in s for w in range(g.n) if w not in inside
    )
    assert is_convex_subset(g, s) == expected
