import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gpsierpinski import generators as gen
from gpsierpinski.graph import GraphError, build_graph, bridges, in_interval, is_block_graph
from gpsierpinski.sierpinski import leaves
from gpsierpinski.solver import (
    CollinearityOracle,
    SolverConfig,
    bridge_lower_bound,
    gp_block_graph,
    is_colinear_set,
    is_general_position,
    is_general_position_characterized,
    max_gp,
    twin_classes,
    xi,
    xi_all,
    xi_max,
    xi_minus,
)

from oracles import brute_gp, brute_is_gp, brute_xi, nx_distances


def random_graph(draw, lo=2, hi=8):
    n = draw(st.integers(lo, hi))
    return gen.random_connected(n, draw(st.floats(0.15, 0.9)), draw(st.integers(0, 100_000)))


small_graphs = st.composite(lambda draw: random_graph(draw))


def test_oracle_is_symmetric():
    g = gen.fixture_h()
    oracle = CollinearityOracle(g.distances())
    d = nx_distances(g)
    for a, b, c in itertools.combinations(range(g.n), 3):
        expected = d[a][b] + d[b][c] == d[a][c] or d[a][c] + d[c][b] == d[a][b] or d[b][a] + d[a][c] == d[b][c]
        for x, y, z in itertools.permutations((a, b, c)):
            assert oracle.collinear(x, y, z) == expected


def test_oracle_lazy_masks_match_eager():
    g = gen.cycle_chain(4, 20)
    assert g.n > 128
    oracle = CollinearityOracle(g.distances())
    d = g.distances()
    rng = random.Random(5)
    for _ in range(200):
        a, b = rng.sample(range(g.n), 2)
        mask = oracle.mask(a, b)
        for w in range(g.n):
            expected = in_interval(d, a, b, w) or in_interval(d, a, w, b) or in_interval(d, w, b, a)
            assert bool(mask >> w & 1) == expected


def test_verifier_examples():
    p4 = gen.path(4)
    assert not is_general_position(p4, [0, 1, 2])
    assert is_general_position(p4, [0, 3])
    assert is_general_position(gen.petersen(), [])
    assert is_general_position_characterized(gen.complete(5), range(5))
    assert is_general_position_characterized(gen.cycle(6), [0, 2, 4])
    assert not is_general_position_characterized(gen.cycle(6), [0, 1, 3])


def test_max_gp_examples():
    res = max_gp(gen.petersen())
    assert res.value == 6 and res.optimal and len(res.witness) == 6
    assert is_general_position(gen.petersen(), res.witness)
    for n in (1, 2, 3, 6):
        assert max_gp(gen.complete(n)).value == n
    assert max_gp(gen.cycle(4)).value == brute_gp(gen.cycle(4)) == 2
    assert max_gp(gen.cycle(5)).value == brute_gp(gen.cycle(5)) == 3


def test_trees_give_leaf_count():
    for seed in range(30):
        t = gen.random_tree(3 + seed % 15, seed)
        ell = leaves(t)
        assert max_gp(t).value == ell
        for u in range(t.n):
            assert xi(t, u).value == (ell - 1 if t.degree(u) == 1 else ell)


def test_xi_examples():
    for n in (2, 3, 5):
        assert all(r.value == n - 1 for r in xi_all(gen.complete(n)))
    chain = gen.cycle_chain(3, 5)
    u, v = gen.cycle_chain_anchors(3, 5)
    assert xi(chain, u).value == 2
    assert xi(chain, v).value == 4
    assert [r.value for r in xi_all(gen.petersen())] == [5] * 10


def test_xi_extremes():
    t = gen.star(4)
    assert xi_minus(t) == (3, 1)
    assert xi_max(t) == (4, 0)
    chain = gen.cycle_chain(3, 5)
    assert xi_minus(chain)[0] == 2 and xi_max(chain)[0] == 4


def test_bipartite_common_value():
    g = gen.complete_bipartite(3, 3)
    values = {r.value for r in xi_all(g)}
    assert values == {max_gp(g).value} == {brute_gp(g)}


def test_xi_anchor_range():
    with pytest.raises((GraphError, ValueError)):
        xi(gen.path(3), 5)


def test_fixture_bridge_bounds():
    h, hp = gen.fixture_h(), gen.fixture_h_prime()
    assert max_gp(h).value == 6
    assert bridge_lower_bound(h, gen.FIXTURE_H_BRIDGE) == 5
    assert max_gp(hp).value == 6
    assert bridge_lower_bound(hp, gen.FIXTURE_H_PRIME_BRIDGE) == 6


def test_bridge_bound_errors():
    with pytest.raises(GraphError):
        bridge_lower_bound(gen.cycle(5), (0, 1))
    with pytest.raises(GraphError):
        bridge_lower_bound(gen.path(4), (0, 1))


def test_block_graph_examples():
    bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert gp_block_graph(bowtie) == max_gp(bowtie).value == brute_gp(bowtie) == 4
    assert gp_block_graph(gen.complete(4)) == 4
    t = gen.random_tree(10, 2)
    assert gp_block_graph(t) == leaves(t)
    with pytest.raises(GraphError):
        gp_block_graph(gen.cycle(4))


def test_twin_classes():
    classes = twin_classes(gen.complete_bipartite(2, 3))
    assert sorted(map(sorted, classes)) == [[0, 1], [2, 3, 4]]


def test_node_limit_reports_non_optimal():
    g = gen.cycle_chain(3, 6)
    res = max_gp(g, SolverConfig(node_limit=1, seed_greedy=False))
    assert not res.optimal
    assert is_general_position(g, res.witness)


def test_branch_orders_agree():
    for seed in range(10):
        g = gen.random_connected(14, 0.3, seed)
        a = max_gp(g, SolverConfig(branch_order="conflicts"))
        b = max_gp(g, SolverConfig(branch_order="index", seed_greedy=False))
        assert a.value == b.value


def test_result_json_shape():
    out = xi(gen.petersen(), 3).to_json()
    assert set(out) == {"value", "witness", "optimal", "nodes", "ms", "u"}
    assert out["u"] == 3


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_solver_agrees_with_brute_force(g):
    res = max_gp(g)
    assert res.optimal and res.value == brute_gp(g)
    assert brute_is_gp(g, res.witness)
    for u in range(g.n):
        r = xi(g, u)
        assert r.value == brute_xi(g, u)


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_witness_soundness(g):
    res = max_gp(g)
    assert is_general_position(g, res.witness) and is_general_position_characterized(g, res.witness)
    d = nx_distances(g)
    for u in range(g.n):
        w = xi(g, u).witness
        assert u not in w
        assert is_general_position_characterized(g, w)
        assert is_colinear_set(g, u, w)
        for x, y in itertools.permutations(w, 2):
            assert d[x][y] + d[y][u] != d[x][u]


@settings(max_examples=200, deadline=None)
@given(small_graphs(), st.data())
def test_verifiers_agree_on_random_subsets(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert is_general_position(g, s) == is_general_position_characterized(g, s) == brute_is_gp(g, s)


@settings(max_examples=60, deadline=None)
@given(st.composite(lambda draw: random_graph(draw, 10, 24))())
def test_node_limit_monotone(g):
    values = [max_gp(g, SolverConfig(node_limit=k)).value for k in (1, 4, 16, 64, 256)]
    values.append(max_gp(g).value)
    assert values == sorted(values)


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_chain_inequality(g):
    values = [r.value for r in xi_all(g)]
    gp = max_gp(g).value
    assert min(values) <= max(values) <= gp <= 2 * min(values)


@settings(max_examples=80, deadline=None)
@given(st.composite(lambda draw: random_graph(draw, 3, 14))())
def test_bridge_bound_below_gp(g):
    gp = max_gp(g).value
    for a, b in bridges(g):
        if g.degree(a) < 2 or g.degree(b) < 2:
            continue
        bound = bridge_lower_bound(g, (a, b))
        assert bound <= gp
        if is_block_graph(g):
            assert bound == gp
