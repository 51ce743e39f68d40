import itertools

import pytest

from gpsierpinski import generators as gen
from gpsierpinski.corpus import atlas_connected
from gpsierpinski.graph import GraphError
from gpsierpinski.product import build_product, enumerate_maps
from gpsierpinski.sierpinski import (
    count_degree_nminus1,
    evaluate_maps,
    gps_both,
    gps_lower,
    gps_max,
    k6k9_witness,
    predict,
)
from gpsierpinski.solver import is_general_position, max_gp, xi_all

from oracles import brute_gp, to_nx


def by_name(preds, name, kind):
    return next(p for p in preds if p.name == name and p.kind == kind)


def nx_count_degree(p, target):
    return sum(1 for _, d in to_nx(p.graph).degree() if d == target)


def test_gps_examples():
    k3, k4 = gen.complete(3), gen.complete(4)
    assert gps_max(k3, k3).value == 6
    assert gps_lower(k3, k4).value == 6
    res = gps_max(k3, gen.star(3))
    assert res.value == 9 and res.exhaustive


def test_k2_first_factor_matches_colinear_numbers():
    k2 = gen.complete(2)
    for h in atlas_connected(5, 2):
        xis = [r.value for r in xi_all(h)]
        hi, lo = gps_both(k2, h, "full")
        assert hi.value == 2 * max(xis)
        assert lo.value == 2 * min(xis)
        assert hi.exhaustive and lo.exhaustive


def test_witness_reproducible():
    g, h = gen.path(3), gen.cycle(5)
    for res in gps_both(g, h, "full"):
        p = build_product(g, h, res.witness_map)
        assert max_gp(p.graph).value == res.value
        assert len(res.witness_set) == res.value
        assert is_general_position(p.graph, res.witness_set)


def test_fold_tie_break_is_smallest_map():
    res = gps_max(gen.complete(2), gen.complete(2), "full")
    rows = evaluate_maps(gen.complete(2), gen.complete(2), "full")
    best = max(r[1] for r in rows)
    assert res.witness_map == min(tuple(r[0]) for r in rows if r[1] == best)


def test_cap_mode_not_exhaustive():
    res = gps_max(gen.path(3), gen.cycle(4), "cap:2")
    assert not res.exhaustive
    assert res.maps_evaluated == len(list(enumerate_maps(gen.path(3), gen.cycle(4), "cap:2")))


def test_jobs_do_not_change_values():
    g, h = gen.path(3), gen.cycle(4)
    a = gps_both(g, h, "full", jobs=1)
    b = gps_both(g, h, "full", jobs=2)
    assert [r.value for r in a] == [r.value for r in b]
    assert [r.witness_map for r in a] == [r.witness_map for r in b]


def test_lower_never_exceeds_max():
    for g in atlas_connected(3, 2):
        for h in atlas_connected(4, 2):
            hi, lo = gps_both(g, h, "full")
            assert lo.value <= hi.value
            for p in predict(g, h):
                target = hi.value if p.kind == "max" else lo.value
                assert p.admits(target), (p.name, p.kind, target)


def test_predict_k6_k9():
    preds = predict(gen.complete(6), gen.complete(9))
    lower = by_name(preds, "complete_lower", "lower")
    assert not lower.applicable
    floor = by_name(preds, "degree_count_floor", "lower")
    assert floor.applicable and floor.low == 24
    assert by_name(preds, "k6_k9", "lower").value == 25
    assert by_name(preds, "complete_max", "max").value == 6 * 8


def test_predict_small_cases():
    k2 = gen.complete(2)
    preds = predict(k2, k2)
    lower = by_name(preds, "complete_lower", "lower")
    assert lower.applicable and lower.value == 2
    tree = by_name(predict(gen.complete(3), gen.star(3)), "tree_second_factor", "max")
    assert tree.applicable and tree.value == 9
    assert not by_name(predict(gen.complete(3), gen.complete(2)), "tree_second_factor", "max").applicable


def test_predict_large_first_factor_floor():
    p = by_name(predict(gen.complete(5), gen.complete(3)), "large_first_factor_floor", "lower")
    assert p.applicable and p.low == 5


def test_degree_count_examples():
    k2 = gen.complete(2)
    for f in itertools.product(range(2), repeat=2):
        assert count_degree_nminus1(build_product(k2, k2, f)) == 2
    for m, n in ((3, 4), (4, 6), (6, 9)):
        p = build_product(gen.complete(m), gen.complete(n), [0] * m)
        assert count_degree_nminus1(p) == nx_count_degree(p, n - 1)
    p = build_product(gen.complete(6), gen.complete(9), range(6))
    assert count_degree_nminus1(p) == nx_count_degree(p, 8) >= 24
    with pytest.raises(GraphError):
        count_degree_nminus1(build_product(gen.path(3), gen.complete(3), [0, 1, 2]))


def test_degree_floor_on_every_map():
    for m in range(2, 5):
        for n in range(m, 6):
            g, h = gen.complete(m), gen.complete(n)
            for f in enumerate_maps(g, h, "full"):
                p = build_product(g, h, f)
                count = count_degree_nminus1(p)
                assert max_gp(p.graph).value >= count >= (n - m + 1) * m


def test_large_first_factor_floor_on_every_map():
    for m, n in ((3, 2), (4, 2), (4, 3), (5, 3)):
        g, h = gen.complete(m), gen.complete(n)
        for f in enumerate_maps(g, h, "full"):
            assert max_gp(build_product(g, h, f).graph).value >= max(2 * (n - 1), m)


def test_k6_k9_witness_is_general_position():
    f, members = k6k9_witness()
    assert len(set(f)) == 6 and len(members) == 25
    p = build_product(gen.complete(6), gen.complete(9), f)
    assert is_general_position(p.graph, members)


def test_small_gp_against_brute_force_on_products():
    for f in itertools.product(range(3), repeat=2):
        p = build_product(gen.complete(2), gen.path(3), f)
        assert max_gp(p.graph).value == brute_gp(p.graph)


def test_gps_result_json():
    out = gps_max(gen.complete(2), gen.complete(3), "full").to_json(per_map=True)
    assert out["kind"] == "max" and out["mode"] == "full"
    assert len(out["per_map"]) == 9
