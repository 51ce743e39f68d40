"""Deterministic graph corpora for the verification battery and the tests."""

from __future__ import annotations

import random
from functools import lru_cache

from .generators import random_connected, random_tree
from .graph import Graph, build_graph


@lru_cache(maxsize=None)
def atlas_connected(max_n: int, min_n: int = 1) -> tuple[Graph, ...]:
    """All connected graphs with ``min_n <= n <= max_n`` up to isomorphism (n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    import networkx as nx

    out = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if min_n <= n <= max_n and n > 0 and nx.is_connected(nxg):
            out.append(build_graph(n, sorted(tuple(sorted(e)) for e in nxg.edges())))
    return tuple(out)


def random_trees(count: int, lo: int, hi: int, seed: int = 0) -> list[Graph]:
    rng = random.Random(seed)
    return [random_tree(rng.randint(lo, hi), rng.randrange(2**32)) for _ in range(count)]


def random_graphs(count: int, lo: int, hi: int, seed: int = 0) -> list[Graph]:
    """Connected graphs with order in ``[lo, hi]`` and edge density spread over (0, 0.7)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(lo, hi)
        p = rng.uniform(0.0, 0.7)
        out.append(random_connected(n, p, rng.randrange(2**32)))
    return out
