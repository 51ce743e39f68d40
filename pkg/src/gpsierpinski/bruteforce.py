"""Exhaustive subset search, for cross-checking the branch and bound on small graphs."""

from __future__ import annotations

import itertools

from .graph import Graph
from .solver import is_colinear_set, is_general_position

BRUTE_FORCE_LIMIT = 16


def _largest(n: int, ok) -> list[int]:
    for size in range(n, 0, -1):
        for s in itertools.combinations(range(n), size):
            if ok(s):
                return list(s)
    return []


def brute_gp(g: Graph) -> int:
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    return len(_largest(g.n, lambda s: is_general_position(g, s)))


def brute_xi(g: Graph, u: int) -> int:
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    return len(_largest(g.n, lambda s: is_colinear_set(g, u, s)))


def general_position_sets(g: Graph):
    """Every general position set, smallest first."""
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if is_general_position(g, s):
                yield s
