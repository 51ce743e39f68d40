"""The Sierpinski product G (x)_f H and enumeration of the maps f: V(G) -> V(H)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, GraphError, is_clique


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    g: Graph
    h: Graph
    vmap: tuple[int, ...]
    connecting: tuple[tuple[int, int], ...]

    @property
    def g_dim(self) -> int:
        return self.g.n

    @property
    def h_dim(self) -> int:
        return self.h.n

    def index(self, g: int, h: int) -> int:
        return g * self.h.n + h

    def decode(self, v: int) -> tuple[int, int]:
        return divmod(v, self.h.n)


def check_map(g: Graph, h: Graph, vmap: Sequence[int]) -> tuple[int, ...]:
    vmap = tuple(int(x) for x in vmap)
    if len(vmap) != g.n:
        raise GraphError(f"map has length {len(vmap)}, expected {g.n}")
    for x in vmap:
        if not 0 <= x < h.n:
            raise GraphError(f"map value {x} out of range for n(H)={h.n}")
    return vmap


def build_product(g: Graph, h: Graph, vmap: Sequence[int]) -> ProductGraph:
    """Copies gH of H for every vertex g, plus (g, f(g'))(g', f(g)) for every edge gg'."""
    if not (g.connected and h.connected):
        raise GraphError("factors must be connected")
    vmap = check_map(g, h, vmap)
    nh = h.n
    edges = [(a * nh + x, a * nh + y) for a in range(g.n) for x, y in h.edges]
    connecting = tuple((a * nh + vmap[b], b * nh + vmap[a]) for a, b in g.edges)
    edges += connecting
    labels = [f"({a},{x})" for a in range(g.n) for x in range(nh)]
    graph = Graph(g.n * nh, sorted(edges), labels)
    assert graph.connected and graph.m == g.n * h.m + g.m
    return ProductGraph(graph, g, h, vmap, connecting)


def copy_vertices(p: ProductGraph, g: int) -> list[int]:
    if not 0 <= g < p.g_dim:
        raise GraphError(f"no copy {g}")
    return list(range(g * p.h_dim, (g + 1) * p.h_dim))


def is_complete(g: Graph) -> bool:
    return is_clique(g, (1 << g.n) - 1)


def partitions(total: int, max_parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into at most ``max_parts`` parts, reverse-lexicographic."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def partition_map(parts: Sequence[int]) -> tuple[int, ...]:
    """The non-decreasing map whose i-th fibre has size ``parts[i]``."""
    return tuple(i for i, k in enumerate(parts) for _ in range(k))


def parse_mode(mode: str):
    """``full``, ``sym``, ``cap:<k>`` or ``auto`` -> (kind, limit)."""
    if mode in ("full", "sym", "auto"):
        return mode, None
    if mode.startswith("cap:"):
        try:
            k = int(mode[4:])
        except ValueError:
            raise GraphError(f"bad cap in mode {mode!r}") from None
        if k < 1:
            raise GraphError("cap must be positive")
        return "cap", k
    raise GraphError(f"unknown enumeration mode {mode!r}")


FULL_LIMIT = 10**6


def resolve_mode(g: Graph, h: Graph, mode: str) -> str:
    """Replace ``auto`` by the default policy for the factor pair."""
    if mode != "auto":
        return mode
    if is_complete(g) and is_complete(h):
        return "sym"
    if h.n ** g.n <= FULL_LIMIT:
        return "full"
    return "cap:1000"


def enumerate_maps(g: Graph, h: Graph, mode: str = "full") -> Iterator[tuple[int, ...]]:
    kind, limit = parse_mode(resolve_mode(g, h, mode))
    if kind == "full":
        yield from itertools.product(range(h.n), repeat=g.n)
    elif kind == "sym":
        if not (is_complete(g) and is_complete(h)):
            raise GraphError("symmetry reduction needs two complete factors")
        for parts in partitions(g.n, h.n):
            yield partition_map(parts)
    else:
        seen = set()
        for f in itertools.islice(itertools.product(range(h.n), repeat=g.n), limit):
            seen.add(f)
            yield f
        extra = [(x,) * g.n for x in range(h.n)]
        if h.n >= g.n:
            extra.append(tuple(range(g.n)))
        for f in extra:
            if f not in seen:
                seen.add(f)
                yield f


def map_count(g: Graph, h: Graph, mode: str = "full") -> int:
    kind, limit = parse_mode(resolve_mode(g, h, mode))
    if kind == "full":
        return h.n ** g.n
    return sum(1 for _ in enumerate_maps(g, h, mode))


def covers_all(g: Graph, h: Graph, mode: str) -> bool:
    """Whether the mode reaches every map up to proven symmetry."""
    kind, limit = parse_mode(resolve_mode(g, h, mode))
    if kind == "cap":
        return limit >= h.n ** g.n
    return True
