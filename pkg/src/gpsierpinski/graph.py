"""Simple undirected graphs on vertices ``0..n-1`` and their metric primitives.

Adjacency is kept as one integer bitmask per vertex; distances as a dense
numpy matrix. Both are immutable once a :class:`Graph` is built.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed or unsupported graph input."""


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph.

    Build instances with :func:`build_graph`; the constructor assumes its
    input has already been validated.
    """

    __slots__ = ("n", "edges", "nbr", "labels", "connected", "_dist")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]], labels=None):
        self.n = n
        self.edges = tuple(edges)
        nbr = [0] * n
        for u, v in self.edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.nbr = tuple(nbr)
        self.labels = tuple(labels) if labels is not None else None
        self.connected = _reaches_all(self.nbr)
        self._dist = None

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.nbr[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.nbr[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def distances(self) -> "DistanceMatrix":
        """All-pairs hop distances, computed once and cached."""
        if self._dist is None:
            self._dist = all_pairs_distances(self)
        return self._dist

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph (relaxed) and the list mapping new index -> old index."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = [self.label(v) for v in old] if self.labels else None
        return Graph(len(old), sorted(edges), labels), old

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            reach = _closure(self.nbr, 1 << s)
            seen |= reach
            comps.append(list(bits(reach)))
        return comps


def _closure(nbr: Sequence[int], start: int) -> int:
    reach = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= nbr[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach


def _reaches_all(nbr: Sequence[int]) -> bool:
    n = len(nbr)
    if n == 0:
        return False
    return _closure(nbr, 1) == (1 << n) - 1


def build_graph(n: int, edges: Iterable[Sequence[int]], labels=None, strict: bool = True) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    In strict mode duplicate edges and disconnected graphs are rejected;
    otherwise duplicates are merged and disconnected graphs are allowed.
    Self-loops and out-of-range endpoints always raise :class:`GraphError`.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen and strict:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
    if labels is not None:
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    g = Graph(n, sorted(seen), labels)
    if strict and not g.connected:
        raise GraphError("graph is disconnected")
    return g


class DistanceMatrix:
    """Dense hop-count matrix. ``D[u, v]`` and ``D.rows[u][v]`` both work."""

    __slots__ = ("array", "rows")

    def __init__(self, array: np.ndarray):
        self.array = array
        self.array.setflags(write=False)
        self.rows = array.tolist()

    def __getitem__(self, key):
        u, v = key
        return self.rows[u][v]

    @property
    def n(self) -> int:
        return self.array.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.array.max())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    if not g.connected:
        raise GraphError("distances require a connected graph")
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    d = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = d[s]
        row[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            nd = row[x] + 1
            for y in adj[x]:
                if row[y] < 0:
                    row[y] = nd
                    q.append(y)
    return DistanceMatrix(d)


def in_interval(D: DistanceMatrix, a: int, b: int, w: int) -> bool:
    """True iff ``w`` lies on some shortest ``a,b``-path."""
    r = D.rows
    return r[a][w] + r[w][b] == r[a][b]


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Cut edges, in the graph's sorted edge order (iterative low-link)."""
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    found = set()
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.add((min(v, parent), max(v, parent)))
    return [e for e in g.edges if e in found]


def is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if (mask & ~(1 << v)) & ~g.nbr[v]:
            return False
    return True


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if is_clique(g, g.nbr[v])]


def blocks(g: Graph) -> list[list[int]]:
    """Vertex sets of the maximal 2-connected subgraphs and bridges.

    Isolated vertices form singleton blocks.
    """
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not adj[root]:
            out.append([root])
            disc[root] = t
            t += 1
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        comp = set()
                        while True:
                            a, b = edge_stack.pop()
                            comp.update((a, b))
                            if (a, b) == (parent, v):
                                break
                        out.append(sorted(comp))
    return out


def is_block_graph(g: Graph) -> bool:
    return all(is_clique(g, to_mask(b)) for b in blocks(g))


def is_convex_subset(g: Graph, subset: Iterable[int]) -> bool:
    """True iff every shortest path between members of ``subset`` stays inside it."""
    s = sorted(set(subset))
    if not s:
        raise GraphError("convexity of the empty set is undefined")
    d = g.distances().array
    out = np.setdiff1d(np.arange(g.n), s)
    if out.size == 0:
        return True
    inner = d[np.ix_(s, s)]
    via = d[np.ix_(s, out)]
    # via[u, w] + via[v, w] == d[u, v] for some u, v in S and w outside
    between = via[:, None, :] + via[None, :, :] == inner[:, :, None]
    return not bool(between.any())


def is_isometric_subset(g: Graph, subset: Iterable[int]) -> bool:
    """True iff distances inside ``G[subset]`` equal distances in ``G``."""
    sub, old = g.induced(list(subset))
    if not sub.connected:
        raise GraphError("induced subgraph is disconnected")
    inner = sub.distances().array
    return bool((inner == g.distances().array[np.ix_(old, old)]).all())
