"""Constructors for the graph families used throughout the package."""

from __future__ import annotations

import itertools
import random

from .graph import Graph, GraphError, build_graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete(n) needs n >= 1")
    return build_graph(n, itertools.combinations(range(n), 2))


def path(n: int) -> Graph:
    _need(n >= 1, "path(n) needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle(n) needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    _need(leaves >= 1, "star needs at least one leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete_bipartite needs positive part sizes")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a Pruefer sequence."""
    _need(n >= 1, "random_tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return build_graph(n, edges)


def random_connected(n: int, p: float, seed=None) -> Graph:
    """A random spanning tree plus each remaining pair independently with probability ``p``."""
    rng = random.Random(seed)
    tree = random_tree(n, rng.randrange(2**32))
    edges = set(tree.edges)
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def cycle_chain(k: int, count: int) -> Graph:
    """``count`` copies of C_{2k}, consecutive copies glued at diametral vertices.

    Hub vertices (the glue points plus the two outer ends) are labelled
    ``s0, s1, ...`` from left to right; vertex 0 is the left end ``s0``.
    Within cycle ``c`` the top arc is numbered before the bottom arc.
    """
    _need(k >= 2 and count >= 2, "cycle_chain needs k >= 2 and count >= 2")
    edges = []
    labels = ["s0"]
    left = 0
    nxt = 1
    for c in range(count):
        top = list(range(nxt, nxt + k - 1))
        bottom = list(range(nxt + k - 1, nxt + 2 * (k - 1)))
        right = nxt + 2 * (k - 1)
        labels += [f"t{c}.{i}" for i in range(k - 1)]
        labels += [f"b{c}.{i}" for i in range(k - 1)]
        labels.append(f"s{c + 1}")
        for arc in (top, bottom):
            seq = [left] + arc + [right]
            edges += list(zip(seq, seq[1:]))
        left = right
        nxt = right + 1
    return build_graph(nxt, edges, labels)


def cycle_chain_anchors(k: int, count: int) -> tuple[int, int]:
    """The vertices (u, v): the left end of the chain and the first glue point."""
    _need(k >= 2 and count >= 2, "cycle_chain needs k >= 2 and count >= 2")
    return 0, 2 * (k - 1) + 1


def _one_based(n: int, edges, names: str) -> Graph:
    return build_graph(n, [(a - 1, b - 1) for a, b in edges], [f"{names}{i}" for i in range(1, n + 1)])


def fixture_h() -> Graph:
    """13-vertex graph with bridge v5v6 between a chain of 4-cycles and a 4-cycle."""
    edges = [
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
        (6, 8), (8, 7), (7, 13), (13, 6),
        (1, 10), (10, 3), (3, 11), (11, 1),
        (3, 9), (9, 5), (5, 12), (12, 3),
    ]
    return _one_based(13, edges, "v")


def fixture_h_prime() -> Graph:
    """11-vertex graph: K6 on v1..v6, v7 joined to v3, v4, v5, bridge v7v8, K4 on v8..v11."""
    edges = list(itertools.combinations(range(1, 7), 2))
    edges += [(3, 7), (4, 7), (5, 7), (7, 8)]
    edges += list(itertools.combinations(range(8, 12), 2))
    return _one_based(11, edges, "v")


# designated bridge endpoints (u1, u2), 0-based
FIXTURE_H_BRIDGE = (4, 5)
FIXTURE_H_PRIME_BRIDGE = (6, 7)


def sierpinski_demo_k4():
    """K4 with the identity map; feed to :func:`gpsierpinski.product.build_product`."""
    return complete(4), complete(4), [0, 1, 2, 3]


GENERATORS = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "bipartite": complete_bipartite,
    "petersen": petersen,
    "tree": random_tree,
    "random": random_connected,
    "cycle_chain": cycle_chain,
    "fixture_H": fixture_h,
    "fixture_Hprime": fixture_h_prime,
}


def from_spec(spec: str) -> Graph:
    """Build a graph from a ``name:arg:arg`` shorthand such as ``complete:6``."""
    name, *args = spec.split(":")
    if name == "sierpinski_demo_K4":
        from .product import build_product

        return build_product(*sierpinski_demo_k4()).graph
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise GraphError(f"unknown generator {name!r}; known: {', '.join(sorted(GENERATORS))}") from None
    parsed = []
    for a in args:
        try:
            parsed.append(int(a))
        except ValueError:
            try:
                parsed.append(float(a))
            except ValueError:
                raise GraphError(f"bad generator argument {a!r}") from None
    try:
        return fn(*parsed)
    except TypeError as exc:
        raise GraphError(f"bad arguments for {name}: {exc}") from None
