"""Exact general position and colinear-set numbers.

Both problems are maximum independent set problems in the 3-uniform
hypergraph of collinear triples (plus, for colinear sets, a pairwise
conflict relation towards the anchor). The search is a branch and bound
in the style of MCS max-clique solvers: candidate vertices are greedily
covered by cliques of the current pairwise-conflict graph, at most one
vertex per clique can still be chosen, and the cover doubles as the
branching order. Twin vertices are interchangeable and only explored in
index order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from .graph import DistanceMatrix, Graph, GraphError, bits, blocks, bridges, is_block_graph, is_clique, simplicial_vertices, to_mask

EAGER_MASK_LIMIT = 128


@dataclass(frozen=True)
class SolverConfig:
    time_limit: float | None = None  # seconds
    node_limit: int | None = None
    branch_order: str = "conflicts"  # or "index"
    seed_greedy: bool = True

    def __post_init__(self):
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.branch_order not in ("conflicts", "index"):
            raise ValueError(f"unknown branch order {self.branch_order!r}")


DEFAULT_CONFIG = SolverConfig()


@dataclass
class SolveResult:
    value: int
    witness: list[int]
    optimal: bool
    nodes: int = 0
    elapsed: float = 0.0
    anchor: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "witness": self.witness,
            "optimal": self.optimal,
            "nodes": self.nodes,
            "ms": round(self.elapsed * 1000, 3),
        }
        if self.anchor is not None:
            out["u"] = self.anchor
        return out


class CollinearityOracle:
    """Collinear-triple queries over a distance matrix.

    ``mask(a, b)`` is the bitmask of every ``w`` such that ``a, b, w`` lie
    on a common shortest path (``a`` and ``b`` themselves included).
    """

    def __init__(self, D: DistanceMatrix):
        self.D = D
        self.n = D.n
        self._rows: dict[int, list[int]] = {}
        if self.n < EAGER_MASK_LIMIT:
            for a in range(self.n):
                self._row(a)

    def collinear(self, a: int, b: int, c: int) -> bool:
        r = self.D.rows
        ab, ac, bc = r[a][b], r[a][c], r[b][c]
        return ab + bc == ac or ab + ac == bc or ac + bc == ab

    def _row(self, a: int) -> list[int]:
        row = self._rows.get(a)
        if row is None:
            d = self.D.array
            da = d[a]
            between = da[None, :] + d == da[:, None]  # [b, w]: w on an a,b geodesic
            beyond = da[:, None] + d == da[None, :]  # [b, w]: b on an a,w geodesic
            before = da[None, :] + da[:, None] == d  # [b, w]: a on a b,w geodesic
            hit = between | beyond | before
            packed = np.packbits(hit, axis=1, bitorder="little")
            row = [int.from_bytes(packed[b].tobytes(), "little") for b in range(self.n)]
            self._rows[a] = row
        return row

    def mask(self, a: int, b: int) -> int:
        return self._row(a)[b]


def _oracle(g: Graph) -> CollinearityOracle:
    if not g.connected:
        raise GraphError("solver input must be connected")
    return CollinearityOracle(g.distances())


def is_general_position(g: Graph, subset) -> bool:
    """Direct triple test: no three members on a common geodesic."""
    s = sorted(set(subset))
    if len(s) < 3:
        return True
    r = g.distances().rows
    for a, b, c in itertools.combinations(s, 3):
        ab, ac, bc = r[a][b], r[a][c], r[b][c]
        if ab + bc == ac or ab + ac == bc or ac + bc == ab:
            return False
    return True


def is_general_position_characterized(g: Graph, subset) -> bool:
    """Structural test: clique components, distance-constant and in-transitive."""
    s = sorted(set(subset))
    if not s:
        return True
    r = g.distances().rows
    sub, old = g.induced(s)
    parts = [[old[i] for i in comp] for comp in sub.components()]
    for comp in parts:
        if not is_clique(g, to_mask(comp)):
            return False
    t = len(parts)
    between = [[0] * t for _ in range(t)]
    for i, j in itertools.combinations(range(t), 2):
        values = {r[x][y] for x in parts[i] for y in parts[j]}
        if len(values) != 1:
            return False
        between[i][j] = between[j][i] = values.pop()
    for i, j, k in itertools.permutations(range(t), 3):
        if between[i][k] == between[i][j] + between[j][k]:
            return False
    return True


def is_colinear_set(g: Graph, u: int, subset) -> bool:
    """True iff ``subset`` is a general position set avoiding ``u`` with no member between another and ``u``."""
    s = sorted(set(subset))
    if u in s or not is_general_position(g, s):
        return False
    r = g.distances().rows
    for x, y in itertools.permutations(s, 2):
        if r[x][y] + r[y][u] == r[x][u]:
            return False
    return True


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of vertices sharing an open or a closed neighbourhood."""
    groups: dict[tuple[str, int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(("open", g.nbr[v]), []).append(v)
    out = [c for c in groups.values() if len(c) > 1]
    taken = {v for c in out for v in c}
    closed: dict[int, list[int]] = {}
    for v in range(g.n):
        if v not in taken:
            closed.setdefault(g.nbr[v] | (1 << v), []).append(v)
    out += [c for c in closed.values() if len(c) > 1]
    return sorted(out)


class _LimitReached(Exception):
    pass


class _Search:
    """One branch-and-bound run; owns all mutable state."""

    def __init__(self, n, pair_mask, candidates, pair_conflicts, twins, cfg, start=0, best=None):
        self.n = n
        self.T = pair_mask
        self.cfg = cfg
        self.nodes = 0
        self.t0 = start or time.perf_counter()
        self.deadline = None if cfg.time_limit is None else self.t0 + cfg.time_limit
        self.best = 0
        self.best_set: list[int] = []
        if best:
            self.best_set = list(best)
            self.best = len(best)
        self.later_twins = [0] * n
        for cls in twins:
            for i, v in enumerate(cls):
                self.later_twins[v] = to_mask(cls[i + 1:])
        self.C0 = candidates
        self.pc0 = pair_conflicts
        self.stack: list[int] = []

    def run(self) -> bool:
        try:
            self._expand(self.C0, self.pc0)
        except _LimitReached:
            return False
        return True

    def _tick(self):
        self.nodes += 1
        lim = self.cfg.node_limit
        if lim is not None and self.nodes > lim:
            raise _LimitReached
        if self.deadline is not None and not self.nodes & 255 and time.perf_counter() > self.deadline:
            raise _LimitReached

    def _expand(self, C, pc):
        self._tick()
        size = len(self.stack)
        if not C:
            if size > self.best:
                self.best = size
                self.best_set = list(self.stack)
            return
        # greedy clique cover of the conflict graph on C; only vertices in
        # cliques numbered above the slack can improve on the incumbent
        slack = self.best - size
        branch = []
        rest = C
        k = 0
        while rest:
            k += 1
            q = rest
            cls = 0
            while q:
                low = q & -q
                v = low.bit_length() - 1
                cls |= low
                q &= pc[v] & ~low
                if k > slack:
                    branch.append((v, k))
            rest &= ~cls
        if size + k <= self.best:
            return
        T = self.T
        stack = self.stack
        for v, k in reversed(branch):
            if size + k <= self.best:
                return
            vbit = 1 << v
            if not C & vbit:
                continue
            newC = C & ~pc[v] & ~vbit
            row = T[v]
            newpc = list(pc)
            for x in bits(newC):
                newpc[x] = pc[x] | row[x]
            stack.append(v)
            self._expand(newC, newpc)
            stack.pop()
            C &= ~vbit & ~self.later_twins[v]


def _greedy(n, T, candidates, pc) -> list[int]:
    """Repeatedly take the candidate with fewest live pair conflicts."""
    chosen = []
    C = candidates
    pc = list(pc)
    while C:
        v = min(bits(C), key=lambda x: ((pc[x] & C).bit_count(), x))
        chosen.append(v)
        C &= ~pc[v] & ~(1 << v)
        for x in bits(C):
            pc[x] |= T[v][x]
    return chosen


def _solve(g: Graph, anchor: int | None, cfg: SolverConfig) -> SolveResult:
    t0 = time.perf_counter()
    oracle = _oracle(g)
    n = g.n
    D = oracle.D.rows
    pc = [0] * n
    allv = (1 << n) - 1
    candidates = allv
    if anchor is not None:
        if not 0 <= anchor < n:
            raise GraphError(f"anchor {anchor} out of range")
        candidates &= ~(1 << anchor)
        du = D[anchor]
        for x in range(n):
            if x == anchor:
                continue
            m = 0
            for y in range(n):
                if y != x and y != anchor and (D[x][y] + du[y] == du[x] or D[y][x] + du[x] == du[y]):
                    m |= 1 << y
            pc[x] = m
    twins = []
    for cls in twin_classes(g):
        cls = [v for v in cls if v != anchor]
        if len(cls) > 1:
            twins.append(cls)

    # relabel so that bit order is the static branching order
    if cfg.branch_order == "conflicts":
        score = [0] * n
        for a in range(n):
            row = oracle._row(a)
            score[a] = sum((row[b] & candidates).bit_count() for b in bits(candidates)) + pc[a].bit_count() * n
        order = sorted(range(n), key=lambda v: (-score[v], v))
    else:
        order = list(range(n))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i

    def remap(mask):
        out = 0
        for v in bits(mask):
            out |= 1 << pos[v]
        return out

    T = [[0] * n for _ in range(n)]
    for a in range(n):
        row = oracle._row(a)
        Ta = T[pos[a]]
        for b in range(n):
            Ta[pos[b]] = remap(row[b])
    pcr = [0] * n
    for v in range(n):
        pcr[pos[v]] = remap(pc[v])
    cand = remap(candidates)
    twins_r = [sorted(pos[v] for v in cls) for cls in twins]

    seed = _greedy(n, T, cand, pcr) if cfg.seed_greedy else None
    search = _Search(n, T, cand, pcr, twins_r, cfg, start=t0, best=seed)
    complete = search.run()
    witness = sorted(order[v] for v in search.best_set)
    return SolveResult(
        value=len(witness),
        witness=witness,
        optimal=complete,
        nodes=search.nodes,
        elapsed=time.perf_counter() - t0,
        anchor=anchor,
    )


def max_gp(g: Graph, cfg: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Largest general position set of a connected graph."""
    res = _solve(g, None, cfg)
    assert is_general_position(g, res.witness)
    return res


def xi(g: Graph, u: int, cfg: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Largest ``u``-colinear set."""
    res = _solve(g, u, cfg)
    assert is_colinear_set(g, u, res.witness)
    return res


def xi_all(g: Graph, cfg: SolverConfig = DEFAULT_CONFIG) -> list[SolveResult]:
    return [xi(g, u, cfg) for u in range(g.n)]


def _extreme(results, pick):
    best = pick(r.value for r in results)
    where = min(r.anchor for r in results if r.value == best)
    return best, where


def xi_minus(g: Graph, cfg: SolverConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    """Smallest colinear number over all anchors, with the first anchor attaining it."""
    return _extreme(xi_all(g, cfg), min)


def xi_max(g: Graph, cfg: SolverConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    return _extreme(xi_all(g, cfg), max)


def split_at_bridge(g: Graph, e: tuple[int, int]):
    """Components of ``G - e`` as strict graphs, each with its old-index list.

    Returns ``((G1, old1), (G2, old2))`` with ``e[0]`` in ``G1``.
    """
    u, v = sorted(e)
    if (u, v) not in set(bridges(g)):
        raise GraphError(f"{e} is not a bridge")
    rest = Graph(g.n, [x for x in g.edges if x != (u, v)], g.labels)
    parts = {}
    for comp in rest.components():
        sub, old = g.induced(comp)
        sub = Graph(sub.n, [x for x in sub.edges if (old[x[0]], old[x[1]]) != (u, v)], sub.labels)
        parts[comp[0]] = (sub, old)
    first = next(p for p in parts.values() if e[0] in p[1])
    second = next(p for p in parts.values() if e[1] in p[1])
    return first, second


def bridge_lower_bound(g: Graph, e: tuple[int, int], cfg: SolverConfig = DEFAULT_CONFIG) -> int:
    """Sum of colinear numbers of the bridge endpoints in their sides of ``G - e``."""
    a, b = e
    if g.degree(a) < 2 or g.degree(b) < 2:
        raise GraphError(f"bridge {e} has an endpoint of degree 1")
    (g1, old1), (g2, old2) = split_at_bridge(g, e)
    r1 = xi(g1, old1.index(a), cfg)
    r2 = xi(g2, old2.index(b), cfg)
    if not (r1.optimal and r2.optimal):
        raise GraphError("colinear search hit its limit")
    return r1.value + r2.value


def gp_block_graph(g: Graph) -> int:
    if not is_block_graph(g):
        raise GraphError("not a block graph")
    return len(simplicial_vertices(g))


__all__ = [
    "CollinearityOracle",
    "SolveResult",
    "SolverConfig",
    "blocks",
    "bridge_lower_bound",
    "gp_block_graph",
    "is_colinear_set",
    "is_general_position",
    "is_general_position_characterized",
    "max_gp",
    "split_at_bridge",
    "twin_classes",
    "xi",
    "xi_all",
    "xi_max",
    "xi_minus",
]
