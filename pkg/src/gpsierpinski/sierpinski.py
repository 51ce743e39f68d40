"""Sierpinski general position numbers: optimisation over maps and closed forms."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .graph import Graph, GraphError
from .product import ProductGraph, build_product, covers_all, enumerate_maps, is_complete, resolve_mode
from .solver import DEFAULT_CONFIG, SolverConfig, max_gp, xi_all


@dataclass
class GpsResult:
    kind: str
    value: int
    witness_map: tuple[int, ...]
    witness_set: list[int]
    maps_evaluated: int
    exhaustive: bool
    mode: str
    per_map: list[tuple[tuple[int, ...], int, bool]] = field(default_factory=list)

    def to_json(self, per_map: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "value": self.value,
            "witness_map": list(self.witness_map),
            "witness_set": self.witness_set,
            "maps_evaluated": self.maps_evaluated,
            "exhaustive": self.exhaustive,
            "mode": self.mode,
        }
        if per_map:
            out["per_map"] = [{"map": list(f), "value": v, "optimal": o} for f, v, o in self.per_map]
        return out


def _map_job(args):
    g, h, f, cfg = args
    p = build_product(g, h, f)
    r = max_gp(p.graph, cfg)
    return f, r.value, r.witness, r.optimal


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("GPS_JOBS", "1")))
    except ValueError:
        return 1


def evaluate_maps(g: Graph, h: Graph, mode: str = "auto", cfg: SolverConfig = DEFAULT_CONFIG, jobs: int | None = None):
    """gp of every product in the enumeration, as (map, value, witness, optimal) in map order."""
    if g.n < 1 or h.n < 1:
        raise GraphError("factors must be nonempty")
    jobs = jobs or default_jobs()
    tasks = [(g, h, f, cfg) for f in enumerate_maps(g, h, mode)]
    if jobs == 1 or len(tasks) < 2:
        return [_map_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_map_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def _fold(kind, rows, g, h, mode) -> GpsResult:
    if kind == "max":
        key = lambda r: (-r[1], r[0])
    elif kind == "lower":
        key = lambda r: (r[1], r[0])
    else:
        raise ValueError(f"unknown kind {kind!r}")
    best = min(rows, key=key)
    return GpsResult(
        kind=kind,
        value=best[1],
        witness_map=tuple(best[0]),
        witness_set=list(best[2]),
        maps_evaluated=len(rows),
        exhaustive=covers_all(g, h, mode) and all(r[3] for r in rows),
        mode=resolve_mode(g, h, mode),
        per_map=[(tuple(r[0]), r[1], r[3]) for r in rows],
    )


def gps(g: Graph, h: Graph, kind: str = "max", mode: str = "auto", cfg: SolverConfig = DEFAULT_CONFIG, jobs=None) -> GpsResult:
    return _fold(kind, evaluate_maps(g, h, mode, cfg, jobs), g, h, mode)


def gps_max(g: Graph, h: Graph, mode: str = "auto", cfg: SolverConfig = DEFAULT_CONFIG, jobs=None) -> GpsResult:
    return gps(g, h, "max", mode, cfg, jobs)


def gps_lower(g: Graph, h: Graph, mode: str = "auto", cfg: SolverConfig = DEFAULT_CONFIG, jobs=None) -> GpsResult:
    return gps(g, h, "lower", mode, cfg, jobs)


def gps_both(g: Graph, h: Graph, mode: str = "auto", cfg: SolverConfig = DEFAULT_CONFIG, jobs=None):
    """(max, lower) from a single pass over the maps."""
    rows = evaluate_maps(g, h, mode, cfg, jobs)
    return _fold("max", rows, g, h, mode), _fold("lower", rows, g, h, mode)


def count_degree_nminus1(p: ProductGraph) -> int:
    """Product vertices of degree n(H) - 1, i.e. those on no connecting edge."""
    if not (is_complete(p.g) and is_complete(p.h)):
        raise GraphError("degree count is defined for complete factors only")
    target = p.h.n - 1
    return sum(1 for v in range(p.graph.n) if p.graph.degree(v) == target)


def k6k9_witness() -> tuple[tuple[int, ...], list[int]]:
    """Injective map on K6 (x) K9 and a 25-vertex general position set of it.

    Copies 1..5 each contribute their own-index vertex and x6..x9; copy 6
    contributes nothing (0-based indices below).
    """
    f = (0, 1, 2, 3, 4, 5)
    members = [(i, i) for i in range(5)] + [(i, j) for i in range(5) for j in range(5, 9)]
    return f, sorted(i * 9 + j for i, j in members)


@dataclass
class Prediction:
    name: str
    kind: str  # "max" or "lower"
    applicable: bool
    guard: str
    value: int | None = None
    low: int | None = None
    high: int | None = None

    def to_json(self) -> dict:
        return asdict(self)

    def admits(self, x: int) -> bool:
        if not self.applicable:
            return True
        if self.value is not None and x != self.value:
            return False
        if self.low is not None and x < self.low:
            return False
        if self.high is not None and x > self.high:
            return False
        return True


def leaves(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def is_tree(g: Graph) -> bool:
    return g.connected and g.m == g.n - 1


def predict(g: Graph, h: Graph, cfg: SolverConfig = DEFAULT_CONFIG) -> list[Prediction]:
    """Every closed form and bound whose hypotheses can be evaluated on (G, H)."""
    out = []
    big = g.n >= 2 and h.n >= 2
    gp_h = max_gp(h, cfg).value
    xis = [r.value for r in xi_all(h, cfg)]
    xi_lo, xi_hi = min(xis), max(xis)
    ng = g.n

    guard = "n(G) >= 2 and n(H) >= 2"
    for kind in ("max", "lower"):
        out.append(Prediction("sandwich", kind, big, guard, low=gp_h, high=ng * gp_h))

    if gp_h == xi_hi:
        out.append(Prediction("equality_criterion", "max", big, f"gp(H) = xi(H) = {gp_h}", value=ng * gp_h))
    else:
        out.append(Prediction("equality_criterion", "max", big, f"gp(H) = {gp_h} != xi(H) = {xi_hi}", high=ng * gp_h - 1))

    k2 = g.n == 2 and g.m == 1
    out.append(Prediction("k2_first_factor", "max", k2 and h.n >= 2, "G = K2, n(H) >= 2", value=2 * xi_hi))
    out.append(Prediction("k2_first_factor", "lower", k2 and h.n >= 2, "G = K2, n(H) >= 2", value=2 * xi_lo))

    tree = is_tree(h) and h.n >= 3 and ng >= 2
    out.append(Prediction("tree_second_factor", "max", tree, "H a tree with n(H) >= 3, n(G) >= 2", value=ng * leaves(h)))

    both = is_complete(g) and is_complete(h) and big
    m, n = g.n, h.n
    out.append(Prediction("complete_max", "max", both, "G = K_m, H = K_n, m, n >= 2", value=m * (n - 1)))
    ok = both and n >= 2 * m - 2
    out.append(Prediction(
        "complete_lower", "lower", ok,
        f"G = K_m, H = K_n, n >= 2m - 2 ({n} {'>=' if n >= 2 * m - 2 else '<'} {2 * m - 2})",
        value=m * (n - m + 1),
    ))
    out.append(Prediction("degree_count_floor", "lower", both and m <= n, "complete factors, m <= n", low=(n - m + 1) * m))
    out.append(Prediction("large_first_factor_floor", "lower", both and m >= n, "complete factors, m >= n", low=max(2 * (n - 1), m)))
    out.append(Prediction("k6_k9", "lower", both and (m, n) == (6, 9), "G = K6, H = K9", value=25))
    return out
