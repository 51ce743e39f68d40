"""Command line interface: ``gpsierpinski <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 finished without proving optimality or exhaustiveness.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import generators
from .graph import Graph, GraphError
from .io import read_graph, to_dot, to_json, write_graph6
from .product import build_product, enumerate_maps
from .sierpinski import count_degree_nminus1, default_jobs, gps, predict
from .solver import SolverConfig, max_gp, xi

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
SEEDED = {"tree": 2, "random": 3}  # generator name -> position of its seed argument


@dataclass
class RunConfig:
    format: str | None = None
    time_limit: float | None = None
    node_limit: int | None = None
    jobs: int = 1
    seed: int = 0
    output: str | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise GraphError("--jobs must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise GraphError("--time-limit must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise GraphError("--node-limit must be positive")


CONFIG_KEYS = ("time_limit", "node_limit", "branch_order", "seed_greedy")


def _solver_config(args) -> SolverConfig:
    """Solver settings from ``--config`` JSON, overridden by explicit flags."""
    opts = {}
    if args.config:
        try:
            with open(args.config) as fh:
                opts = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise GraphError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(opts) - set(CONFIG_KEYS)
        if unknown:
            raise GraphError(f"unknown config keys: {', '.join(sorted(unknown))}")
    if args.time_limit is not None:
        opts["time_limit"] = args.time_limit
    if args.node_limit is not None:
        opts["node_limit"] = args.node_limit
    if args.branch_order is not None:
        opts["branch_order"] = args.branch_order
    if args.no_greedy:
        opts["seed_greedy"] = False
    return SolverConfig(**opts)


def _generate(spec: str, seed: int) -> Graph:
    name, *rest = spec.split(":")
    if name in SEEDED and len(rest) < SEEDED[name]:
        spec = ":".join([name, *rest, str(seed)])
    return generators.from_spec(spec)


def _load(path, spec, run: RunConfig, what="graph") -> Graph:
    if path and spec:
        raise GraphError(f"give either a {what} file or a generator, not both")
    if spec:
        return _generate(spec, run.seed)
    if path:
        return read_graph(path, run.format)
    raise GraphError(f"no {what} given")


def _emit(payload, run: RunConfig) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if not text.endswith("\n"):
        text += "\n"
    if run.output:
        with open(run.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_graph(g: Graph, fmt: str, run: RunConfig, highlight=()) -> None:
    if fmt == "graph6":
        _emit(write_graph6(g), run)
    elif fmt == "dot":
        _emit(to_dot(g, highlight), run)
    else:
        _emit(to_json(g), run)


def cmd_gp(args, run):
    g = _load(args.graph, args.gen, run)
    res = max_gp(g, _solver_config(args))
    _emit(res.to_json(), run)
    return EXIT_OK if res.optimal else EXIT_LIMIT


def cmd_xi(args, run):
    g = _load(args.graph, args.gen, run)
    cfg = _solver_config(args)
    if args.all:
        results = [xi(g, u, cfg) for u in range(g.n)]
    elif args.u is not None:
        results = [xi(g, args.u, cfg)]
    else:
        raise GraphError("xi needs --u <vertex> or --all")
    values = [r.value for r in results]
    payload = {
        "results": [r.to_json() for r in results],
        "xi_minus": min(values),
        "xi": max(values),
        "optimal": all(r.optimal for r in results),
    }
    _emit(payload, run)
    return EXIT_OK if payload["optimal"] else EXIT_LIMIT


def _factors(args, run):
    g = _load(args.g, args.gen_g, run, "first factor")
    h = _load(args.h, args.gen_h, run, "second factor")
    return g, h


def _parse_map(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise GraphError(f"bad map {text!r}; expected comma-separated integers") from None


def cmd_product(args, run):
    g, h = _factors(args, run)
    p = build_product(g, h, _parse_map(args.map))
    if args.emit == "json":
        payload = to_json(p.graph) | {
            "g_dim": p.g_dim,
            "h_dim": p.h_dim,
            "map": list(p.vmap),
            "connecting": [list(e) for e in p.connecting],
        }
        _emit(payload, run)
    else:
        _emit_graph(p.graph, args.emit, run)
    return EXIT_OK


def cmd_maps(args, run):
    g, h = _factors(args, run)
    maps = [list(f) for f in enumerate_maps(g, h, args.mode)]
    _emit({"mode": args.mode, "count": len(maps), "maps": maps}, run)
    return EXIT_OK


def cmd_gps(args, run):
    g, h = _factors(args, run)
    res = gps(g, h, args.kind, args.mode, _solver_config(args), run.jobs)
    _emit(res.to_json(per_map=args.per_map), run)
    return EXIT_OK if res.exhaustive else EXIT_LIMIT


def cmd_predict(args, run):
    g, h = _factors(args, run)
    preds = predict(g, h, _solver_config(args))
    payload = {"predictions": [p.to_json() for p in preds]}
    if args.map:
        p = build_product(g, h, _parse_map(args.map))
        try:
            payload["degree_nminus1"] = count_degree_nminus1(p)
        except GraphError:
            pass
    _emit(payload, run)
    return EXIT_OK


def cmd_verify(args, run):
    from .verify import render_text, verify_theorems

    progress = None
    if args.progress:
        progress = lambda c: print(f"[{c['status']}] {c['suite']}/{c['name']}", file=sys.stderr, flush=True)
    report = verify_theorems(args.suite, args.budget, _solver_config(args), progress)
    _emit(render_text(report) if args.text else report, run)
    if not report["ok"]:
        return EXIT_FAIL
    return EXIT_OK if report["complete"] else EXIT_LIMIT


def cmd_gen(args, run):
    g = _generate(args.spec, run.seed)
    _emit_graph(g, args.emit, run)
    return EXIT_OK


def _add_solver_flags(p):
    p.add_argument("--time-limit", type=float, help="seconds per solver run")
    p.add_argument("--node-limit", type=int, help="search nodes per solver run")
    p.add_argument("--branch-order", choices=["conflicts", "index"])
    p.add_argument("--config", metavar="FILE", help="JSON file with solver settings")
    p.add_argument("--no-greedy", action="store_true", help="skip the greedy incumbent")


def _add_graph_input(p):
    p.add_argument("graph", nargs="?", help="graph file (graph6 or JSON)")
    p.add_argument("--gen", metavar="NAME:ARGS", help="generator shorthand, e.g. petersen or complete:5")


def _add_factor_inputs(p):
    p.add_argument("--g", metavar="FILE", help="first factor file")
    p.add_argument("--h", metavar="FILE", help="second factor file")
    p.add_argument("--gen-g", metavar="NAME:ARGS", help="first factor generator")
    p.add_argument("--gen-h", metavar="NAME:ARGS", help="second factor generator")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["graph6", "json"], help="input format (default: by suffix)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default $GPS_JOBS or 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for random generators")
    common.add_argument("-o", "--output", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="gpsierpinski", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gp", parents=[common], help="general position number")
    _add_graph_input(p)
    _add_solver_flags(p)
    p.set_defaults(parser=p, func=cmd_gp)

    p = sub.add_parser("xi", parents=[common], help="colinear numbers")
    _add_graph_input(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--u", type=int, help="anchor vertex")
    group.add_argument("--all", action="store_true", help="every anchor")
    _add_solver_flags(p)
    p.set_defaults(parser=p, func=cmd_xi)

    p = sub.add_parser("product", parents=[common], help="build a Sierpinski product")
    _add_factor_inputs(p)
    p.add_argument("--map", required=True, help="comma-separated f(0),f(1),...")
    p.add_argument("--emit", choices=["json", "graph6", "dot"], default="json")
    p.set_defaults(parser=p, func=cmd_product)

    p = sub.add_parser("maps", parents=[common], help="list the enumerated maps")
    _add_factor_inputs(p)
    p.add_argument("--mode", default="full", help="full | sym | cap:<k> | auto")
    p.set_defaults(parser=p, func=cmd_maps)

    p = sub.add_parser("gps", parents=[common], help="Sierpinski general position number")
    _add_factor_inputs(p)
    p.add_argument("--kind", choices=["max", "lower"], default="max")
    p.add_argument("--mode", default="auto", help="full | sym | cap:<k> | auto")
    p.add_argument("--per-map", action="store_true", help="include every map's value")
    _add_solver_flags(p)
    p.set_defaults(parser=p, func=cmd_gps)

    p = sub.add_parser("predict", parents=[common], help="closed forms and bounds")
    _add_factor_inputs(p)
    p.add_argument("--map", help="also count degree n(H)-1 vertices of this product")
    _add_solver_flags(p)
    p.set_defaults(parser=p, func=cmd_predict)

    p = sub.add_parser("verify", parents=[common], help="run the verification battery")
    p.add_argument("--suite", choices=["k2", "complete", "colinear", "all"], default="all")
    p.add_argument("--budget", type=int, default=64, help="largest graph order to attempt")
    p.add_argument("--text", action="store_true", help="human-readable report")
    p.add_argument("--progress", action="store_true", help="per-claim progress on stderr")
    _add_solver_flags(p)
    p.set_defaults(parser=p, func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph")
    p.add_argument("spec", help="generator shorthand, e.g. cycle_chain:3:5")
    p.add_argument("--emit", choices=["json", "graph6", "dot"], default="json")
    p.set_defaults(parser=p, func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run = RunConfig(
            format=args.format,
            time_limit=getattr(args, "time_limit", None),
            node_limit=getattr(args, "node_limit", None),
            jobs=args.jobs if args.jobs is not None else default_jobs(),
            seed=args.seed,
            output=args.output,
        )
        return args.func(args, run)
    except (GraphError, ValueError) as exc:
        args.parser.print_usage(sys.stderr)
        print(f"gpsierpinski {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
