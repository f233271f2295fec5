"""Command-line front end.

Subcommands: gen, reduce, approx, exact, eval, knapsack, plot.  Exit
codes are a stable contract: 0 success, 1 infeasible or negative
answer, 2 usage error, 3 guard exceeded (or a certified-precision
refusal).  With --json every command prints one machine-parsable JSON
object; otherwise a short human line.  The DTK_MAX_N environment
variable overrides the exact-solver guard.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import serialize
from .approx import approximate
from .errors import DisconnectedError, GuardExceededError, PrecisionError, UsageError
from .exact import solve_exact
from .geom import EXACT, FLOAT, Instance, Point
from .intervals import Interval
from .knapsack import solve_bruteforce, solve_dp
from .network import Tree, cost, delay, make_network
from .reduction import build_reduction
from .svg import render_svg

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _parse_number(text: str, mode: str):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number: {text!r}") from exc
    return float(value) if mode == FLOAT else value


def _format_value(value):
    if value is None:
        return None
    if isinstance(value, float):
        return value
    if isinstance(value, Interval):
        if value.is_point:
            return serialize.fraction_str(value.lo)
        return {"lo": serialize.fraction_str(value.lo),
                "hi": serialize.fraction_str(value.hi)}
    if isinstance(value, Fraction):
        return serialize.fraction_str(value)
    return value


def _emit(args, payload, human):
    if getattr(args, "json", False):
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(human)


def _read(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_instance(path) -> Instance:
    return serialize.load_instance(_read(path))


# ------------------------------------------------------------------ commands


def _gen_points(kind: str, n: int, seed: int, mode: str):
    if n < 1:
        raise UsageError("n must be >= 1")
    if kind == "grid":
        side = math.isqrt(n - 1) + 1
        coords = [(idx % side, idx // side) for idx in range(n)]
        if mode == FLOAT:
            return [(float(x), float(y)) for x, y in coords]
        return coords
    rng = random.Random(seed)
    coords = []
    seen = set()
    while len(coords) < n:
        if mode == FLOAT:
            pt = (rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0))
        else:
            pt = (rng.randrange(0, 1_000_000), rng.randrange(0, 1_000_000))
        if pt not in seen:
            seen.add(pt)
            coords.append(pt)
    return coords


def cmd_gen(args) -> int:
    mode = args.mode
    delta = _parse_number(args.delta, mode)
    cost_bound = _parse_number(args.cost_bound, mode) if args.cost_bound else None
    coords = _gen_points(args.kind, args.n, args.seed, mode)
    if mode == FLOAT:
        points = tuple(Point(x, y) for x, y in coords)
    else:
        points = tuple(Point(Fraction(x), Fraction(y)) for x, y in coords)
    instance = Instance(points, 0, delta, cost_bound)
    data = serialize.save_instance(instance)
    Path(args.out).write_bytes(data)
    _emit(args, {"path": args.out, "n": instance.n, "mode": mode},
          f"wrote {instance.n}-point {mode} instance to {args.out}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    kinstance = serialize.load_knapsack(_read(args.knapsack))
    artifact = build_reduction(kinstance)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    instance_path = outdir / "instance.json"
    sidecar_path = outdir / "reduction.json"
    instance_path.write_bytes(serialize.save_instance(artifact.instance))
    sidecar = {
        "delta": serialize.fraction_str(artifact.delta_bound),
        "cost_bound": serialize.fraction_str(artifact.instance.cost_bound),
        "k": artifact.k,
        "epsilon": serialize.fraction_str(artifact.epsilon),
        "roles": {
            "r": artifact.roles.r,
            "a": list(artifact.roles.a),
            "b": list(artifact.roles.b),
            "c": list(artifact.roles.c),
            "d": list(artifact.roles.d),
        },
    }
    sidecar_path.write_text(json.dumps(sidecar, separators=(",", ":")) + "\n",
                            encoding="utf-8")
    _emit(args,
          {"instance": str(instance_path), "sidecar": str(sidecar_path),
           "points": artifact.instance.n, "k": artifact.k},
          f"wrote {artifact.instance.n}-point reduction to {outdir}")
    return EXIT_OK


def cmd_approx(args) -> int:
    instance = _load_instance(args.instance)
    delta = _parse_number(args.delta, instance.mode) if args.delta else None
    result = approximate(instance, delta)
    if args.tree_out:
        Path(args.tree_out).write_bytes(serialize.save_tree_parent(result.tree.parent))
    payload = {
        "delay": _format_value(result.delay),
        "cost": _format_value(result.cost),
        "mst_cost": _format_value(result.mst_cost),
        "cost_ratio": _format_value(result.cost_ratio),
        "spanner_edges": result.spanner_report.edge_count,
        "star_fallback": result.star_fallback,
    }
    _emit(args, payload,
          f"delay {result.delay:.6g} cost {result.cost:.6g} "
          f"(mst {result.mst_cost:.6g}, ratio {result.cost_ratio:.6g}, "
          f"{result.spanner_report.edge_count} spanner edges)")
    return EXIT_OK


def cmd_exact(args) -> int:
    instance = _load_instance(args.instance)
    kwargs = {}
    if args.delta:
        kwargs["delta"] = _parse_number(args.delta, instance.mode)
    if args.cost_bound:
        kwargs["cost_bound"] = _parse_number(args.cost_bound, instance.mode)
    result = solve_exact(instance, max_n=args.max_n, threads=args.threads,
                         **kwargs)
    if args.tree_out and result.tree is not None:
        Path(args.tree_out).write_bytes(serialize.save_tree_parent(result.tree.parent))
    payload = {
        "status": result.status,
        "cost": _format_value(result.cost),
        "nodes_explored": result.nodes_explored,
        "proof_of_optimality": result.proof_of_optimality,
    }
    _emit(args, payload,
          f"{result.status} (cost {_format_value(result.cost)}, "
          f"{result.nodes_explored} nodes)")
    return EXIT_OK if result.feasible else EXIT_NEGATIVE


def cmd_eval(args) -> int:
    instance = _load_instance(args.instance)
    parent = serialize.load_tree_parent(_read(args.tree), instance.n, instance.root)
    tree = Tree(instance, parent)
    tree_cost = cost(tree)
    tree_delay = delay(tree)
    payload = {"cost": _format_value(tree_cost), "delay": _format_value(tree_delay)}
    _emit(args, payload,
          f"cost {_format_value(tree_cost)} delay {_format_value(tree_delay)}")
    return EXIT_OK


def cmd_knapsack(args) -> int:
    kinstance = serialize.load_knapsack(_read(args.knapsack))
    answer = solve_bruteforce(kinstance) if args.brute else solve_dp(kinstance)
    payload = {
        "answer": "positive" if answer.positive else "negative",
        "witness": list(answer.witness) if answer.witness is not None else None,
    }
    _emit(args, payload, payload["answer"])
    return EXIT_OK if answer.positive else EXIT_NEGATIVE


def cmd_plot(args) -> int:
    instance = _load_instance(args.instance)
    edges = frozenset()
    if args.network and args.tree:
        raise UsageError("give at most one of --network / --tree")
    if args.network:
        edges = serialize.load_network_edges(_read(args.network), instance.n)
    elif args.tree:
        parent = serialize.load_tree_parent(_read(args.tree), instance.n,
                                            instance.root)
        edges = Tree(instance, parent).edges()
    make_network(instance, edges)  # validates the pair against the instance
    svg = render_svg(instance, edges)
    Path(args.out).write_text(svg, encoding="utf-8")
    _emit(args, {"path": args.out, "points": instance.n, "edges": len(edges)},
          f"wrote {args.out} ({instance.n} points, {len(edges)} edges)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtk",
        description="Dilation-bounded broadcast trees: approximation, exact "
                    "search, and the knapsack gadget construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("kind", choices=("random", "grid"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", default="2")
    p.add_argument("--cost-bound", default=None)
    p.add_argument("--mode", choices=(FLOAT, EXACT), default=FLOAT)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build the gadget instance for a knapsack file")
    p.add_argument("knapsack")
    p.add_argument("-o", "--out", required=True, help="output directory")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("approx", help="spanner + shortest-path tree pipeline")
    p.add_argument("instance")
    p.add_argument("--delta", default=None)
    p.add_argument("--tree-out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("exact", help="exact solve (optimization or decision)")
    p.add_argument("instance")
    p.add_argument("--delta", default=None)
    p.add_argument("--cost-bound", default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tree-out", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("eval", help="cost and delay of a tree file")
    p.add_argument("instance")
    p.add_argument("tree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("knapsack", help="decide a knapsack file directly")
    p.add_argument("knapsack")
    p.add_argument("--brute", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_knapsack)

    p = sub.add_parser("plot", help="render an SVG figure")
    p.add_argument("instance")
    p.add_argument("--network", default=None)
    p.add_argument("--tree", default=None)
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GuardExceededError, PrecisionError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
