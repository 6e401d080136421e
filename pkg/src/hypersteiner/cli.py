"""Command-line interface: generators, solver dispatch, validation, DOT
export and a small benchmark harness.

Exit codes: 0 success, 1 parse/validation error, 2 solver guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path

from . import __version__, approx, exact, fpt_q, generate, io
from .errors import SolverRefusal
from .instance import (
    Arborescence,
    Instance,
    RawInstance,
    lift,
    normalize,
    validation_report,
)
from .nodes import Node

ALGOS = ("dw", "oracle", "fpt-q", "approx-mvc", "approx-mhs", "level2")


def _solve_reduced(inst: Instance, algo: str, args) -> Arborescence:
    if algo == "dw":
        return exact.solve_dw(inst, cap=args.terminal_cap)
    if algo == "oracle":
        return exact.oracle_solve(inst)
    if algo == "level2":
        return exact.solve_level2(inst)
    if algo == "fpt-q":
        cfg = fpt_q.RunConfig(
            q_budget=args.q, seed=args.seed, repetitions=args.reps
        )
        return fpt_q.solve_derandomized(inst, cfg)
    if algo == "approx-mvc":
        return approx.solve_mvc(inst)
    if algo == "approx-mhs":
        return approx.solve_mhs(inst, args.hs_strategy)
    raise ValueError(f"unknown algorithm {algo!r}")


def _lifted_terminals(raw: RawInstance) -> frozenset[Node]:
    return frozenset(raw.terminals | {Node(0, raw.m)})


def cmd_solve(args) -> int:
    try:
        raw = io.parse_instance(Path(args.instance).read_text())
    except (OSError, io.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    inst = normalize(raw)
    start = time.perf_counter()
    try:
        reduced = _solve_reduced(inst, args.algo, args)
    except SolverRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - start
    tree = lift(reduced, inst.record)
    terminals = _lifted_terminals(raw)
    report = validation_report(raw.m, terminals, tree)
    if report:
        for line in report:
            print(f"invalid: {line}", file=sys.stderr)
        return 1
    print(f"algorithm: {args.algo}")
    print(f"cost: {tree.cost}")
    print(f"p: {tree.steiner_count(terminals)}")
    print(f"q: {tree.cost - raw.m}")
    print(f"time_s: {elapsed:.4f}")
    if args.algo == "fpt-q":
        print(f"seed: {args.seed}")
    print("valid: yes")
    if args.ratio:
        try:
            opt = lift(exact.oracle_solve(inst), inst.record)
            print(f"ratio: {tree.cost / opt.cost:.4f}")
        except SolverRefusal:
            print("ratio: unavailable (oracle budget exceeded)")
    if args.out:
        Path(args.out).write_text(io.render_tree(tree))
    if args.dot:
        Path(args.dot).write_text(io.to_dot(tree, terminals))
    return 0


def cmd_gen_random(args) -> int:
    try:
        raw = generate.random_instance(
            args.m, args.n_terminals, args.max_level, args.seed
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = io.render_instance(raw)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_gen_graph(args) -> int:
    try:
        lines = Path(args.edges).read_text().splitlines()
        edges = []
        n = args.n or 0
        for line in lines:
            line = line.split("#")[0].strip()
            if not line:
                continue
            u, v = (int(p) for p in line.split())
            edges.append((u, v))
            n = max(n, u, v)
        raw = generate.graph_gadget(edges, n)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = io.render_instance(raw)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args) -> int:
    try:
        raw = io.parse_instance(Path(args.instance).read_text())
        tree = io.parse_tree(Path(args.tree).read_text())
    except (OSError, io.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = validation_report(raw.m, _lifted_terminals(raw), tree)
    if report:
        for line in report:
            print(f"invalid: {line}")
        return 1
    print("valid")
    return 0


def cmd_bench(args) -> int:
    import random as _random

    rng = _random.Random(args.seed)
    rows = []
    per_algo: dict[str, dict[str, list[float]]] = {
        a: {"cost": [], "ratio": [], "opt": [], "time": []} for a in args.algos
    }
    for i in range(args.count):
        inst_seed = rng.getrandbits(32)
        raw = generate.random_instance(
            args.m, args.n_terminals, args.max_level, inst_seed
        )
        inst = normalize(raw)
        try:
            opt_cost = lift(exact.oracle_solve(inst), inst.record).cost
        except SolverRefusal:
            opt_cost = None
        for algo in args.algos:
            start = time.perf_counter()
            try:
                tree = lift(_solve_reduced(inst, algo, args), inst.record)
            except (SolverRefusal, ValueError):
                continue
            elapsed = time.perf_counter() - start
            stats = per_algo[algo]
            stats["cost"].append(tree.cost)
            stats["time"].append(elapsed)
            if opt_cost:
                stats["ratio"].append(tree.cost / opt_cost)
                stats["opt"].append(float(tree.cost == opt_cost))
            rows.append(
                {
                    "instance": i,
                    "seed": inst_seed,
                    "algorithm": algo,
                    "cost": tree.cost,
                    "optimal_cost": opt_cost,
                    "time_s": f"{elapsed:.6f}",
                }
            )
    header = f"{'algorithm':<12}{'runs':>6}{'mean cost':>11}{'mean ratio':>12}{'opt freq':>10}{'mean time s':>13}"
    print(header)
    print("-" * len(header))
    for algo in args.algos:
        stats = per_algo[algo]
        if not stats["cost"]:
            print(f"{algo:<12}{0:>6}")
            continue
        ratio = (
            f"{statistics.mean(stats['ratio']):.4f}" if stats["ratio"] else "-"
        )
        opt = f"{statistics.mean(stats['opt']):.3f}" if stats["opt"] else "-"
        print(
            f"{algo:<12}{len(stats['cost']):>6}"
            f"{statistics.mean(stats['cost']):>11.3f}{ratio:>12}{opt:>10}"
            f"{statistics.mean(stats['time']):>13.6f}"
        )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(
                fh,
                fieldnames=[
                    "instance",
                    "seed",
                    "algorithm",
                    "cost",
                    "optimal_cost",
                    "time_s",
                ],
            )
            writer.writeheader()
            writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersteiner",
        description="Steiner arborescence solvers for directed hypercubes",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--algo", choices=ALGOS, default="dw")
    p.add_argument("--q", type=int, default=2, help="penalty budget for fpt-q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=None, help="fpt-q trial count")
    p.add_argument(
        "--hs-strategy", choices=approx.HS_STRATEGIES, default="best"
    )
    p.add_argument("--terminal-cap", type=int, default=20)
    p.add_argument("--ratio", action="store_true", help="report ratio vs oracle")
    p.add_argument("--out", help="write the tree file here")
    p.add_argument("--dot", help="write DOT output here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen-random", help="generate a random instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-terminals", type=int, required=True)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser(
        "gen-graph", help="level-2 gadget instance from a graph edge list"
    )
    p.add_argument("edges", help="file with one 'u v' edge per line (1-based)")
    p.add_argument("--n", type=int, default=None, help="vertex count override")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen_graph)

    p = sub.add_parser("check", help="validate a tree file against an instance")
    p.add_argument("instance")
    p.add_argument("tree")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="benchmark solvers on random families")
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--n-terminals", type=int, default=5)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--algos", nargs="+", choices=ALGOS, default=["dw", "approx-mvc", "approx-mhs"]
    )
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--reps", type=int, default=None)
    p.add_argument("--hs-strategy", choices=approx.HS_STRATEGIES, default="best")
    p.add_argument("--terminal-cap", type=int, default=20)
    p.add_argument("--csv", help="also write per-cell results as CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
