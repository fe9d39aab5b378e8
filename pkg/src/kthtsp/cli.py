"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 bad input (parse error, incomplete or
disconnected graph), 3 size limit exceeded, 4 pool/oracle mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from time import perf_counter

from .bench import ENGINES, bench, to_csv
from .compare import compare_engines
from .engines import OBJECTIVES, EngineStats, kbest_greedy, kbest_pool
from .errors import (
    DisconnectedGraph,
    IncompleteInstance,
    InstanceTooLarge,
    InvalidParameter,
    KBestError,
    ParseError,
)
from .hamilton import HamiltonSystem
from .heldkarp import DEFAULT_LIMIT
from .instance import WeightedInstance, embed_complete, format_instance, parse_instance, random_instance
from .oracles import TOUR_LIMIT, TREE_LIMIT, brute_force_kbest_tours, brute_force_kbest_trees
from .serialize import dumps, ranked_to_dict
from .trees import SpanningTreeSystem

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(args) -> WeightedInstance:
    with open(args.input, encoding="utf-8") as fh:
        inst = parse_instance(fh)
    if args.trees or inst.is_complete:
        return inst
    if not args.allow_incomplete:
        raise IncompleteInstance(
            f"instance has {len(inst.weights)} of {inst.n * (inst.n - 1) // 2} edges; "
            "pass --allow-incomplete to embed missing edges"
        )
    return embed_complete(inst, args.objective)[0]


def _rank(args, engine: str):
    inst = _load(args)
    if engine == "oracle":
        stats = EngineStats()
        t0 = perf_counter()
        if args.trees:
            ranked = brute_force_kbest_trees(inst, args.k, args.objective, args.oracle_max_n)
        else:
            ranked = brute_force_kbest_tours(inst, args.k, args.objective, args.oracle_max_n)
        stats.elapsed = perf_counter() - t0
        return ranked, stats
    system = SpanningTreeSystem(inst) if args.trees else HamiltonSystem(inst, args.max_n)
    run = kbest_pool if engine == "pool" else kbest_greedy
    return run(system, args.k, args.objective)


def cmd_solve(args) -> int:
    ranked, stats = _rank(args, args.engine)
    _write(dumps(ranked_to_dict(ranked, stats, not args.no_timing)), args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    ranked, stats = _rank(args, "oracle")
    _write(dumps(ranked_to_dict(ranked, stats, not args.no_timing)), args.json)
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.input:
        instances = [_load(args)]
    elif args.n is not None:
        instances = [
            random_instance(args.n, args.weight_min, args.weight_max, seed, args.density)
            for seed in range(args.seed, args.seed + args.count)
        ]
        if not args.trees:
            instances = [embed_complete(i, args.objective)[0] for i in instances]
    else:
        raise InvalidParameter("compare needs --input or --n")
    reports = [
        compare_engines(inst, args.k, args.objective, args.trees, Path(args.counterexample_dir), args.max_n)
        for inst in instances
    ]
    doc = {
        "reports": [r.to_dict(not args.no_timing) for r in reports],
        "summary": {
            "instances": len(reports),
            "pool_mismatches": sum(not r.pool_matches_oracle for r in reports),
            "greedy_divergences": sum(r.greedy_divergence is not None for r in reports),
        },
    }
    _write(dumps(doc), args.json)
    return EXIT_OK if all(r.pool_matches_oracle for r in reports) else EXIT_MISMATCH


def cmd_gen(args) -> int:
    inst = random_instance(args.n, args.weight_min, args.weight_max, args.seed, args.density)
    _write(format_instance(inst), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    records = bench(args.n, args.k_max, args.step, args.engine, args.seed, not args.no_timing, args.max_n)
    _write(to_csv(records), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kthtsp", description="K-best tours and spanning trees by exchange enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    def ranking_flags(p, with_engine: bool):
        p.add_argument("--input", required=True, help="instance file")
        p.add_argument("--k", type=_positive, default=1)
        if with_engine:
            p.add_argument("--engine", choices=("pool", "greedy", "oracle"), default="pool")
        p.add_argument("--objective", choices=OBJECTIVES, default="min")
        p.add_argument("--allow-incomplete", action="store_true", help="embed missing edges with a big-M weight")
        p.add_argument("--trees", action="store_true", help="rank spanning trees instead of tours")
        p.add_argument("--json", help="output path (default stdout)")
        p.add_argument("--max-n", type=_positive, default=DEFAULT_LIMIT, help="exact tour solver limit")
        p.add_argument("--oracle-max-n", type=_positive, default=None)
        p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for reproducible output")

    p = sub.add_parser("solve", help="rank the K best solutions")
    ranking_flags(p, True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force ranking")
    ranking_flags(p, False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="pool and greedy engines against the oracle")
    p.add_argument("--input")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--weight-min", type=int, default=1)
    p.add_argument("--weight-max", type=int, default=100)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--k", type=_positive, default=10)
    p.add_argument("--objective", choices=OBJECTIVES, default="min")
    p.add_argument("--allow-incomplete", action="store_true")
    p.add_argument("--trees", action="store_true")
    p.add_argument("--json")
    p.add_argument("--counterexample-dir", default="counterexamples")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_LIMIT)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-min", type=int, default=1)
    p.add_argument("--weight-max", type=int, default=100)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="CSV of runtime against K")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=_positive, required=True)
    p.add_argument("--step", type=_positive, default=1)
    p.add_argument("--engine", choices=ENGINES, default="pool")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="output path (default stdout)")
    p.add_argument("--max-n", type=_positive, default=DEFAULT_LIMIT)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "oracle_max_n", 0) is None:
        args.oracle_max_n = TREE_LIMIT if args.trees else TOUR_LIMIT
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, IncompleteInstance, DisconnectedGraph, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KBestError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
