"""Command-line entry point.

Output is JSON on stdout unless --human asks for a readable rendering.
Exit codes: 0 success, 1 usage, 2 bad input, 3 fast/oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .decompose import decompose_unicyclic
from .errors import InputError, UbxError
from .generators import GenSpec, fixtures, gen_gn, gen_gtq, gen_random_unicyclic
from .graph import Graph, export_dot, parse_graph, serialize_graph
from .oracle import basis_forced_oracle, enumerate_metric_bases_oracle, metric_dimension_oracle
from .resolve import basis_forced_fast, metric_dimension
from .strong import build_srg_definition, reduce_to_star_form, strong_report
from .transforms import (
    attach_pendant_forced_check,
    cycle_to_pendant,
    extend_with_path,
    pendant_to_cycle_check,
)
from .verify import ALL_CHECKS, VerifyConfig, run_verify


def _load(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":"), sort_keys=False))


def _cmd_analyze(args) -> int:
    dec = decompose_unicyclic(_load(args.file))
    threads = {
        str(v): [list(t) for t in ts] for v, ts in enumerate(dec.threads) if ts
    }
    info = {
        "n": dec.graph.n,
        "g": dec.g,
        "L": dec.L,
        "b": dec.b,
        "cycle": list(dec.cycle),
        "branchActive": sorted(dec.cycle[i] for i in dec.branch_active),
        "reduced": dec.is_reduced(),
        "threads": threads,
    }
    if args.human:
        print(f"n={info['n']}  girth={info['g']}  L={info['L']}  b={info['b']}")
        print("cycle:", " ".join(map(str, dec.cycle)))
        for v, ts in sorted(threads.items(), key=lambda kv: int(kv[0])):
            print(f"threads at {v}: " + ", ".join("-".join(map(str, t)) for t in ts))
    else:
        _emit(info)
    return 0


def _cmd_dim(args) -> int:
    graph = _load(args.file)
    if args.oracle:
        print(metric_dimension_oracle(graph))
    else:
        print(metric_dimension(decompose_unicyclic(graph)))
    return 0


def _cmd_bases(args) -> int:
    bases = enumerate_metric_bases_oracle(_load(args.file))
    _emit({"dim": len(bases[0]), "bases": [list(b) for b in bases]})
    return 0


def _cmd_forced(args) -> int:
    graph = _load(args.file)
    if args.oracle:
        rep = basis_forced_oracle(graph)
    else:
        rep = basis_forced_fast(decompose_unicyclic(graph))
    if args.dot:
        gray: set[int] = set()
        bases = rep.bases
        if bases is None and graph.n <= 16:
            bases = tuple(enumerate_metric_bases_oracle(graph))
        if bases:
            gray = set().union(*map(set, bases)) - set(rep.forced)
        print(export_dot(graph.n, graph.edges, rep.forced, gray, graph.labels))
    elif args.human:
        print(f"dim {rep.dim}, forced {{{', '.join(map(str, rep.forced))}}} [{rep.method}]")
    else:
        _emit(rep.to_json())
    return 0


def _cmd_strong(args) -> int:
    graph = _load(args.file)
    rep = strong_report(graph, method="oracle" if args.oracle else "characterization")
    if args.human:
        print(
            f"alpha {rep.alpha}, dim_s {rep.dim_s}, "
            f"forced {{{', '.join(map(str, rep.forced_strong))}}}"
        )
    else:
        _emit(rep.to_json())
    return 0


def _cmd_srg(args) -> int:
    graph = _load(args.file)
    srg = build_srg_definition(graph)
    if args.format == "dot":
        print(
            export_dot(srg.n, srg.edges, gray=srg.isolated(), labels=graph.labels, name="SRG")
        )
    else:
        _emit(srg.to_json())
    return 0


def _cmd_reduce(args) -> int:
    red, mapping = reduce_to_star_form(_load(args.file))
    _emit(
        {
            "graph": json.loads(serialize_graph(red)),
            "mapping": {str(k): v for k, v in sorted(mapping.items())},
        }
    )
    return 0


def _cmd_transform(args) -> int:
    graph = _load(args.file)
    if args.kind == "extend":
        result = extend_with_path(graph, args.m, args.cap)
    elif args.kind == "pendant":
        result = attach_pendant_forced_check(graph, args.vertex, args.cap)
    elif args.kind == "cycle2pendant":
        result = cycle_to_pendant(graph, args.vertex, args.cap)
    else:
        result = pendant_to_cycle_check(graph, args.vertex, args.cap)
    _emit(result.to_json())
    return 0


def _cmd_gen(args) -> int:
    if args.family == "random":
        graph = gen_random_unicyclic(
            GenSpec(g=args.g, seed=args.seed, max_n=args.max_n, branch_prob=args.branch_prob)
        )
    elif args.family == "gn":
        graph = gen_gn(args.n)
    elif args.family == "gtq":
        graph = gen_gtq(args.t, args.q)
    else:
        catalog = fixtures()
        if args.name not in catalog:
            raise InputError(f"unknown fixture {args.name!r}; have {sorted(catalog)}")
        graph = catalog[args.name].graph
    text = serialize_graph(graph)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise InputError(f"unknown checks: {sorted(unknown)}")
    config = VerifyConfig(
        count=args.count,
        max_n=args.max_n,
        seed=args.seed,
        jobs=args.jobs,
        checks=checks,
        subsets=args.subsets,
    )
    outcome = run_verify(config)
    summary = {
        "instances": config.count,
        "ran": outcome.ran,
        "failures": [{"check": f.check, "detail": f.detail} for f in outcome.failures],
    }
    repro_files = []
    for k, f in enumerate(outcome.failures):
        path = Path(args.reproducer_dir) / f"ubx-repro-{f.check}-{k}.json"
        path.write_text(f.graph_json + "\n")
        repro_files.append(str(path))
    if repro_files:
        summary["reproducers"] = repro_files
    if args.human:
        for check, count in sorted(outcome.ran.items()):
            print(f"{check:14s} {count:5d} instances")
        print("FAIL" if outcome.failures else "OK")
    else:
        _emit(summary)
    return 0 if outcome.ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ubx", description="Metric and strong metric dimension of unicyclic graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file", help="graph file (JSON or edge list), - for stdin")
        p.add_argument("--human", action="store_true", help="text output instead of JSON")
        return p

    with_file(sub.add_parser("analyze", help="decomposition summary")).set_defaults(
        fn=_cmd_analyze
    )

    p = with_file(sub.add_parser("dim", help="metric dimension"))
    p.add_argument("--oracle", action="store_true", help="brute force instead of the fast path")
    p.set_defaults(fn=_cmd_dim)

    with_file(sub.add_parser("bases", help="enumerate all metric bases")).set_defaults(
        fn=_cmd_bases
    )

    p = with_file(sub.add_parser("forced", help="basis forced vertices"))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true")
    mode.add_argument("--fast", action="store_true", help="structural characterization (default)")
    p.add_argument("--dot", action="store_true", help="DOT output, black=forced gray=in-some-basis")
    p.set_defaults(fn=_cmd_forced)

    p = with_file(sub.add_parser("strong", help="strong metric dimension report"))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true")
    mode.add_argument("--fast", action="store_true")
    p.set_defaults(fn=_cmd_strong)

    p = with_file(sub.add_parser("srg", help="strong resolving graph"))
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=_cmd_srg)

    with_file(sub.add_parser("reduce", help="collapse trees to star form")).set_defaults(
        fn=_cmd_reduce
    )

    p = sub.add_parser("transform", help="forced-vertex preserving surgeries")
    p.add_argument("kind", choices=("extend", "pendant", "cycle2pendant", "pendant2cycle"))
    p.add_argument("file")
    p.add_argument("--human", action="store_true")
    p.add_argument("-m", type=int, default=1, help="path length for extend")
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("--cap", type=int, default=None, help="oracle size cap override")
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", choices=("random", "gn", "gtq", "fixture"), default="random")
    p.add_argument("--g", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--branch-prob", type=float, default=0.0)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--name", default="fig2a")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="cross-validate fast paths against oracles")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--subsets", type=int, default=60)
    p.add_argument("--checks", default=None, help="comma separated subset of checks")
    p.add_argument("--reproducer-dir", default=".")
    p.add_argument("--human", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage problems; the contract here is 1.
        return 1 if exc.code == 2 else int(exc.code or 0)
    try:
        return args.fn(args)
    except UbxError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
