"""Command-line front end.

Subcommands: ``enumerate`` (stream minimal rdfs), ``extend`` (extension
query with witness), ``check`` (minimality report), ``gen`` (instance
generators) and ``bench`` (CSV benchmark rows).  Exit codes: 0 for
success / yes / minimal, 1 for no / not minimal, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import (brute_ext, brute_minimal_rdfs, enumerate_minimal_rdf_refined,
               enumerate_minimal_rdf_simple, enumerate_po_minimal_simple,
               ext_po_rd, ext_rd, format_assignment, gen_c5_copies, gen_cycle,
               gen_ext_po_rd, gen_ext_rd, gen_null, gen_random, gen_star,
               parse_assignment, parse_edge_list, to_edge_list)
from .extension import ExtensionInstance
from .graph import Graph, GraphFormatError
from .oracle import OracleCapExceeded
from .rdf import minimality_report, po_minimality_report
from .stats import EnumStats


class UsageError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _run_enumeration(g: Graph, mode: str, order: str,
                     assert_invariants: bool, sink) -> EnumStats:
    if mode == "refined" and order == "po":
        raise UsageError("refined mode supports the standard order only")
    if mode == "oracle":
        start = time.perf_counter()
        try:
            solutions = brute_minimal_rdfs(g, order=order)
        except OracleCapExceeded as exc:
            raise UsageError(str(exc)) from exc
        for f in solutions:
            sink(f)
        stats = EnumStats(solutions=len(solutions), tree_nodes=3 ** g.n)
        stats.wall_ms = int((time.perf_counter() - start) * 1000)
        return stats
    if mode == "simple":
        if order == "po":
            return enumerate_po_minimal_simple(g, sink)
        return enumerate_minimal_rdf_simple(g, sink)
    if mode == "refined":
        return enumerate_minimal_rdf_refined(
            g, sink, assert_invariants=assert_invariants
        )
    raise UsageError(f"unknown mode {mode!r}")


def _cmd_enumerate(args) -> int:
    g = _load_graph(args.graph)
    collected: list[str] = []

    def sink(f):
        line = format_assignment(f)
        if args.sorted or args.count_only:
            collected.append(line)
        else:
            print(line, flush=True)

    stats = _run_enumeration(g, args.mode, args.order,
                             args.assert_invariants, sink)
    if args.count_only:
        print(stats.solutions)
    elif args.sorted:
        for line in sorted(collected):
            print(line)
    if args.stats == "json":
        print(json.dumps(stats.to_json()), file=sys.stderr)
    return 0


def _parse_forbidden(spec: str | None, n: int) -> frozenset[int]:
    if not spec:
        return frozenset()
    try:
        ids = {int(part) for part in spec.split(",") if part.strip() != ""}
    except ValueError as exc:
        raise UsageError(f"bad forbidden list {spec!r}") from exc
    out_of_range = {v for v in ids if not 0 <= v < n}
    if out_of_range:
        raise UsageError(f"forbidden ids out of range: {sorted(out_of_range)}")
    return frozenset(ids)


def _cmd_extend(args) -> int:
    g = _load_graph(args.graph)
    try:
        f = parse_assignment(args.assignment, g.n)
        forbidden = _parse_forbidden(args.forbidden, g.n)
        if forbidden:
            inst = ExtensionInstance(g, f, forbidden)
            witness = (gen_ext_po_rd if args.order == "po" else gen_ext_rd)(inst)
        else:
            witness = (ext_po_rd if args.order == "po" else ext_rd)(g, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if witness is None:
        print("NO")
        return 1
    print(f"YES {format_assignment(witness)}")
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    try:
        f = parse_assignment(args.assignment, g.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = minimality_report if args.order == "standard" else po_minimality_report
    failed = report(g, f)
    label = "minimal" if args.order == "standard" else "PO-minimal"
    if not failed:
        print(f"{label}: all conditions pass")
        return 0
    for cond in failed:
        print(f"fails: {cond}")
    return 1


def _cmd_gen(args) -> int:
    family = args.family
    params = args.params
    try:
        if family == "cycle":
            (k,) = map(int, params)
            g = gen_cycle(k)
        elif family == "star":
            (rays,) = map(int, params)
            g = gen_star(rays)
        elif family == "null":
            (n,) = map(int, params)
            g = gen_null(n)
        elif family == "c5pow":
            (c,) = map(int, params)
            g = gen_c5_copies(c)
        elif family == "random":
            n, p = int(params[0]), float(params[1])
            g = gen_random(n, p, args.seed)
        else:
            raise UsageError(f"unknown family {family!r}")
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad parameters for {family}: {exc}") from exc
    sys.stdout.write(to_edge_list(g))
    return 0


def _bench_instances(spec: str):
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError("family spec must look like name:lo:hi, e.g. c5pow:1:3")
    name, lo, hi = parts[0], int(parts[1]), int(parts[2])
    builders = {
        "c5pow": gen_c5_copies,
        "cycle": gen_cycle,
        "star": gen_star,
        "null": gen_null,
    }
    if name not in builders:
        raise UsageError(f"unknown bench family {name!r}")
    for k in range(lo, hi + 1):
        yield builders[name](k)


def _cmd_bench(args) -> int:
    modes = [m for m in args.modes.split(",") if m]
    if not modes:
        raise UsageError("empty mode list")
    for mode in modes:
        if mode not in ("simple", "refined", "oracle"):
            raise UsageError(f"unknown mode {mode!r}")
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "mode", "solutions", "tree_nodes", "max_gap",
                     "wall_ms"])
    for g in _bench_instances(args.family):
        for mode in modes:
            stats = _run_enumeration(g, mode, args.order, False, lambda f: None)
            writer.writerow([g.n, mode, stats.solutions, stats.tree_nodes,
                             stats.max_gap, stats.wall_ms])
            sys.stdout.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="romandom",
        description="Minimal Roman dominating functions: enumeration, "
                    "extension queries, minimality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream all minimal rdfs of a graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--mode", choices=["simple", "refined", "oracle"],
                   default="refined")
    p.add_argument("--order", choices=["standard", "po"], default="standard")
    p.add_argument("--count-only", action="store_true",
                   help="print only the number of solutions")
    p.add_argument("--sorted", action="store_true",
                   help="collect and sort output lines (disables streaming)")
    p.add_argument("--stats", choices=["json"],
                   help="emit run statistics to stderr")
    p.add_argument("--assert-invariants", action="store_true",
                   help="enable internal state assertions (refined mode)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("extend", help="extension query with witness")
    p.add_argument("graph")
    p.add_argument("assignment", help="digit string over {0,1,2}")
    p.add_argument("--forbidden", help="comma-separated ids barred from value 2")
    p.add_argument("--order", choices=["standard", "po"], default="standard")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("check", help="report which minimality conditions fail")
    p.add_argument("graph")
    p.add_argument("assignment")
    p.add_argument("--order", choices=["standard", "po"], default="standard")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="print a generated instance as an edge list")
    p.add_argument("family", choices=["cycle", "star", "null", "c5pow",
                                      "random"])
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="benchmark enumerators over a family")
    p.add_argument("--family", required=True, help="name:lo:hi, e.g. c5pow:1:3")
    p.add_argument("--modes", required=True,
                   help="comma-separated: simple,refined,oracle")
    p.add_argument("--order", choices=["standard", "po"], default="standard")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
