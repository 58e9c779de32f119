"""Command-line interface.

Usage examples
--------------
  hamlift catalog list
  hamlift hamilton --catalog z9-cycle --cert out.cert --trace out.trace
  hamlift verify --graph c5.graph --cert c5.cert
  hamlift oracle --catalog petersen-f20 --budget 100000
  hamlift sweep --max-order 64 --report sweep.tsv
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import catalog as cat
from .abelian_ham import hamilton_cycle_through_edge
from .formats import (
    FormatError,
    format_certificate,
    format_graph,
    parse_cayley,
    parse_certificate,
    parse_graph,
    parse_group,
)
from .graphcore import GraphError, GroupAction, g_minimal_reduce, quotient_graph, to_dot
from .lemmas import verify_lemma_suite
from .lifting import verify_certificate
from .oracle import BUDGET_EXCEEDED, DEFAULT_BUDGET, find_hamilton_cycle, find_hamilton_path
from .permgroup import PermGroupError, commutator_subgroup, orbit_partition
from .pipeline import (
    PETERSEN,
    VIOLATION,
    HypothesisViolation,
    hamilton_path,
    hamiltonize,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PETERSEN = 2
EXIT_BUDGET = 3


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_action(args) -> GroupAction:
    if getattr(args, "catalog", None):
        return cat.get(args.catalog).action
    if not args.graph or not args.group:
        raise FormatError("give --catalog NAME or both --graph and --group")
    graph = parse_graph(Path(args.graph).read_text(), args.graph)
    group = parse_group(Path(args.group).read_text(), args.group)
    return GroupAction(group, graph)


def _load_graph(args):
    if getattr(args, "catalog", None):
        return cat.get(args.catalog).graph
    if not args.graph:
        raise FormatError("give --catalog NAME or --graph FILE")
    return parse_graph(Path(args.graph).read_text(), args.graph)


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name, inst in cat.catalog().items():
            print(f"{name}\t{inst.description}")
        return EXIT_OK
    if not args.name:
        raise FormatError("catalog show needs a name")
    inst = cat.get(args.name)
    derived = commutator_subgroup(inst.group)
    print(f"name: {inst.name}")
    print(f"description: {inst.description}")
    print(f"vertices: {inst.graph.vertex_count}")
    print(f"edges: {inst.graph.edge_count}")
    print(f"group order: {inst.group.order}")
    print(f"commutator order: {derived.order}")
    print(f"expected: {inst.expected}")
    return EXIT_OK


def cmd_hamilton(args) -> int:
    action = _load_action(args)
    result = hamiltonize(action, args.budget)
    if args.trace:
        _write(args.trace, result.trace_text())
    else:
        sys.stderr.write(result.trace_text())
    if result.outcome == VIOLATION:
        print(f"hypothesis violation: {result.reason}", file=sys.stderr)
        return EXIT_FAIL
    if result.outcome == PETERSEN:
        print("Petersen graph: no Hamilton cycle", file=sys.stderr)
        return EXIT_PETERSEN
    _write(args.cert, format_certificate(result.certificate))
    return EXIT_OK


def cmd_path(args) -> int:
    action = _load_action(args)
    try:
        cert = hamilton_path(action, args.budget)
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _write(args.cert, format_certificate(cert))
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = parse_graph(Path(args.graph).read_text(), args.graph)
    cert = parse_certificate(Path(args.cert).read_text(), args.cert)
    out_of_range = [v for v in cert.vertices if not 0 <= v < graph.vertex_count]
    if out_of_range:
        print(f"invalid: vertices out of range {out_of_range}")
        return EXIT_FAIL
    if len(set(cert.vertices)) != len(cert.vertices):
        print("invalid: repeated vertex")
        return EXIT_FAIL
    if verify_certificate(graph, cert):
        print(f"valid Hamilton {cert.kind}")
        return EXIT_OK
    print(f"invalid: not a Hamilton {cert.kind} of the graph")
    return EXIT_FAIL


def cmd_oracle(args) -> int:
    graph = _load_graph(args)
    search = find_hamilton_path if args.path else find_hamilton_cycle
    res = search(graph, args.budget)
    print(f"status: {res.status}")
    print(f"expansions: {res.expansions}")
    if res.found:
        sys.stdout.write(format_certificate(res.certificate))
        return EXIT_OK
    return EXIT_BUDGET if res.status == BUDGET_EXCEEDED else EXIT_FAIL


def cmd_cq_edge(args) -> int:
    if args.catalog:
        spec = cat.get(args.catalog).cayley
        if spec is None:
            raise FormatError(f"{args.catalog} is not given as a Cayley graph")
    else:
        spec = parse_cayley(Path(args.cayley).read_text(), Path(args.cayley).parent, args.cayley)
    cert = hamilton_cycle_through_edge(spec, tuple(args.edge))
    sys.stdout.write(format_certificate(cert))
    return EXIT_OK


def cmd_quotient(args) -> int:
    action = _load_action(args)
    sub = parse_group(Path(args.subgroup).read_text(), args.subgroup) if args.subgroup else commutator_subgroup(action.group)
    q = orbit_partition(sub)
    quotient, loops = quotient_graph(action.graph, q)
    text = format_graph(quotient)
    text += "".join(f"# block {i}: {' '.join(map(str, b))}\n" for i, b in enumerate(q.blocks))
    if loops:
        text += f"# blocks with internal edges: {' '.join(map(str, sorted(loops)))}\n"
    _write(args.out, text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    action = _load_action(args)
    reduced, removed = g_minimal_reduce(action)
    text = format_graph(reduced) + f"# removed edge orbits: {len(removed)}\n"
    _write(args.out, text)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    graph = _load_graph(args)
    name = (args.catalog or "X").replace("-", "_").replace("^", "_")
    _write(args.out, to_dot(graph, name))
    return EXIT_OK


def sweep_instance(name: str) -> list[tuple[str, str, bool, str]]:
    """Rows (instance, check, passed, detail) for one catalog instance."""
    inst = cat.get(name)
    rows = []
    if inst.expected == cat.VIOLATION:
        result = hamiltonize(inst.action)
        rows.append((name, "hypotheses", result.outcome == VIOLATION, result.reason or result.outcome))
        return rows
    if inst.expected == cat.TINY:
        cert = hamilton_path(inst.action)
        rows.append((name, "hamilton-path", verify_certificate(inst.graph, cert), " ".join(map(str, cert.vertices))))
        return rows
    for check in verify_lemma_suite(inst.action, inst.cayley):
        rows.append((name, check.lemma, check.passed, check.detail))
    result = hamiltonize(inst.action)
    if inst.expected == cat.PETERSEN:
        ok = result.outcome == PETERSEN and find_hamilton_cycle(inst.graph).status == "none"
        rows.append((name, "theorem", ok, result.outcome))
    else:
        ok = result.has_cycle and verify_certificate(inst.graph, result.certificate)
        rows.append((name, "theorem", ok, result.outcome + (f" [{','.join(result.branches)}]" if result.branches else "")))
    cert = hamilton_path(inst.action)
    rows.append((name, "hamilton-path", verify_certificate(inst.graph, cert), f"{len(cert.vertices)} vertices"))
    return rows


def _safe_sweep(name: str) -> list[tuple[str, str, bool, str]]:
    try:
        return sweep_instance(name)
    except Exception as exc:  # report, never abort the sweep
        return [(name, "error", False, f"{type(exc).__name__}: {exc}")]


def cmd_sweep(args) -> int:
    names = sorted(n for n, inst in cat.catalog().items() if inst.group.order <= args.max_order)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_safe_sweep, names))
    else:
        results = [_safe_sweep(n) for n in names]
    rows = [row for block in results for row in block]
    text = "instance\tcheck\tresult\tdetail\n"
    text += "".join(f"{n}\t{c}\t{'pass' if ok else 'fail'}\t{d}\n" for n, c, ok, d in rows)
    _write(args.report, text)
    failed = sum(1 for row in rows if not row[2])
    print(f"{len(names)} instances, {len(rows)} checks, {failed} failed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamlift", description="Hamilton cycles via quotients and lifts")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p, graph_only=False):
        p.add_argument("--catalog", help="built-in instance name")
        p.add_argument("--graph", help="graph file")
        if not graph_only:
            p.add_argument("--group", help="group file acting on the graph's vertices")

    p = sub.add_parser("catalog", help="list or show built-in instances")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("hamilton", help="construct a Hamilton cycle")
    add_source(p)
    p.add_argument("--cert", help="certificate output file (default stdout)")
    p.add_argument("--trace", help="trace output file (default stderr)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_hamilton)

    p = sub.add_parser("path", help="construct a Hamilton path")
    add_source(p)
    p.add_argument("--cert")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive Hamilton search")
    add_source(p, graph_only=True)
    p.add_argument("--path", action="store_true", help="search for a path instead of a cycle")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("cq-edge", help="Hamilton cycle through an edge of an abelian Cayley graph")
    p.add_argument("--catalog")
    p.add_argument("--cayley", help="Cayley spec file")
    p.add_argument("--edge", type=int, nargs=2, required=True, metavar=("U", "V"))
    p.set_defaults(func=cmd_cq_edge)

    p = sub.add_parser("quotient", help="quotient graph by a subgroup's orbits (default G')")
    add_source(p)
    p.add_argument("--subgroup", help="group file for the subgroup")
    p.add_argument("--out")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("reduce", help="G-minimal reduction")
    add_source(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("export-dot", help="write the graph in DOT format")
    add_source(p, graph_only=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("sweep", help="lemma and theorem checks over the catalog")
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--report", help="TSV report file (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, GraphError, PermGroupError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
