"""Command-line front end.

Every subcommand reads a graph (JSON or the plain-text format) from a file
argument or standard input and writes JSON to standard output.

Exit codes: 0 verdict true / pass, 1 verdict false / fail, 2 usage or I/O
error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import catalog, generate, laman, planarity
from .errors import BipMinorError
from .graph import BiGraph, format_text, loads
from .minors import (
    BUDGET_EXHAUSTED,
    CONTAINS,
    DEFAULT_BUDGET,
    MinorCertificate,
    contains_bipartite_minor,
    verify_certificate,
)

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TARGET_ALIASES = {"K22": catalog.K22, "K23": catalog.K23, "K33": catalog.K33}


class UsageError(Exception):
    pass


def _read_graph(source: str | None) -> BiGraph:
    if source in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}") from None
    try:
        return loads(text)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot parse graph: {exc}") from None


def _target(spec: str) -> BiGraph:
    if spec in TARGET_ALIASES:
        return TARGET_ALIASES[spec]()
    if Path(spec).exists():
        return _read_graph(spec)
    try:
        return catalog.build(spec)
    except BipMinorError:
        raise UsageError(f"unknown target {spec!r} (use K22, K23, K33, a catalog name or a graph file)") from None


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.format == "text":
        print(text)
    else:
        print(json.dumps(payload, sort_keys=True))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# -- subcommands -------------------------------------------------------------

def cmd_check_planar(args: argparse.Namespace) -> int:
    verdict = planarity.is_planar(_read_graph(args.graph))
    text = f"planar: {_yes(verdict.planar)}"
    if verdict.pattern:
        text += f" (contains a {verdict.pattern} subdivision)"
    _emit(args, verdict.to_dict(), text)
    return EXIT_TRUE if verdict.planar else EXIT_FALSE


def cmd_check_outerplanar(args: argparse.Namespace) -> int:
    ok = planarity.is_outerplanar(_read_graph(args.graph))
    _emit(args, {"outerplanar": ok}, f"outerplanar: {_yes(ok)}")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_check_forest(args: argparse.Namespace) -> int:
    ok = planarity.is_forest(_read_graph(args.graph))
    _emit(args, {"forest": ok}, f"forest: {_yes(ok)}")
    return EXIT_TRUE if ok else EXIT_FALSE


def _search(args: argparse.Namespace):
    G, H = _read_graph(args.graph), _target(args.target)
    return contains_bipartite_minor(G, H, args.budget, allow_swap=not args.strict_colors)


def cmd_check_minor(args: argparse.Namespace) -> int:
    outcome = _search(args)
    _emit(args, outcome.to_dict(), f"verdict: {outcome.verdict} ({outcome.stats.states} states)")
    return {CONTAINS: EXIT_TRUE, BUDGET_EXHAUSTED: EXIT_BUDGET}.get(outcome.verdict, EXIT_FALSE)


def cmd_find_certificate(args: argparse.Namespace) -> int:
    outcome = _search(args)
    if outcome.verdict == BUDGET_EXHAUSTED:
        _emit(args, {"verdict": outcome.verdict}, "budget exhausted")
        return EXIT_BUDGET
    if outcome.certificate is None:
        _emit(args, {"verdict": outcome.verdict}, "no certificate: target is not a bipartite minor")
        return EXIT_FALSE
    cert = outcome.certificate
    _emit(args, cert.to_dict(), "\n".join(str(op) for op in cert.ops) or "(empty script)")
    return EXIT_TRUE


def cmd_verify_certificate(args: argparse.Namespace) -> int:
    try:
        data = json.loads(Path(args.cert).read_text(encoding="utf-8"))
        cert = MinorCertificate.from_dict(data)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load certificate: {exc}") from None
    if args.graph is None and cert.host is not None:
        host = cert.host
    else:
        host = _read_graph(args.graph)
    report = verify_certificate(host, cert, allow_swap=not args.strict_colors)
    text = "pass" if report.passed else f"FAIL {report.first_failure}"
    _emit(args, report.to_dict(), text)
    return EXIT_TRUE if report.passed else EXIT_FALSE


def cmd_check_laman(args: argparse.Namespace) -> int:
    report = laman.is_laman(_read_graph(args.graph))
    text = f"(2,2)-Laman: {_yes(report.verdict)}"
    if report.worst_violation:
        xs, exc = report.worst_violation
        text += f"; worst violation {{{', '.join(xs)}}} excess {exc}"
    _emit(args, report.to_dict(), text)
    return EXIT_TRUE if report.verdict else EXIT_FALSE


def cmd_critical_sets(args: argparse.Namespace) -> int:
    sets = laman.critical_sets(_read_graph(args.graph), args.max_size)
    _emit(args, {"critical_sets": [list(s) for s in sets]}, "\n".join(" ".join(s) for s in sets))
    return EXIT_TRUE


def cmd_reduce_laman(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    deg = G.degree(args.vertex)
    if deg == 2:
        H = laman.reduce_degree2(G, args.vertex)
        _emit(args, {"kind": "degree2", "graph": H.to_dict()}, format_text(H))
    else:
        moves = laman.reduce_step(G, args.vertex)
        lines = [f"x={m.x} y={m.y} p={m.p}" for m in moves]
        _emit(args, {"kind": "move", "moves": [m.to_dict() for m in moves]}, "\n".join(lines))
    return EXIT_TRUE


def cmd_enumerate_laman(args: argparse.Namespace) -> int:
    for G in laman.enumerate_laman(args.max_vertices, cap=args.cap):
        if args.format == "text":
            print(format_text(G))
        else:
            print(json.dumps(G.to_dict()))
    return EXIT_TRUE


def cmd_verify_appendix(args: argparse.Namespace) -> int:
    scripts = catalog.appendix_scripts()
    if args.case:
        if args.case not in scripts:
            raise UsageError(f"unknown case {args.case!r}; choose from {', '.join(scripts)}")
        scripts = {args.case: scripts[args.case]}
    results = {}
    lines = []
    for name, cert in scripts.items():
        report = verify_certificate(cert.host, cert)
        results[name] = report.to_dict()
        lines.append(f"{name}: {'pass' if report.passed else 'FAIL ' + str(report.first_failure)}")
    passed = all(r["passed"] for r in results.values())
    _emit(args, {"passed": passed, "cases": results}, "\n".join(lines))
    return EXIT_TRUE if passed else EXIT_FALSE


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        _emit(args, {"graphs": catalog.names(), "patterns": catalog.describe()}, "\n".join(catalog.names()))
        return EXIT_TRUE
    if not args.name:
        raise UsageError("catalog build needs a graph name")
    try:
        G = catalog.build(args.name)
    except BipMinorError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, G.to_dict(), format_text(G).rstrip())
    return EXIT_TRUE


def cmd_equivalence_harness(args: argparse.Namespace) -> int:
    meta = {"max_vertices": args.max_vertices, "budget": args.budget}
    if args.sample:
        corpus = list(generate.random_corpus(args.sample, args.min_vertices, args.max_vertices, args.edge_prob, args.seed, args.min_side))
        meta.update(mode="random", sample=args.sample, seed=args.seed, edge_prob=args.edge_prob,
                    min_vertices=args.min_vertices, min_side=args.min_side, prng=generate.PRNG_NAME)
    else:
        corpus = generate.all_bipartite_graphs(args.max_vertices)
        meta.update(mode="exhaustive-connected")
    report = planarity.check_equivalence(args.theorem, corpus, args.budget, args.jobs, meta)
    text = (f"{args.theorem}: {len(report.entries)} graphs, {len(report.discrepancies)} discrepancies, "
            f"{len(report.exhausted)} budget exhaustions, {report.seconds:.1f}s")
    _emit(args, report.to_dict(verbose=args.verbose), text)
    if report.discrepancies:
        return EXIT_FALSE
    return EXIT_BUDGET if report.exhausted else EXIT_TRUE


def cmd_gen_random(args: argparse.Namespace) -> int:
    G = generate.random_bigraph(args.reds, args.blues, args.edge_prob, args.seed)
    payload = G.to_dict()
    payload["metadata"] = {"prng": generate.PRNG_NAME, "seed": args.seed, "edge_prob": args.edge_prob}
    _emit(args, payload, format_text(G).rstrip())
    return EXIT_TRUE


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for corpus runs")

    parser = argparse.ArgumentParser(prog="bipminor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, graph: bool = True, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], **kw)
        if graph:
            p.add_argument("graph", nargs="?", help="graph file (JSON or text); default: stdin")
        p.set_defaults(func=fn)
        return p

    add("check-planar", cmd_check_planar, help="planarity with a Kuratowski witness")
    add("check-outerplanar", cmd_check_outerplanar, help="outerplanarity via the cone graph")
    add("check-forest", cmd_check_forest, help="acyclicity")
    for name, fn in (("check-minor", cmd_check_minor), ("find-certificate", cmd_find_certificate)):
        p = add(name, fn, help="bipartite-minor search" if name == "check-minor" else "print a minor certificate")
        p.add_argument("--target", required=True, help="K22, K23, K33, a catalog name or a graph file")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--strict-colors", action="store_true", help="forbid swapping the colour classes")
    p = add("verify-certificate", cmd_verify_certificate, help="replay a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--strict-colors", action="store_true")
    add("check-laman", cmd_check_laman, help="(2,2)-Laman recognition")
    p = add("critical-sets", cmd_critical_sets, help="vertex sets with exactly 2|X|-4 edges")
    p.add_argument("--max-size", type=int, default=None)
    p = add("reduce-laman", cmd_reduce_laman, help="degree-2 deletion or degree-3 reduction moves")
    p.add_argument("--vertex", required=True)
    p = add("enumerate-laman", cmd_enumerate_laman, graph=False, help="all small (2,2)-Laman graphs, one per line")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--cap", type=int, default=laman.DEFAULT_ENUM_CAP)
    p = add("verify-appendix", cmd_verify_appendix, graph=False, help="replay the nine K_{3,3} scripts")
    p.add_argument("--case", default=None)
    p = add("catalog", cmd_catalog, graph=False, help="list or build named graphs")
    p.add_argument("action", choices=("list", "build"))
    p.add_argument("name", nargs="?")
    p = add("equivalence-harness", cmd_equivalence_harness, graph=False, help="predicate vs forbidden-minor agreement")
    p.add_argument("--theorem", choices=sorted(planarity.THEOREMS), required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--sample", type=int, default=0, help="random graphs instead of the exhaustive corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-vertices", type=int, default=1)
    p.add_argument("--min-side", type=int, default=1)
    p.add_argument("--edge-prob", type=float, default=0.6)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--verbose", action="store_true", help="include every per-graph verdict")
    p = add("gen-random", cmd_gen_random, graph=False, help="seeded random bipartite graph")
    p.add_argument("--reds", type=int, required=True)
    p.add_argument("--blues", type=int, required=True)
    p.add_argument("--edge-prob", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BipMinorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
