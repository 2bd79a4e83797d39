"""Command-line entry point: ``kelmans-turan <subcommand> ...``.

Machine-readable output goes to stdout (graph6, JSON or CSV), diagnostics to
stderr.  Exit status is 0 on success, 1 when a verification fails and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from .enumeration import BudgetError, EmptyStreamError, EnumerationSpec, argmax_over, count_unlabeled, stream_masks
from .families import HypothesisError, candidate_members, extremal_value, family, s_graph, s_plus_graph, w_graph
from .graph import Graph, GraphError, construct
from .io import read_graph, to_dot, to_edge_list, to_graph6
from .kelmans import ThresholdError, disintegration, eko_reduce, eko_shape, kelmans_op, threshold_graph
from .parameters import ParameterKind, evaluate
from .structure import Connectivity, ExtremalProblem, Pattern, invariants
from .verify import LEMMA_SUITES, CLASSICAL, run_lemma_suite, verify_classical, verify_feasibility, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    """JSON with insertion-ordered fields and floats at 12 significant digits."""
    return json.dumps(_round_floats(obj), indent=2)


def _fmt(value) -> str:
    return f"{value:.12g}" if isinstance(value, float) else str(value)


def dump_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _render_graph(g: Graph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "edges":
        return to_edge_list(g)
    return to_graph6(g) + "\n"


def _load(args) -> Graph:
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    elif args.graph and args.graph != "-":
        text = args.graph
    else:
        text = sys.stdin.read()
    return read_graph(text)


def _kind(text: str) -> ParameterKind:
    try:
        return ParameterKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pattern(text: str) -> Pattern:
    name, _, size = text.partition(":")
    try:
        return Pattern(name, int(size))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected path:k, cycle:k or matching:m, got {text!r}") from exc


# -- subcommands -----------------------------------------------------------------
def cmd_construct(args) -> int:
    kind = args.family
    if kind == "w":
        g = w_graph(args.n, _need(args.k, "k"), _need(args.s, "s"))
    elif kind == "s":
        g = s_graph(args.n, _need(args.k, "k"))
    elif kind == "s-plus":
        g = s_plus_graph(args.n, _need(args.k, "k"))
    else:
        g = construct(kind, args.n)
    sys.stdout.write(_render_graph(g, args.format))
    return EXIT_OK


def _need(value, name):
    if value is None:
        raise UsageError(f"--{name} is required for this graph")
    return value


def cmd_param(args) -> int:
    g = _load(args)
    print(dump_json({"kind": str(args.kind), "value": evaluate(g, args.kind)}))
    return EXIT_OK


def cmd_ko(args) -> int:
    g = _load(args)
    kind = "KO" if g.has_edge(args.x, args.y) else "EKO"
    h = kelmans_op(g, args.x, args.y)
    print(dump_json({"input": to_graph6(g), "x": args.x, "y": args.y, "kind": kind, "result": to_graph6(h)}))
    return EXIT_OK


def cmd_threshold(args) -> int:
    g = _load(args)
    trace = threshold_graph(g)
    print(dump_json({"input": to_graph6(g), **trace.to_dict(), "result": to_graph6(trace.result)}))
    return EXIT_OK


def cmd_disintegrate(args) -> int:
    g = _load(args)
    h = disintegration(g, args.alpha)
    print(dump_json({"input": to_graph6(g), "alpha": args.alpha, "n": h.n, "result": to_graph6(h)}))
    return EXIT_OK


def cmd_eko(args) -> int:
    g = _load(args)
    shape = eko_shape(g)
    trace = eko_reduce(g)
    out = {
        "input": to_graph6(g),
        "s": shape.s,
        "p": shape.p,
        "clique": list(shape.clique),
        "core": list(shape.core),
        **trace.to_dict(),
        "result": to_graph6(trace.result),
        "target": to_graph6(shape.target(g.n)),
    }
    print(dump_json(out))
    return EXIT_OK


def cmd_invariant(args) -> int:
    print(dump_json(invariants(_load(args))))
    return EXIT_OK


def cmd_family(args) -> int:
    fam = family(args.which, args.n, args.k)
    rows = []
    for s, g in fam.members:
        value = evaluate(g, args.kind) if args.kind else g.num_edges
        rows.append([args.n, args.k, "" if s is None else s, value, to_graph6(g)])
    sys.stdout.write(dump_csv(["n", "k", "s", str(args.kind or "edges"), "graph6"], rows))
    return EXIT_OK


_PROBLEM_DEFAULTS = {"path": Connectivity.CONNECTED, "cycle": Connectivity.TWO_CONNECTED, "matching": Connectivity.CONNECTED}


def cmd_extremal(args) -> int:
    conn = Connectivity(args.connectivity) if args.connectivity else _PROBLEM_DEFAULTS[args.problem]
    size = args.k + 1 if args.problem == "matching" else args.k
    problem = ExtremalProblem(Pattern(args.problem, size), conn)
    best, winners = extremal_value(problem, args.kind, args.n)
    rows = [
        [args.n, args.k, "" if s is None else s, evaluate(g, args.kind), to_graph6(g)]
        for s, g in candidate_members(problem, args.kind, args.n)
    ]
    rows += [[args.n, args.k, "max", best, to_graph6(g)] for _, g in winners]
    sys.stdout.write(dump_csv(["n", "k", "s", str(args.kind), "graph6"], rows))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = EnumerationSpec(args.n, Connectivity(args.klass), args.free, args.long_run)
    reps = not args.labeled
    out = {
        "n": args.n,
        "class": spec.connectivity.value,
        "free": str(args.free) if args.free else None,
        "stream": "representatives" if reps else "labeled",
    }
    if args.kind is None:
        out["count"] = sum(1 for _ in stream_masks(spec, representatives=reps))
        if args.n <= 7:
            out["unlabeled"] = count_unlabeled(args.n, spec.connectivity, args.free)
    else:
        res = argmax_over(spec, args.kind, jobs=args.jobs, representatives=reps)
        out.update(
            {
                "kind": str(args.kind),
                "value": res.value,
                "maximizers": [to_graph6(g) for g in res.maximizers],
                "scanned": res.scanned,
                "admitted": res.admitted,
            }
        )
    print(dump_json(out))
    return EXIT_OK


def _table(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                lines.append("  " + "  ".join(f"{k}={_fmt(v)}" for k, v in item.items()))
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.theorem:
        if args.k is None or args.kind is None or args.n is None:
            raise UsageError("--theorem needs --n, --k and --kind")
        report = verify_theorem(args.theorem, args.n, args.k, args.kind, jobs=args.jobs)
    elif args.classical:
        if args.n is None:
            raise UsageError("--classical needs --n")
        report = verify_classical(args.classical, args.n, args.k)
    elif args.feasibility:
        if args.kind is None:
            raise UsageError("--feasibility needs --kind")
        report = verify_feasibility(args.kind, args.n or 6)
    elif args.lemma:
        report = run_lemma_suite(args.lemma)
    else:
        raise UsageError("choose one of --theorem, --classical, --feasibility or --lemma")
    data = report.to_dict(timing=args.timing)
    print(dump_json(data) if args.format == "json" else _table(data))
    return EXIT_OK if report.passed else EXIT_FAIL


# -- parser ------------------------------------------------------------------------
def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="graph6 string or edge list; '-' or omitted reads stdin")
    p.add_argument("--input", help="read the graph from this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kelmans-turan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph")
    p.add_argument("family", choices=["complete", "empty", "path", "cycle", "star", "w", "s", "s-plus"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--format", choices=["graph6", "dot", "edges"], default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("param", help="evaluate a parameter")
    _graph_args(p)
    p.add_argument("--kind", type=_kind, required=True, help="edges|dpow:p|lambda|q|cliques:s|stars:r")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("ko", help="apply G[x->y]")
    _graph_args(p)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.set_defaults(func=cmd_ko)

    p = sub.add_parser("threshold", help="reduce to a threshold graph by Kelmans operations")
    _graph_args(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("disintegrate", help="alpha-disintegration H(G; alpha)")
    _graph_args(p)
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_disintegrate)

    p = sub.add_parser("eko-reduce", help="EKO reduction of a connected threshold graph")
    _graph_args(p)
    p.set_defaults(func=cmd_eko)

    p = sub.add_parser("invariant", help="longest path, circumference and matching number")
    _graph_args(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("family", help="CSV of a family's members")
    p.add_argument("--which", choices=["G1", "G2", "G3"], type=str.upper, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", type=_kind)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("extremal", help="CSV of family values and the maximum")
    p.add_argument("--problem", choices=["path", "cycle", "matching"], required=True)
    p.add_argument("--kind", type=_kind, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--connectivity", choices=[c.value for c in Connectivity])
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("enumerate", help="exhaustive scan: counts or argmax")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="klass", choices=[c.value for c in Connectivity], default="any")
    p.add_argument("--free", type=_pattern, help="path:k, cycle:k or matching:m")
    p.add_argument("--kind", type=_kind)
    p.add_argument("--jobs", type=int)
    p.add_argument("--labeled", action="store_true", help="scan every labeling instead of representatives")
    p.add_argument("--long-run", action="store_true", help="allow the labeled stream at n = 8")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="theorem, classical, feasibility or lemma checks")
    p.add_argument("--theorem", choices=["main1", "main2", "matching"], type=str.lower)
    p.add_argument("--classical", choices=list(CLASSICAL))
    p.add_argument("--feasibility", action="store_true")
    p.add_argument("--lemma", choices=list(LEMMA_SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", type=_kind)
    p.add_argument("--jobs", type=int)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--timing", action="store_true", help="include runtimes (output is then not byte-stable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, HypothesisError, BudgetError, EmptyStreamError, ThresholdError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main

if __name__ == "__main__":
    sys.exit(main())
