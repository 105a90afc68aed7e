"""Command-line interface.

Exit codes: 0 success (positive or vacuous for ``check``, certified for
``theorem``, soliton found for ``soliton``, all rows agree for ``sweep``);
1 a negative outcome (non-positive graph, failed certificate, no soliton
found, disagreeing sweep row); 2 invalid input or arguments.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import kernels
from .coherence import (
    coherent_decomposition,
    expected_dimension,
    reduced_system,
    similar_edge_classes,
    to_dot,
)
from .errors import EmptySystem, NilgraphError, QTooSmall, TheoremViolation, UnknownFamily
from .families import closed_form_weights, fidelity_problems, get_family, realize
from .graph import format_edge_list, is_connected
from .io import read_graph, write_graph
from .linalg import format_rational
from .positivity import Verdict, check_positive, format_report
from .soliton import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    build_algebra,
    format_certificate,
    search_soliton,
    seed_from_weights,
)
from .sweep import parse_range, run_sweep, sweep_csv
from .theorem import default_jobs, report_csv, report_summary, run_theorem

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


def _params(items: list[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"expected name=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _jobs(args) -> int:
    return default_jobs() if args.jobs is None else max(1, args.jobs)


def cmd_check(args) -> int:
    g, _ = read_graph(args.path, args.input_format)
    report = check_positive(g, Fraction(args.nu))
    sys.stdout.write(format_report(g, report, decimals=args.float))
    return EXIT_NEGATIVE if report.verdict is Verdict.NON_POSITIVE else EXIT_OK


def cmd_decompose(args) -> int:
    g, _ = read_graph(args.path, args.input_format)
    d = coherent_decomposition(g)
    if args.format == "dot":
        sys.stdout.write(to_dot(d))
        return EXIT_OK
    s = similar_edge_classes(g, d)
    out = ["# nilgraph decomposition v1", f"type: p={g.p} q={g.q}"]
    for lam, (comp, kind) in enumerate(zip(d.components, d.kinds)):
        out.append(f"component {lam} [{kind.name.lower()}]: " + " ".join(map(str, comp)))
    out.append("coherence edges: " + (" ".join(f"{a}-{b}" for a, b in d.coherence_edges) or "none"))
    out.append(f"similarity classes: {len(s)} (expected {expected_dimension(d)})")
    try:
        rs = reduced_system(g, s)
    except EmptySystem:
        out.append("reduced system: empty")
    else:
        out.append("reduced system (rhs 1):")
        for desc, row in zip(rs.variable_order, rs.matrix.rows):
            out.append(f"  {str(desc):<16} " + " ".join(format_rational(x) for x in row))
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_family(args) -> int:
    fam = get_family(args.name)
    params = fam.check_params({k: int(v) for k, v in _params(args.params).items()})
    spec = fam.build(**params)
    g = realize(spec)
    if args.format == "edges":
        sys.stdout.write(format_edge_list(g))
        return EXIT_OK
    if args.format == "json":
        sys.stdout.write(write_graph(g, "json", fam.name, params))
        return EXIT_OK
    if args.format == "dot":
        sys.stdout.write(to_dot(coherent_decomposition(g)))
        return EXIT_OK
    report = check_positive(g)
    pred = fam.predicate(**params)
    out = [f"family: {fam.name} " + " ".join(f"{k}={v}" for k, v in params.items()),
           f"type: p={g.p} q={g.q}", f"connected: {str(is_connected(g)).lower()}"]
    for problem in fidelity_problems(spec, g):
        out.append(f"warning: {problem}")
    if fam.biconditional:
        out.append("prediction: " + ("POSITIVE" if pred else "NON-POSITIVE"))
    else:
        out.append("claim: " + ("NON-POSITIVE" if pred else "none"))
    try:
        closed = closed_form_weights(fam.name, **params)
    except NilgraphError:
        closed = {}
    for letter, w in closed.items():
        out.append(f"closed form {letter} = {format_rational(w)}")
    out.append(f"min weight: {format_rational(report.min_weight)}")
    out.append(f"verdict: {report.verdict.value}")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_theorem(args) -> int:
    report = run_theorem(args.q, jobs=_jobs(args), allow_small=args.override_q_min,
                         allow_large=args.allow_large, strict=False)
    sys.stdout.write(report_summary(report) if args.format == "text" else report_csv(report))
    return EXIT_OK if report.certified else EXIT_NEGATIVE


def cmd_soliton(args) -> int:
    if args.tol <= 0:
        raise ValueError("--tol must be positive")
    g, _ = read_graph(args.path, args.input_format)
    alg = build_algebra(g)
    seed = None
    if args.seed_weights:
        report = check_positive(g)
        if report.verdict is Verdict.POSITIVE:
            seed = seed_from_weights(report.weights)
    found = search_soliton(alg, max_iter=args.max_iter, tol=args.tol, seed_scales=seed)
    if found is None:
        sys.stdout.write("# nilgraph soliton certificate v1\nNOT FOUND\n")
        return EXIT_NEGATIVE
    metric, cert = found
    sys.stdout.write(format_certificate(cert))
    if args.float:
        sys.stdout.write("scales: " + " ".join(f"{x:.12g}" for x in metric.scales) + "\n")
    return EXIT_OK if cert.accepted else EXIT_NEGATIVE


def cmd_sweep(args) -> int:
    fam = get_family(args.family)
    ranges = {k: parse_range(v) for k, v in _params(args.ranges).items()}
    rows = run_sweep(fam.name, ranges, jobs=_jobs(args))
    sys.stdout.write(sweep_csv(fam.name, rows))
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--backend-info", action="store_true", help="print the linear algebra backend and exit")
    sub = parser.add_subparsers(dest="command")

    def graph_input(p):
        p.add_argument("path", help="edge-list file, or .json graph document")
        p.add_argument("--input-format", choices=["auto", "edges", "json"], default="auto")

    def jobs(p):
        p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $NILGRAPH_JOBS or 1)")

    p = sub.add_parser("check", help="decide positivity of a graph")
    graph_input(p)
    p.add_argument("--nu", default="1", help="positive rational right-hand side (default 1)")
    p.add_argument("--float", action="store_true", help="append decimal approximations")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="coherent decomposition and reduced system")
    graph_input(p)
    p.add_argument("--format", choices=["text", "dot"], default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("family", help="realize a parametric family")
    p.add_argument("name")
    p.add_argument("params", nargs="*", metavar="name=value")
    p.add_argument("--format", choices=["text", "edges", "json", "dot"], default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("theorem", help="certify the deletion ladder for q vertices")
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=["csv", "text"], default="csv")
    p.add_argument("--override-q-min", action="store_true", help="allow 7 <= q < 21")
    p.add_argument("--allow-large", action="store_true", help="allow q above 40")
    jobs(p)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("soliton", help="numerically search for a nilsoliton metric")
    graph_input(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--seed-weights", action="store_true", help="start from the exact positive weights")
    p.add_argument("--float", action="store_true", help="also print the metric scales")
    p.set_defaults(func=cmd_soliton)

    p = sub.add_parser("sweep", help="compare family predicates with the solver on a grid")
    p.add_argument("family")
    p.add_argument("ranges", nargs="+", metavar="name=lo..hi")
    jobs(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend_info:
        print(kernels.BACKEND)
        return EXIT_OK
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (QTooSmall, UnknownFamily) as exc:
        print(f"nilgraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"nilgraph: theorem violation: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"nilgraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
