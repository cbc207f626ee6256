"""Command-line entry point.

Subcommands: construct, check, count, census, extremal, pipeline, verify.
Tabular results go to stdout (or --out) as CSV; graphs travel in the shared
edge-list format.  Exit codes: 0 success, 1 a checked property failed or a
searched object was not found, 2 invalid input, 3 budget exhausted.

All randomness is surfaced as --seed (default 2024); --threads (or the
EXGRAPH_THREADS environment variable) is accepted for interface stability
and validated, and results never depend on it.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path

from .core import (
    BipartiteGraph,
    GraphError,
    RootedGraph,
    as_graph,
    codegree,
    degeneracy,
    is_almost_regular,
    is_bipartite,
    is_critical_r_degenerate,
    parse_graph,
    serialize_graph,
)
from . import constructions
from .counting import (
    ThinCycleParams,
    automorphism_count,
    count_copies,
    count_embeddings,
    four_cycle_census,
    hom_cycle,
    path_hom_between,
    thin_cycle_auxiliary,
)
from .extremal import (
    Budget,
    bipartite_extremal_number,
    extremal_number,
    zarankiewicz_number,
)
from .procedures import (
    DEFAULT_SEED,
    GlueFailure,
    case2_relation_pipeline,
    find_glued_copy,
)
from .verify import SUITES, run_suite


class CliError(Exception):
    """Invalid input; maps to exit code 2."""


def _load(path):
    try:
        return parse_graph(Path(path).read_text())
    except OSError as err:
        raise CliError(f"cannot read {path}: {err}")
    except GraphError as err:
        raise CliError(f"{path}: {err}")


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows, out):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buf.getvalue(), out)


def _budget(args):
    kwargs = {}
    if getattr(args, "max_nodes", None) is not None:
        kwargs["max_nodes"] = args.max_nodes
    if getattr(args, "max_seconds", None) is not None:
        kwargs["max_seconds"] = args.max_seconds
    return Budget(**kwargs) if kwargs else None


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_construct(args):
    f = args.family
    need = lambda flag, value: value if value is not None else _missing(f, flag)
    if f == "cycle":
        g = constructions.cycle(need("--ell", args.ell))
    elif f == "path":
        g = constructions.path(need("--t", args.t))
    elif f == "complete":
        g = constructions.complete(need("--s", args.s))
    elif f == "complete-bipartite":
        g = constructions.complete_bipartite(need("--a", args.a), need("--b", args.b))
    elif f == "prism":
        g = constructions.prism(need("--ell", args.ell))
    elif f == "path-prism":
        g = constructions.path_prism(need("--t", args.t))
    elif f == "critical":
        g = constructions.critical_family(need("--r", args.r))
    elif f == "glued-prism":
        g = constructions.glued_prism(need("--ell", args.ell))
    elif f == "glued-prism-minus":
        g = constructions.glued_prism_minus(need("--ell", args.ell))
    else:
        raise CliError(f"unknown family {f!r}")
    if args.sided and not isinstance(g, BipartiteGraph):
        base = as_graph(g)
        labeled = is_bipartite(base)
        if not isinstance(labeled, BipartiteGraph):
            raise CliError(f"family {f} with these parameters is not bipartite")
        g = labeled
    _emit(serialize_graph(g), args.out)
    return 0


def _missing(family, flag):
    raise CliError(f"family {family} needs {flag}")


def _cmd_check(args):
    g = _load(args.input)
    graph = as_graph(g)
    rows = [
        ("vertices", graph.n),
        ("edges", graph.num_edges),
        ("min-degree", graph.min_degree()),
        ("max-degree", graph.max_degree()),
        ("bipartite", int(isinstance(is_bipartite(graph), BipartiteGraph))),
        ("degeneracy", degeneracy(graph)[0]),
    ]
    if args.r is not None:
        rows.append((f"critical-{args.r}", int(is_critical_r_degenerate(graph, args.r))))
    if args.almost_regular is not None:
        rows.append(
            (
                f"almost-regular-{args.almost_regular:g}",
                int(is_almost_regular(graph, args.almost_regular)),
            )
        )
    _csv(("name", "value"), rows, args.out)
    table = {name: str(value) for name, value in rows}
    status = 0
    for expect in args.expect or ():
        key, _, want = expect.partition("=")
        if key not in table:
            raise CliError(f"--expect references unknown property {key!r}")
        if table[key] != want:
            print(f"expect failed: {key} = {table[key]}, wanted {want}", file=sys.stderr)
            status = 1
    return status


def _cmd_count(args):
    g = as_graph(_load(args.input))
    rows = [("vertices", g.n), ("edges", g.num_edges)]
    if args.pattern:
        pat = as_graph(_load(args.pattern))
        rows += [
            ("copies", count_copies(pat, g)),
            ("embeddings", count_embeddings(pat, g)),
            ("pattern-automorphisms", automorphism_count(pat)),
        ]
    for length in args.hom_cycle or ():
        rows.append((f"hom-c{length}", hom_cycle(length, g)))
    if args.path_hom:
        a, b, t = args.path_hom
        rows.append((f"path-hom-{a}-{b}-{t}", path_hom_between(a, b, t, g)))
    if args.codegree:
        u, v = args.codegree
        rows.append((f"codegree-{u}-{v}", codegree(g, u, v)))
    _csv(("name", "value"), rows, args.out)
    return 0


def _cmd_census(args):
    g = as_graph(_load(args.input))
    thin, thick = four_cycle_census(g, ThinCycleParams(args.tau))
    rows = []
    for kind, cycles in (("thin", thin), ("thick", thick)):
        for cyc in cycles:
            a, b, c, d = cyc.vertices
            rows.append((a, b, c, d, *cyc.diagonal_codegrees, kind))
    rows.sort(key=lambda row: row[:4])
    _csv(("a", "b", "c", "d", "codeg-ac", "codeg-bd", "kind"), rows, args.out)
    if args.gamma_out:
        gamma, _ = thin_cycle_auxiliary(g, ThinCycleParams(args.tau))
        Path(args.gamma_out).write_text(serialize_graph(gamma))
    return 0


def _cmd_extremal(args):
    pattern = _load(args.pattern)
    budget = _budget(args)
    m = args.m if args.m is not None else args.n
    if args.mode == "general":
        report = extremal_number(args.n, pattern, budget)
    elif args.mode == "bip":
        report = bipartite_extremal_number(args.n, m, pattern, budget)
    else:
        if not isinstance(pattern, BipartiteGraph):
            raise CliError("zar mode needs a pattern with part labels")
        report = zarankiewicz_number(args.n, m, pattern, budget)
    row = (
        args.mode,
        args.n,
        m if args.mode != "general" else "",
        Path(args.pattern).stem,
        report.value,
        int(report.exact),
        report.nodes_explored,
        f"{report.elapsed:.3f}",
    )
    _csv(
        ("mode", "n", "m", "pattern", "value", "exact", "nodes", "seconds"),
        [row],
        args.out,
    )
    witness_path = args.witness_out
    if witness_path is None and args.out:
        witness_path = str(args.out) + ".witness.el"
    if witness_path:
        Path(witness_path).write_text(serialize_graph(report.witness))
    return 3 if report.budget_exhausted else 0


def _cmd_pipeline(args):
    outdir = Path(args.out_dir) if args.out_dir else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    if args.pipeline_kind == "glue":
        host = _load(args.host)
        h1 = _require_rooted(_load(args.h1), "--h1")
        h2 = _require_rooted(_load(args.h2), "--h2")
        trace = []
        result = find_glued_copy(
            host, h1, h2, fraction=args.fraction, seed=args.seed, trace=trace
        )
        for key, value in trace:
            print(f"{key}={value}")
        if isinstance(result, GlueFailure):
            print(f"result=failure stage={result.stage}")
            print(f"detail={result.detail}")
            return 1
        print("result=found")
        print("mapping=" + ",".join(map(str, result.mapping)))
        if outdir:
            pattern = constructions.glue(h1, h2)
            (outdir / "pattern.el").write_text(serialize_graph(pattern))
            copy_edges = [
                tuple(sorted((result.mapping[u], result.mapping[v])))
                for u, v in as_graph(pattern).edges()
            ]
            host_graph = as_graph(host)
            lines = [f"n {host_graph.n}"]
            lines += [f"{u} {v}" for u, v in sorted(copy_edges)]
            (outdir / "copy.el").write_text("\n".join(lines) + "\n")
        return 0
    # case2
    g = as_graph(_load(args.input))
    trace = case2_relation_pipeline(g, args.tau, args.ell)
    for key, value in trace.records:
        print(f"{key}={value}")
    if outdir:
        (outdir / "gamma.el").write_text(serialize_graph(trace.gamma))
        for i, copy in enumerate(trace.prism_copies):
            lines = [f"n {g.n}"]
            lines += [f"{u} {v}" for u, v in sorted(copy["edges"])]
            (outdir / f"prism{i}.el").write_text("\n".join(lines) + "\n")
    return 0


def _require_rooted(g, flag):
    if not isinstance(g, RootedGraph):
        raise CliError(f"{flag} needs a 'root' line")
    return g


def _cmd_verify(args):
    pattern = _load(args.pattern) if args.pattern else None
    try:
        report = run_suite(
            args.suite,
            pattern=pattern,
            n=args.n,
            seed=args.seed,
            count=args.count,
            budget=_budget(args),
        )
    except ValueError as err:
        raise CliError(str(err))
    rows = [(r.check_id, r.lhs, r.rhs, int(r.passed)) for r in report.rows]
    _csv(("check", "lhs", "rhs", "pass"), rows, args.out)
    if report.budget_exhausted:
        print("budget exhausted", file=sys.stderr)
        return 3
    failures = [r.check_id for r in report.rows if not r.passed]
    if failures:
        print("failed checks: " + ", ".join(failures), file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# Argument parsing


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="exgraph",
        description="Exact small-scale workbench for extremal graph problems.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("EXGRAPH_THREADS", "1")),
        help="accepted for interface stability; results never depend on it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a named graph family")
    p.add_argument("--family", required=True,
                   choices=["cycle", "path", "complete", "complete-bipartite",
                            "prism", "path-prism", "critical", "glued-prism",
                            "glued-prism-minus"])
    p.add_argument("--ell", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--sided", action="store_true",
                   help="emit part labels (bipartite families only)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="structural properties of a graph file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r", type=int, help="also test critical r-degeneracy")
    p.add_argument("--almost-regular", type=float, metavar="K",
                   help="also test max degree <= K * min degree")
    p.add_argument("--expect", action="append", metavar="NAME=VALUE",
                   help="exit 1 unless the property row matches")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("count", help="copy and homomorphism counts")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--pattern")
    p.add_argument("--hom-cycle", type=int, action="append", metavar="LEN")
    p.add_argument("--path-hom", type=int, nargs=3, metavar=("A", "B", "T"))
    p.add_argument("--codegree", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("census", help="4-cycles with diagonal codegrees")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--gamma-out", help="write the opposite-edge auxiliary graph")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("extremal", help="exact forbidden-subgraph maxima")
    p.add_argument("--mode", required=True, choices=["general", "bip", "zar"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--pattern", required=True)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--out")
    p.add_argument("--witness-out")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("pipeline", help="staged search procedures")
    kinds = p.add_subparsers(dest="pipeline_kind", required=True)
    pg = kinds.add_parser("glue", help="find a glued copy of two rooted patterns")
    pg.add_argument("--host", required=True)
    pg.add_argument("--h1", required=True)
    pg.add_argument("--h2", required=True)
    pg.add_argument("--fraction", type=int)
    pg.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pg.add_argument("--out-dir")
    pg.set_defaults(func=_cmd_pipeline)
    pc = kinds.add_parser("case2", help="thin-cycle relation measurements")
    pc.add_argument("--in", dest="input", required=True)
    pc.add_argument("--tau", type=int, required=True)
    pc.add_argument("--ell", type=int, required=True)
    pc.add_argument("--out-dir")
    pc.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("verify", help="batch property suites")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    p.add_argument("--pattern")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except GraphError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
