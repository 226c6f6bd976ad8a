"""Command-line interface.

Subcommands: compute, construct, verify, survey.  Exit codes: 0 success,
2 malformed input or parameters, 3 disconnected input graph, 4 a theorem
check failed.  All output is buffered and derived from sorted aggregates,
so identical invocations produce identical bytes regardless of --threads.
"""

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .constructions import (
    LabeledConstruction,
    cartesian_path,
    construct_F,
    construct_H,
    join,
    standard_family,
)
from .errors import BadParamsError, DisconnectedError, FormatError, GraphError
from .formats import parse_graph_text, write_edge_list, write_graph6
from .graph import Graph
from .resolver import edge_metric_dimension, metric_dimension, min_joint_cover
from .theorems import (
    FAILS,
    check_Fk_theorem,
    check_Hk_theorem,
    check_corollary_diam_triangle,
    check_edge_count_bound,
    check_join_K1_theorem,
    check_max_degree_lemmas,
    check_ncondition_theorem,
    check_product_theorem,
    check_vertex_count_bound,
    sweep_theorem,
)

SINGLE_CHECKS = {
    "ncondition": check_ncondition_theorem,
    "corollary": check_corollary_diam_triangle,
    "vertex_bound": check_vertex_count_bound,
    "edge_bound": check_edge_count_bound,
    "degree_lemmas": check_max_degree_lemmas,
    "join": check_join_K1_theorem,
}

THEOREM_IDS = (*SINGLE_CHECKS, "product", "fk", "hk")


def _build_from_tokens(tokens) -> LabeledConstruction | Graph:
    name, params = tokens[0], tokens[1:]
    try:
        ints = [int(p) for p in params]
    except ValueError:
        raise BadParamsError(f"construction parameters must be integers, got {params!r}")
    if name == "F":
        if len(ints) != 1:
            raise BadParamsError("F takes exactly one parameter k")
        return construct_F(ints[0])
    if name == "H":
        if len(ints) != 1:
            raise BadParamsError("H takes exactly one parameter k")
        return construct_H(ints[0])
    return standard_family(name, ints)


def _graph_of(obj) -> Graph:
    return obj.graph if isinstance(obj, LabeledConstruction) else obj


def _parse_spec(spec: str) -> Graph:
    """Inline graph spec: 'path:3', 'F:2', 'grid:3,4', or a file path."""
    if ":" in spec:
        name, _, rest = spec.partition(":")
        params = rest.split(",") if rest else []
        return _graph_of(_build_from_tokens([name, *params]))
    path = Path(spec)
    if path.exists():
        return parse_graph_text(path.read_text(), "auto")
    raise BadParamsError(f"graph spec {spec!r} is neither 'family:params' nor an existing file")


def _load_input(args) -> Graph:
    if getattr(args, "construct", None):
        return _graph_of(_build_from_tokens(args.construct))
    if getattr(args, "input", None):
        path = Path(args.input)
        if not path.exists():
            raise FormatError(f"input file {args.input!r} does not exist")
        return parse_graph_text(path.read_text(), args.format)
    raise BadParamsError("provide an input file or --construct")


def _sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _write_manifest(out_path: Path, command: list[str], input_digest: str, outputs: list[Path]) -> None:
    manifest = {
        "command": command,
        "input_digest": input_digest,
        "tool_version": __version__,
        "seed": None,
        "outputs": [
            {"path": p.name, "sha256": _sha256_bytes(p.read_bytes())} for p in outputs
        ],
    }
    out_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def cmd_compute(args) -> int:
    g = _load_input(args)
    want_all = args.all_bases
    lines = []
    if args.kind == "joint":
        k, (s, t) = min_joint_cover(g)
        lines.append(f"value: {k}")
        lines.append(f"vertex_basis: {list(s)}")
        lines.append(f"edge_basis: {list(t)}")
    else:
        solver = metric_dimension if args.kind == "dim" else edge_metric_dimension
        res = solver(g, want_all_bases=want_all)
        lines.append(f"value: {res.value}")
        lines.append(f"witness: {list(res.witness)}")
        if want_all:
            for basis in res.all_bases:
                lines.append(f"basis: {list(basis)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_construct(args) -> int:
    if args.what == "prod":
        if not args.g or args.m is None:
            raise BadParamsError("prod needs --g SPEC and --m M")
        obj = cartesian_path(_parse_spec(args.g), args.m)
    elif args.what == "join":
        if not args.g1 or not args.g2:
            raise BadParamsError("join needs --g1 SPEC and --g2 SPEC")
        obj = join(_parse_spec(args.g1), _parse_spec(args.g2))
    elif args.what == "family":
        if not args.params:
            raise BadParamsError("family needs a name and parameters")
        obj = _build_from_tokens(args.params)
    else:
        if len(args.params) != 1:
            raise BadParamsError(f"{args.what} takes exactly one parameter k")
        obj = _build_from_tokens([args.what, *args.params])
    g = _graph_of(obj)
    text = write_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g)
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        labels = (
            obj.labels
            if isinstance(obj, LabeledConstruction)
            else tuple(str(v) for v in range(g.n))
        )
        sidecar = out.with_name(out.name + ".labels.json")
        sidecar.write_text(
            json.dumps({str(i): lab for i, lab in enumerate(labels)}, indent=2, sort_keys=True)
            + "\n"
        )
        sys.stdout.write(f"wrote {out} (n={g.n}, m={g.m}) and {sidecar}\n")
    else:
        sys.stdout.write(text)
    return 0


def _verify_single(reports, report_path) -> int:
    lines = [r.to_record() for r in reports]
    holds = sum(1 for r in reports if r.verdict == "holds")
    fails = sum(1 for r in reports if r.verdict == FAILS)
    na = len(reports) - holds - fails
    lines.append(f"summary: {len(reports)} checked, {holds} holds, {fails} fails, {na} not_applicable")
    sys.stdout.write("\n".join(lines) + "\n")
    if report_path:
        doc = {
            "summary": {"checked": len(reports), "holds": holds, "fails": fails,
                        "not_applicable": na},
            "reports": [
                {"theorem_id": r.theorem_id, "graph": r.graph, "verdict": r.verdict,
                 "certificate": r.certificate}
                for r in reports
            ],
        }
        Path(report_path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 4 if fails else 0


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem in ("fk", "hk"):
        if args.kmax is None:
            raise BadParamsError(f"{theorem} needs --kmax")
        check = check_Fk_theorem if theorem == "fk" else check_Hk_theorem
        reports = [check(k) for k in range(1, args.kmax + 1)]
        return _verify_single(reports, args.report)
    if args.graph or args.g:
        g = _parse_spec(args.g) if args.g else parse_graph_text(Path(args.graph).read_text(), "auto")
        if theorem == "product":
            if args.m is None:
                raise BadParamsError("product needs --m M")
            reports = [check_product_theorem(g, args.m)]
        else:
            reports = [SINGLE_CHECKS[theorem](g)]
        return _verify_single(reports, args.report)
    if args.sweep is None:
        raise BadParamsError("provide --graph, --g, or --sweep")
    if theorem == "product" and args.m is None:
        raise BadParamsError("product needs --m M")
    summary = sweep_theorem(theorem, args.sweep, threads=args.threads, m=args.m or 2)
    lines = []
    for n, graphs, holds, fails, na in summary.per_n:
        lines.append(f"n={n}: {graphs} graphs, {holds} holds, {fails} fails, {na} not_applicable")
    for r in summary.failures:
        lines.append(r.to_record())
    verdict = "all hold" if summary.ok else f"{summary.fails} FAILURES"
    lines.append(
        f"summary: {summary.graphs} graphs, {summary.holds} holds, "
        f"{summary.fails} fails, {summary.not_applicable} not_applicable ({verdict})"
    )
    sys.stdout.write("\n".join(lines) + "\n")
    if args.report:
        doc = {
            "theorem_id": summary.theorem_id,
            "scope": {"sweep_n_max": args.sweep},
            "summary": {
                "graphs": summary.graphs, "holds": summary.holds,
                "fails": summary.fails, "not_applicable": summary.not_applicable,
            },
            "per_n": [
                {"n": n, "graphs": graphs, "holds": holds, "fails": fails, "not_applicable": na}
                for n, graphs, holds, fails, na in summary.per_n
            ],
            "failures": [
                {"theorem_id": r.theorem_id, "graph": r.graph, "verdict": r.verdict,
                 "certificate": r.certificate}
                for r in summary.failures
            ],
        }
        Path(args.report).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0 if summary.ok else 4


def cmd_survey(args) -> int:
    from .experiments import survey_triples

    rows = survey_triples(args.n, threads=args.threads)
    out_lines = ["n,dim,edim,count,example_graph6"]
    out_lines.extend(
        f"{r.n},{r.dim},{r.edim},{r.count},{r.example_graph6}" for r in rows
    )
    text = "\n".join(out_lines) + "\n"
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        digest = _sha256_bytes(f"survey:n={args.n}".encode())
        _write_manifest(
            out.with_name(out.name + ".manifest.json"),
            ["survey", str(args.n)],
            digest,
            [out],
        )
        sys.stdout.write(f"wrote {out} ({len(rows)} rows)\n")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="edimlab",
        description="Exact metric and edge metric dimension of small graphs.",
    )
    p.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="solve dim, edim, or the joint cover number")
    c.add_argument("kind", choices=["dim", "edim", "joint"])
    c.add_argument("input", nargs="?", help="graph file (edge list or graph6)")
    c.add_argument("--construct", nargs="+", metavar="TOKEN",
                   help="inline construction, e.g. --construct F 2")
    c.add_argument("--all-bases", action="store_true")
    c.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")
    c.set_defaults(fn=cmd_compute)

    b = sub.add_parser("construct", help="build a named graph and write it out")
    b.add_argument("what", choices=["F", "H", "join", "prod", "family"])
    b.add_argument("params", nargs="*", help="positional parameters, e.g. family cycle 5")
    b.add_argument("--g", help="factor graph spec for prod, e.g. path:3")
    b.add_argument("--g1", help="first join operand spec")
    b.add_argument("--g2", help="second join operand spec")
    b.add_argument("--m", type=int, help="number of path copies for prod")
    b.add_argument("-o", "--out", help="output file; stdout when omitted")
    b.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    b.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="run a theorem check on a graph, sweep, or k range")
    v.add_argument("theorem", choices=sorted(THEOREM_IDS))
    v.add_argument("--graph", help="graph file to check")
    v.add_argument("--g", help="inline graph spec, e.g. path:3")
    v.add_argument("--sweep", type=int, metavar="N_MAX",
                   help="check every labeled connected graph up to N_MAX vertices")
    v.add_argument("--kmax", type=int, help="for fk/hk: check k = 1..KMAX")
    v.add_argument("--m", type=int, help="path copies for the product theorem")
    v.add_argument("--report", help="write a JSON report document here")
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("survey", help="per-(dim, edim) census of connected graphs")
    s.add_argument("n", type=int)
    s.add_argument("-o", "--out", help="CSV output path; stdout when omitted")
    s.set_defaults(fn=cmd_survey)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
