"""Command-line interface.

One subcommand per invocation. Every command builds a primary document
(graph, labeling, report) plus a human-readable table; ``--format`` picks
the rendering, ``--out`` redirects it to a file (the table then still goes
to stdout unless ``--quiet``).

Exit codes:
    0  command succeeded and its verdict is pass/found
    1  command succeeded but the verdict is fail/none
    2  usage or parameter error (conflicting flags, bad values)
    3  parse error in an input file
    4  domain error (unknown ids, incoherent documents)
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Mapping, Sequence

from . import closed_form, families, formats, graph, labeling, rough, search
from .errors import DomainError, ParameterError, ParseError

GLYPH_MATCH = "✓"  # check mark
GLYPH_MISMATCH = "✗"  # ballot x
GLYPH_UNCOVERED = "~"

_FORMATS_BY_COMMAND = {
    "ingest": ("table", "json"),
    "build-graph": ("json", "table", "dot"),
    "generate": ("json", "table", "dot"),
    "label": ("json", "table", "dot"),
    "induce": ("json", "table", "dot"),
    "verify": ("table", "json"),
    "audit": ("table", "json"),
    "search": ("json", "table"),
    "export-dot": ("dot",),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roughgrace",
        description="Rough graphs and even-vertex half-sum graceful labelings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the primary document here")
    common.add_argument(
        "--format", choices=("json", "table", "dot"), help="rendering of the document"
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress stdout reporting"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[common], help="parse an information table")
    _add_table_args(p)

    p = sub.add_parser(
        "build-graph", parents=[common], help="information table to rough graph"
    )
    _add_table_args(p)
    p.add_argument(
        "--attrs", metavar="A,B,...", help="partition attributes (default: all condition attributes)"
    )

    p = sub.add_parser("generate", parents=[common], help="generate a graph family member")
    p.add_argument("family", choices=families.FAMILY_NAMES)
    p.add_argument("--n", type=int, required=True, metavar="K")
    p.add_argument(
        "--weights", metavar="W1,W2,...", help="vertex weights in vertex order (rationals)"
    )

    p = sub.add_parser("label", parents=[common], help="closed-form labeling for a family member")
    p.add_argument("family", choices=families.FAMILY_NAMES)
    p.add_argument("--n", type=int, required=True, metavar="K")
    p.add_argument("--mode", choices=("corrected", "literal"), default="corrected")

    p = sub.add_parser("induce", parents=[common], help="recompute induced edge labels")
    p.add_argument("labeling", metavar="LABELING.json")

    p = sub.add_parser("verify", parents=[common], help="run the three gracefulness checks")
    p.add_argument("labeling", metavar="LABELING.json")

    p = sub.add_parser("audit", parents=[common], help="claimed vs induced edge labels")
    p.add_argument("family", choices=families.FAMILY_NAMES)
    p.add_argument("--n", type=int, metavar="K")
    p.add_argument("--range", dest="range_", metavar="A..B", help="audit n = A..B inclusive")
    p.add_argument("--mode", choices=("corrected", "literal", "both"), default="corrected")

    p = sub.add_parser("search", parents=[common], help="exhaustive labeling search")
    p.add_argument("graph", metavar="GRAPH.json")
    p.add_argument("--cap", type=int, required=True, metavar="K", help="pool is {0,2,...,2K}")
    p.add_argument("--count-all", action="store_true", dest="count_all")
    p.add_argument("--parallel", type=int, default=1, metavar="THREADS")

    p = sub.add_parser("export-dot", parents=[common], help="DOT for a graph or labeling file")
    p.add_argument("input", metavar="FILE.json")

    return parser


def _add_table_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("csv", metavar="TABLE.csv")
    p.add_argument("--decision", metavar="NAME", help="flag a column as the decision attribute")
    p.add_argument("--target", metavar="ID,ID,...", help="explicit target object ids")
    p.add_argument(
        "--target-decision", dest="target_decision", metavar="ATTR=VALUE",
        help="target = objects whose attribute equals the value",
    )


def _split_csv(text: str) -> list[str]:
    # "" is an explicit empty list, not [""]
    return [part.strip() for part in text.split(",") if part.strip()]


def _ingest(args) -> tuple[rough.InformationSystem, frozenset[str]]:
    if (args.target is None) == (args.target_decision is None):
        raise ParameterError("specify exactly one of --target or --target-decision")
    decision = (args.decision,) if args.decision else ()
    system = formats.read_information_system(args.csv, decision=decision)
    if args.target is not None:
        target = formats.resolve_target(system, ids=_split_csv(args.target))
    else:
        attr, sep, value = args.target_decision.partition("=")
        if not sep or not attr:
            raise ParameterError("--target-decision needs the form ATTR=VALUE")
        target = formats.resolve_target(system, decision_eq=(attr.strip(), value.strip()))
    return system, target


def _membership_table(assignment: rough.MembershipAssignment) -> str:
    lines = ["object  membership"]
    for obj in assignment.order:
        w = assignment.value(obj)
        lines.append(f"{obj:<7} {formats.fraction_to_str(w)}")
    return "\n".join(lines)


def _labeling_table(doc: dict) -> str:
    lines = ["vertex  label"]
    for vid, lab in doc["vertex_labels"].items():
        lines.append(f"{vid:<7} {lab}")
    lines.append("")
    lines.append("edge         claimed  induced  ok")
    for row in doc["edge_labels"]:
        u, v = row["edge"]
        claimed = "-" if row["claimed"] is None else str(row["claimed"])
        if row["match"] is None:
            ok = GLYPH_UNCOVERED
        else:
            ok = GLYPH_MATCH if row["match"] else GLYPH_MISMATCH
        lines.append(f"{u}-{v:<10} {claimed:>7}  {row['induced']:>7}  {ok}")
    lines.append("")
    lines.append(f"m = {doc['m']}; graceful: {'yes' if doc['graceful'] else 'NO'}")
    return "\n".join(lines)


def _audit_doc(report: closed_form.AuditReport) -> dict:
    return {
        "family": report.family,
        "n": report.n,
        "mode": report.mode,
        "m": report.m,
        "rows": [
            {
                "edge": list(row.edge),
                "role": [row.role[0], row.role[1]],
                "claimed": row.claimed,
                "induced": row.induced,
                "match": row.match,
            }
            for row in report.rows
        ],
        "uncovered": [list(edge) for edge in report.uncovered],
        "discrepancies": report.discrepancies,
        "clean": report.clean,
    }


def _audit_table(report: closed_form.AuditReport) -> str:
    lines = [
        f"audit {report.family} n={report.n} mode={report.mode} (m={report.m})",
        "edge         role     claimed  induced  ok",
    ]
    for row in report.rows:
        u, v = row.edge
        glyph = GLYPH_MATCH if row.match else GLYPH_MISMATCH
        role = f"{row.role[0]}[{row.role[1]}]"
        lines.append(f"{u}-{v:<10} {role:<8} {row.claimed:>7}  {row.induced:>7}  {glyph}")
    for edge in report.uncovered:
        u, v = edge
        lines.append(f"{u}-{v:<10} {'-':<8} {'-':>7}  {'-':>7}  {GLYPH_UNCOVERED}")
    covered = len(report.rows)
    lines.append(
        f"discrepancies: {report.discrepancies}/{covered} covered edges; "
        f"uncovered: {len(report.uncovered)}"
    )
    return "\n".join(lines)


def _load_graph_and_labels(path: str) -> tuple[graph.RoughGraph, labeling.VertexLabeling, dict]:
    """Lenient labeling-document reader: needs graph + vertex_labels only."""
    doc = formats.read_json(path)
    if not isinstance(doc, dict) or "graph" not in doc or "vertex_labels" not in doc:
        raise ParseError(f"{path}: labeling document needs 'graph' and 'vertex_labels'")
    graph_part = doc["graph"]
    if isinstance(graph_part, str):
        graph_part = formats.read_json(Path(path).parent / graph_part)
    g = formats.graph_from_dict(graph_part)
    try:
        labels = {str(k): int(v) for k, v in doc["vertex_labels"].items()}
    except (TypeError, ValueError, AttributeError):
        raise ParseError(f"{path}: vertex_labels must map ids to integers") from None
    claimed: dict[graph.Edge, int] = {}
    for row in doc.get("edge_labels", []):
        if isinstance(row, dict) and row.get("claimed") is not None and "edge" in row:
            edge = g.canonical_edge(str(row["edge"][0]), str(row["edge"][1]))
            claimed[edge] = int(row["claimed"])
    return g, labeling.VertexLabeling(labels), claimed


def _graph_table(g: graph.RoughGraph, title: str) -> str:
    stats = graph.graph_stats(g)
    lines = [title, f"vertices: {stats.vertex_count}, edges: {stats.edge_count}"]
    lines.append("vertex  weight  degree")
    for vid in g.vertex_ids:
        lines.append(
            f"{vid:<7} {formats.fraction_to_str(g.weight(vid)):<7} {stats.degrees[vid]}"
        )
    return "\n".join(lines)


def _parse_weights(text: str, g: graph.RoughGraph) -> graph.RoughGraph:
    parts = _split_csv(text)
    if len(parts) != g.n:
        raise ParameterError(f"--weights needs {g.n} values, got {len(parts)}")
    mapping = {vid: formats.parse_fraction(p) for vid, p in zip(g.vertex_ids, parts)}
    return g.with_weights(mapping)


def _emit(args, rendered: Mapping[str, str], table: str | None) -> None:
    """Write/print per --out/--format/--quiet.

    ``rendered`` maps format name to rendered text for this command.
    """
    fmt = args.format or next(iter(rendered))
    if fmt not in rendered:
        raise ParameterError(
            f"--format {fmt} is not available for this command "
            f"(choose from {', '.join(rendered)})"
        )
    if args.out:
        Path(args.out).write_text(rendered[fmt], encoding="utf-8")
        if table is not None and not args.quiet:
            print(table)
    elif not args.quiet:
        print(rendered[fmt], end="" if rendered[fmt].endswith("\n") else "\n")


def _cmd_ingest(args) -> int:
    system, target = _ingest(args)
    doc = {
        "objects": list(system.objects),
        "attributes": list(system.attributes),
        "decision": sorted(system.decision),
        "target": sorted(target, key=system.objects.index),
    }
    table = "\n".join(
        [
            f"objects ({len(system.objects)}): {', '.join(system.objects)}",
            f"condition attributes: {', '.join(system.condition_attributes)}",
            f"decision attributes: {', '.join(sorted(system.decision)) or '-'}",
            f"target ({len(target)}): {', '.join(doc['target']) or '-'}",
        ]
    )
    _emit(args, {"table": table, "json": formats.dump_json(doc)}, table)
    return 0


def _cmd_build_graph(args) -> int:
    system, target = _ingest(args)
    attrs = _split_csv(args.attrs) if args.attrs is not None else system.condition_attributes
    partition = rough.partition_by_attributes(system, attrs)
    assignment = rough.assign_memberships(partition, target, order=system.objects)
    g = graph.build_rough_graph(assignment)
    doc = formats.graph_to_dict(g)
    table = _membership_table(assignment) + "\n\n" + _graph_table(g, "rough graph")
    _emit(
        args,
        {"json": formats.dump_json(doc), "table": table, "dot": formats.to_dot(g)},
        table,
    )
    return 0


def _cmd_generate(args) -> int:
    inst = families.make_family(args.family, args.n)
    g = inst.graph
    if args.weights is not None:
        g = _parse_weights(args.weights, g)
    doc = formats.graph_to_dict(g)
    table = _graph_table(g, f"{args.family} n={args.n}")
    _emit(
        args,
        {"json": formats.dump_json(doc), "table": table, "dot": formats.to_dot(g)},
        table,
    )
    return 0


def _cmd_label(args) -> int:
    inst = families.make_family(args.family, args.n)
    f, claimed = closed_form.closed_form_labeling(
        args.family, args.n, corrected=(args.mode == "corrected")
    )
    doc = formats.labeling_document(inst.graph, f, claimed)
    table = _labeling_table(doc)
    el = labeling.induce(inst.graph, f)
    _emit(
        args,
        {
            "json": formats.dump_json(doc),
            "table": table,
            "dot": formats.to_dot(inst.graph, el.as_dict()),
        },
        table,
    )
    return 0 if doc["graceful"] else 1


def _cmd_induce(args) -> int:
    g, f, claimed = _load_graph_and_labels(args.labeling)
    doc = formats.labeling_document(g, f, claimed if claimed else None)
    table = _labeling_table(doc)
    el = labeling.induce(g, f)
    _emit(
        args,
        {
            "json": formats.dump_json(doc),
            "table": table,
            "dot": formats.to_dot(g, el.as_dict()),
        },
        table,
    )
    return 0 if doc["graceful"] else 1


def _cmd_verify(args) -> int:
    g, f, _ = _load_graph_and_labels(args.labeling)
    report = labeling.verify(g, f)
    doc = {
        "labels_even": report.labels_even_ok,
        "injective": report.injective_ok,
        "edges_distinct": report.edges_distinct_ok,
        "passed": report.passed,
        "bad_labels": [[vid, lab] for vid, lab in report.bad_labels],
        "duplicate_pairs": [[a, b] for a, b in report.duplicate_pairs],
        "colliding_edge_pairs": [
            [list(e1), list(e2)] for e1, e2 in report.colliding_edge_pairs
        ],
    }
    lines = [
        f"labels even and >= 0:        {'ok' if report.labels_even_ok else 'FAIL'}",
        f"vertex labels injective:     {'ok' if report.injective_ok else 'FAIL'}",
        f"induced edge labels distinct: {'ok' if report.edges_distinct_ok else 'FAIL'}",
    ]
    for vid, lab in report.bad_labels:
        lines.append(f"  bad label: {vid} = {lab}")
    for a, b in report.duplicate_pairs:
        lines.append(f"  duplicate label: {a}, {b}")
    for e1, e2 in report.colliding_edge_pairs:
        lines.append(
            f"  colliding edges: {e1[0]}-{e1[1]} and {e2[0]}-{e2[1]} "
            f"(induced {report.edge_labeling.label(e1)})"
        )
    lines.append(f"verdict: {'graceful' if report.passed else 'not graceful'}")
    table = "\n".join(lines)
    _emit(args, {"table": table, "json": formats.dump_json(doc)}, table)
    return 0 if report.passed else 1


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ParameterError(f"--range needs the form A..B, got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise ParameterError(f"--range bounds must be integers, got {text!r}") from None
    if a > b:
        raise ParameterError(f"--range is empty: {text!r}")
    return a, b


def _cmd_audit(args) -> int:
    if (args.n is None) == (args.range_ is None):
        raise ParameterError("specify exactly one of --n or --range")
    if args.n is not None:
        ns = [args.n]
    else:
        a, b = _parse_range(args.range_)
        ns = list(range(a, b + 1))

    def one(n: int) -> tuple[closed_form.AuditReport, ...]:
        if args.mode == "both":
            return closed_form.audit_variants(args.family, n)
        return (closed_form.audit_family(args.family, n, args.mode),)

    if len(ns) == 1:
        grouped = [one(ns[0])]
    else:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=min(8, len(ns))) as pool:
            grouped = list(pool.map(one, ns))
    reports = [report for group in grouped for report in group]
    doc = {"reports": [_audit_doc(r) for r in reports]}
    table = "\n\n".join(_audit_table(r) for r in reports)
    _emit(args, {"table": table, "json": formats.dump_json(doc)}, table)
    return 0 if all(r.discrepancies == 0 for r in reports) else 1


def _cmd_search(args) -> int:
    g = formats.graph_from_dict(formats.read_json(args.graph))
    cfg = search.SearchConfig(
        cap=args.cap,
        mode="count" if args.count_all else "first",
        threads=args.parallel,
    )
    if args.count_all:
        count = search.count_labelings(g, cfg)
        doc = {"mode": "count", "cap": args.cap, "pool": list(cfg.pool), "count": count}
        table = f"valid labelings within pool {{0,2,...,{2 * args.cap}}}: {count}"
        _emit(args, {"json": formats.dump_json(doc), "table": table}, table)
        return 0 if count > 0 else 1
    result = search.search_labeling(g, cfg)
    if result.found is None:
        doc = {
            "mode": "first",
            "cap": args.cap,
            "pool": list(cfg.pool),
            "found": False,
        }
        table = f"no graceful labeling within pool {{0,2,...,{2 * args.cap}}}"
        _emit(args, {"json": formats.dump_json(doc), "table": table}, table)
        return 1
    doc = formats.labeling_document(g, result.found)
    table = _labeling_table(doc)
    _emit(args, {"json": formats.dump_json(doc), "table": table}, table)
    return 0


def _cmd_export_dot(args) -> int:
    doc = formats.read_json(args.input)
    if isinstance(doc, dict) and "vertex_labels" in doc and "graph" in doc:
        g, f, _ = _load_graph_and_labels(args.input)
        el = labeling.induce(g, f)
        dot = formats.to_dot(g, el.as_dict())
    else:
        dot = formats.to_dot(formats.graph_from_dict(doc))
    _emit(args, {"dot": dot}, None)
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "build-graph": _cmd_build_graph,
    "generate": _cmd_generate,
    "label": _cmd_label,
    "induce": _cmd_induce,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "search": _cmd_search,
    "export-dot": _cmd_export_dot,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 2 on usage error, 0 on --help
        return int(exc.code or 0)
    if args.format is not None and args.format not in _FORMATS_BY_COMMAND[args.command]:
        print(
            f"error: --format {args.format} is not valid for {args.command}",
            file=sys.stderr,
        )
        return 2
    try:
        return _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
