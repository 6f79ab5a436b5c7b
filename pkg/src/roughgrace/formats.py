"""File formats: information-table CSV, graph/labeling JSON, DOT export.

All serialization is canonical and timestamp-free so identical inputs give
byte-identical outputs. Weights travel as exact "p/q" strings; JSON uses
two-space indentation with keys in fixed construction order.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple

from .errors import DomainError, ParseError
from .graph import Edge, RoughGraph
from .labeling import VertexLabeling, induce, verify
from .rough import InformationSystem

__all__ = [
    "read_information_system",
    "resolve_target",
    "fraction_to_str",
    "parse_fraction",
    "graph_to_dict",
    "graph_from_dict",
    "labeling_document",
    "ParsedLabeling",
    "parse_labeling_document",
    "recheck_labeling",
    "to_dot",
    "dump_json",
    "read_json",
    "write_json",
]


def read_information_system(path: str | Path, decision: Iterable[str] = ()) -> InformationSystem:
    """Parse the CSV table format: header ``id,<attr>,...``, one row per object.

    Values are trimmed and kept as opaque strings. Errors carry the
    offending 1-based line number.
    """
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8-sig") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    if not rows:
        raise ParseError(f"{path}: empty file")
    header = [cell.strip() for cell in rows[0]]
    if not header or header[0] != "id":
        raise ParseError(f"{path}: first header column must be 'id'", line=1)
    if len(header) < 2:
        raise ParseError(f"{path}: no attribute columns", line=1)
    attributes = tuple(header[1:])
    objects: list[str] = []
    values: dict[str, dict[str, str]] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(
                f"{path}: expected {len(header)} cells, got {len(row)}", line=lineno
            )
        obj = row[0].strip()
        if not obj:
            raise ParseError(f"{path}: empty object id", line=lineno)
        if obj in values:
            raise ParseError(f"{path}: duplicate object id {obj!r}", line=lineno)
        objects.append(obj)
        values[obj] = {attr: cell.strip() for attr, cell in zip(attributes, row[1:])}
    if not objects:
        raise ParseError(f"{path}: no data rows")
    return InformationSystem(
        objects=tuple(objects),
        attributes=attributes,
        values=values,
        decision=frozenset(decision),
    )


def resolve_target(
    system: InformationSystem,
    ids: Iterable[str] | None = None,
    decision_eq: tuple[str, str] | None = None,
) -> frozenset[str]:
    """Target set from explicit ids, or from ``attribute = value`` selection."""
    if (ids is None) == (decision_eq is None):
        raise DomainError("specify exactly one of explicit ids or a decision selector")
    if ids is not None:
        target = frozenset(ids)
        unknown = target - set(system.objects)
        if unknown:
            raise DomainError(f"unknown target ids: {sorted(unknown)}")
        return target
    attr, value = decision_eq
    return system.objects_where(attr, value)


def fraction_to_str(w: Fraction) -> str:
    return f"{w.numerator}/{w.denominator}"


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, _, den = text.partition("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def graph_to_dict(g: RoughGraph) -> dict:
    return {
        "vertices": [
            {"id": vid, "weight": fraction_to_str(w)}
            for vid, w in zip(g.vertex_ids, g.weights)
        ],
        "edges": [[u, v] for u, v in g.edges],
    }


def graph_from_dict(d: dict) -> RoughGraph:
    if not isinstance(d, dict) or "vertices" not in d or "edges" not in d:
        raise ParseError("graph document needs 'vertices' and 'edges'")
    vertices = []
    for entry in d["vertices"]:
        if not isinstance(entry, dict) or "id" not in entry or "weight" not in entry:
            raise ParseError(f"bad vertex entry: {entry!r}")
        vertices.append((str(entry["id"]), parse_fraction(str(entry["weight"]))))
    edges = []
    for pair in d["edges"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"bad edge entry: {pair!r}")
        edges.append((str(pair[0]), str(pair[1])))
    return RoughGraph.build(vertices, edges)


def labeling_document(
    g: RoughGraph,
    f: VertexLabeling,
    claimed: Mapping[Edge, int] | None = None,
) -> dict:
    """Self-contained labeling record: graph, labels, per-edge comparison.

    ``graceful`` is the full verdict (even labels, injective, distinct
    induced edge labels). ``claimed``/``match`` are null on edges without
    a closed-form claim.
    """
    report = verify(g, f)
    el = report.edge_labeling
    edge_rows = []
    for edge in g.edges:
        row: dict = {"edge": list(edge), "induced": el.label(edge)}
        if claimed is not None and edge in claimed:
            row["claimed"] = claimed[edge]
            row["match"] = claimed[edge] == el.label(edge)
        else:
            row["claimed"] = None
            row["match"] = None
        edge_rows.append(row)
    return {
        "graph": graph_to_dict(g),
        "vertex_labels": {vid: f.label(vid) for vid in g.vertex_ids},
        "edge_labels": edge_rows,
        "m": g.m,
        "graceful": report.passed,
    }


class ParsedLabeling(NamedTuple):
    graph: RoughGraph
    vertex_labels: VertexLabeling
    claimed: dict[Edge, int]
    stored_induced: dict[Edge, int]
    stored_m: int
    stored_graceful: bool


def parse_labeling_document(d: dict, base_dir: str | Path = ".") -> ParsedLabeling:
    """Decode a labeling document; ``graph`` may be inline or a file path."""
    for key in ("graph", "vertex_labels", "edge_labels", "m", "graceful"):
        if not isinstance(d, dict) or key not in d:
            raise ParseError(f"labeling document missing {key!r}")
    graph_part = d["graph"]
    if isinstance(graph_part, str):
        graph_part = read_json(Path(base_dir) / graph_part)
    g = graph_from_dict(graph_part)
    try:
        labels = {str(k): int(v) for k, v in d["vertex_labels"].items()}
    except (TypeError, ValueError, AttributeError):
        raise ParseError("vertex_labels must map ids to integers") from None
    claimed: dict[Edge, int] = {}
    stored: dict[Edge, int] = {}
    for row in d["edge_labels"]:
        if not isinstance(row, dict) or "edge" not in row or "induced" not in row:
            raise ParseError(f"bad edge_labels row: {row!r}")
        edge = g.canonical_edge(str(row["edge"][0]), str(row["edge"][1]))
        stored[edge] = int(row["induced"])
        if row.get("claimed") is not None:
            claimed[edge] = int(row["claimed"])
    return ParsedLabeling(
        graph=g,
        vertex_labels=VertexLabeling(labels),
        claimed=claimed,
        stored_induced=stored,
        stored_m=int(d["m"]),
        stored_graceful=bool(d["graceful"]),
    )


def recheck_labeling(parsed: ParsedLabeling):
    """Recompute induced labels and compare with the stored ones.

    Returns the fresh VerificationReport; stored/recomputed divergence is
    a corrupted document, reported as a DomainError.
    """
    g = parsed.graph
    if parsed.stored_m != g.m:
        raise DomainError(f"stored m={parsed.stored_m} but graph has {g.m} edges")
    report = verify(g, parsed.vertex_labels)
    el = report.edge_labeling
    for edge in g.edges:
        got = el.label(edge)
        if parsed.stored_induced.get(edge) != got:
            raise DomainError(
                f"stored induced label for {edge} is {parsed.stored_induced.get(edge)}, "
                f"recomputed {got}"
            )
    if parsed.stored_graceful != report.passed:
        raise DomainError(
            f"stored graceful={parsed.stored_graceful} but recomputed {report.passed}"
        )
    return report


def to_dot(g: RoughGraph, edge_labels: Mapping[Edge, int] | None = None) -> str:
    """Undirected DOT, canonically ordered; vertex label is ``id (weight)``."""
    lines = ["graph G {"]
    for vid, w in zip(g.vertex_ids, g.weights):
        lines.append(f'  "{vid}" [label="{vid} ({fraction_to_str(w)})"];')
    for u, v in g.edges:
        if edge_labels is not None and (u, v) in edge_labels:
            lines.append(f'  "{u}" -- "{v}" [label="{edge_labels[(u, v)]}"];')
        else:
            lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def read_json(path: str | Path) -> dict:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(dump_json(obj), encoding="utf-8")
