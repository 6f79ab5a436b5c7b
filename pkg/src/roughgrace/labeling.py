"""Induced edge labels and the gracefulness verdict.

Vertex labels are non-negative even integers, pairwise distinct. Each edge
{u, v} of a graph with m edges gets the half-sum label

    induced(u, v) = s/2       if s is even
                    (s+1)/2   if s is odd,      s = label(u) + label(v) + m

i.e. ceil(s / 2). A labeling is graceful when all induced edge labels are
pairwise distinct. Because even vertex labels force s ≡ m (mod 2), every
edge of one graph takes the same branch; the functions below nevertheless
accept any non-negative integers so that deliberately ill-formed labelings
(odd labels) can still be evaluated and reported rather than rejected.

All arithmetic is plain Python integers: unbounded, never wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError, ParameterError
from .graph import Edge, RoughGraph

__all__ = [
    "VertexLabeling",
    "EdgeLabeling",
    "VerificationReport",
    "edge_sum",
    "induced_edge_label",
    "induce",
    "verify",
]


def edge_sum(label_u: int, label_v: int, m: int) -> int:
    """label(u) + label(v) + m, the quantity the edge label halves."""
    _check_args(label_u, label_v, m)
    return label_u + label_v + m


def induced_edge_label(label_u: int, label_v: int, m: int) -> int:
    """The half-sum rounded up: ceil((label_u + label_v + m) / 2)."""
    _check_args(label_u, label_v, m)
    s = label_u + label_v + m
    return s // 2 if s % 2 == 0 else (s + 1) // 2


def _check_args(label_u: int, label_v: int, m: int) -> None:
    if label_u < 0 or label_v < 0:
        raise ParameterError("vertex labels must be >= 0")
    if m < 1:
        raise ParameterError(f"edge count m must be >= 1, got {m}")


def _half_ceil(s: int) -> int:
    # total over all ints so ill-formed labelings still get verdicts
    return -(-s // 2)


@dataclass(frozen=True)
class VertexLabeling:
    """A map vertex id -> integer label.

    The graceful contract wants labels even, >= 0 and injective; those
    conditions are checked by :func:`verify` (which reports violations)
    rather than enforced here, so that ill-formed labelings remain
    representable and auditable.
    """

    assignment: Mapping[str, int]

    def __post_init__(self):
        clean = {}
        for vid, label in self.assignment.items():
            if isinstance(label, bool) or not isinstance(label, int):
                raise ParameterError(f"label of {vid!r} must be an integer")
            clean[str(vid)] = label
        object.__setattr__(self, "assignment", clean)

    def label(self, vid: str) -> int:
        try:
            return self.assignment[vid]
        except KeyError:
            raise DomainError(f"vertex {vid!r} has no label") from None

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class EdgeLabeling:
    """Edge labels induced from a vertex labeling; built by :func:`induce`.

    ``labels`` follows the graph's canonical edge order. ``graceful`` is
    the pairwise-distinctness verdict over the induced labels alone.
    """

    edges: tuple[Edge, ...]
    labels: tuple[int, ...]
    source: VertexLabeling
    m: int
    _by_edge: dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_edge", dict(zip(self.edges, self.labels)))

    @property
    def graceful(self) -> bool:
        return len(set(self.labels)) == len(self.labels)

    def label(self, edge: Edge) -> int:
        try:
            return self._by_edge[edge]
        except KeyError:
            raise DomainError(f"no label for edge {edge!r}") from None

    def as_dict(self) -> dict[Edge, int]:
        return dict(self._by_edge)


def induce(g: RoughGraph, f: VertexLabeling) -> EdgeLabeling:
    """Label every edge of ``g`` with the half-sum rule, m = g.m."""
    for vid in g.vertex_ids:
        if vid not in f.assignment:
            raise DomainError(f"vertex {vid!r} is unlabeled")
    for vid in f.assignment:
        g.position(vid)  # reject labels for unknown vertices
    if g.m == 0:
        return EdgeLabeling(edges=(), labels=(), source=f, m=0)
    labels = tuple(
        _half_ceil(f.label(u) + f.label(v) + g.m) for u, v in g.edges
    )
    return EdgeLabeling(edges=g.edges, labels=labels, source=f, m=g.m)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the three gracefulness checks, with every violation.

    (a) each label even and >= 0   -> bad_labels lists (vertex, label)
    (b) labels injective           -> duplicate_pairs lists (vertex, vertex)
    (c) induced labels distinct    -> colliding_edge_pairs lists (edge, edge)
    """

    bad_labels: tuple[tuple[str, int], ...]
    duplicate_pairs: tuple[tuple[str, str], ...]
    colliding_edge_pairs: tuple[tuple[Edge, Edge], ...]
    edge_labeling: EdgeLabeling

    @property
    def labels_even_ok(self) -> bool:
        return not self.bad_labels

    @property
    def injective_ok(self) -> bool:
        return not self.duplicate_pairs

    @property
    def edges_distinct_ok(self) -> bool:
        return not self.colliding_edge_pairs

    @property
    def passed(self) -> bool:
        return self.labels_even_ok and self.injective_ok and self.edges_distinct_ok


def verify(g: RoughGraph, f: VertexLabeling) -> VerificationReport:
    """Run all three checks; violations are verdicts, not exceptions."""
    bad = tuple(
        (vid, f.label(vid))
        for vid in g.vertex_ids
        if f.label(vid) < 0 or f.label(vid) % 2 != 0
    )
    dupes = []
    by_label: dict[int, list[str]] = {}
    for vid in g.vertex_ids:
        by_label.setdefault(f.label(vid), []).append(vid)
    for group in by_label.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                dupes.append((group[i], group[j]))
    el = induce(g, f)
    collisions = []
    by_edge_label: dict[int, list[Edge]] = {}
    for edge, label in zip(el.edges, el.labels):
        by_edge_label.setdefault(label, []).append(edge)
    for group in by_edge_label.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                collisions.append((group[i], group[j]))
    return VerificationReport(
        bad_labels=bad,
        duplicate_pairs=tuple(dupes),
        colliding_edge_pairs=tuple(collisions),
        edge_labeling=el,
    )
