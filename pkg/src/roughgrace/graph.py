"""Weighted-vertex graphs and the max-membership edge rule.

A rough graph keeps every universe object as a vertex (weight = its
membership value, an exact Fraction in [0, 1]) and joins a pair of distinct
vertices whenever at least one endpoint has positive weight. Consequently
positive-weight vertices form a clique and zero-weight vertices attach to
exactly the positive ones; a graph with all-zero weights has no edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import DomainError, ParameterError
from .rough import MembershipAssignment

__all__ = ["Edge", "RoughGraph", "build_rough_graph", "graph_stats", "GraphStats"]

Edge = tuple[str, str]


@dataclass(frozen=True)
class RoughGraph:
    """Immutable simple graph with per-vertex rational weights.

    ``vertex_ids`` fixes the canonical vertex order; an edge is stored with
    its lower-index endpoint first and the edge tuple sorted the same way,
    so equal graphs serialize byte-identically.
    """

    vertex_ids: tuple[str, ...]
    weights: tuple[Fraction, ...]
    edges: tuple[Edge, ...]
    _pos: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.vertex_ids:
            raise ParameterError("graph needs at least one vertex")
        if len(set(self.vertex_ids)) != len(self.vertex_ids):
            raise ParameterError("vertex identifiers must be unique")
        if len(self.weights) != len(self.vertex_ids):
            raise ParameterError("one weight per vertex required")
        for vid, w in zip(self.vertex_ids, self.weights):
            if not isinstance(w, Fraction) or not 0 <= w <= 1:
                raise ParameterError(f"weight of {vid!r} must be a Fraction in [0, 1]")
        pos = {vid: i for i, vid in enumerate(self.vertex_ids)}
        object.__setattr__(self, "_pos", pos)
        canon = []
        seen = set()
        for u, v in self.edges:
            if u not in pos or v not in pos:
                raise DomainError(f"edge ({u!r}, {v!r}) references an undeclared vertex")
            if u == v:
                raise ParameterError(f"self-loop on {u!r}")
            e = (u, v) if pos[u] < pos[v] else (v, u)
            if e in seen:
                raise ParameterError(f"duplicate edge {e!r}")
            seen.add(e)
            canon.append(e)
        canon.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def build(cls, vertices: Iterable[tuple[str, Fraction]], edges: Iterable[Edge]) -> "RoughGraph":
        vertices = list(vertices)
        return cls(
            vertex_ids=tuple(v for v, _ in vertices),
            weights=tuple(w for _, w in vertices),
            edges=tuple(edges),
        )

    @property
    def m(self) -> int:
        """Edge count; by immutability always consistent with ``edges``."""
        return len(self.edges)

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    def weight(self, vid: str) -> Fraction:
        return self.weights[self.position(vid)]

    def position(self, vid: str) -> int:
        try:
            return self._pos[vid]
        except KeyError:
            raise DomainError(f"vertex {vid!r} is not in the graph") from None

    def canonical_edge(self, u: str, v: str) -> Edge:
        return (u, v) if self.position(u) < self.position(v) else (v, u)

    def has_edge(self, u: str, v: str) -> bool:
        return self.canonical_edge(u, v) in set(self.edges)

    def degrees(self) -> dict[str, int]:
        deg = {vid: 0 for vid in self.vertex_ids}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def with_weights(self, weights: Mapping[str, Fraction]) -> "RoughGraph":
        """Copy with some vertex weights replaced; edges are untouched."""
        for vid in weights:
            self.position(vid)
        new = tuple(weights.get(vid, w) for vid, w in zip(self.vertex_ids, self.weights))
        return RoughGraph(self.vertex_ids, new, self.edges)


class GraphStats(NamedTuple):
    vertex_count: int
    edge_count: int
    degrees: dict[str, int]


def build_rough_graph(memberships: MembershipAssignment) -> RoughGraph:
    """Apply the max-membership rule to every unordered pair.

    Vertices are the universe in the assignment's order; {u, v} is an edge
    iff max(weight(u), weight(v)) > 0.
    """
    order = memberships.order
    weights = [memberships.value(o) for o in order]
    edges = []
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if max(weights[i], weights[j]) > 0:
                edges.append((order[i], order[j]))
    return RoughGraph(tuple(order), tuple(weights), tuple(edges))


def graph_stats(g: RoughGraph) -> GraphStats:
    return GraphStats(g.n, g.m, g.degrees())
