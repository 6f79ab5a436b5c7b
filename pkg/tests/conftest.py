"""Shared test helpers: tiny graph builders and independent oracles.

The oracles here deliberately avoid the package's own search kernels:
``naive_count`` filters every injective assignment by direct evaluation
of the half-sum rule, and ``connected_graphs`` enumerates small graphs
up to isomorphism by brute-force canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from roughgrace import RoughGraph

ONE = Fraction(1)


def graph_on(k: int, edges: list[tuple[int, int]]) -> RoughGraph:
    """Graph with vertices x0..x{k-1} (weight 1) and 0-indexed edges."""
    return RoughGraph.build(
        [(f"x{i}", ONE) for i in range(k)],
        [(f"x{a}", f"x{b}") for a, b in edges],
    )


def induced(fu: int, fv: int, m: int) -> int:
    s = fu + fv + m
    return s // 2 if s % 2 == 0 else (s + 1) // 2


def naive_count(g: RoughGraph, pool: tuple[int, ...]) -> int:
    """Filter-all-permutations oracle for valid labelings within the pool."""
    ids = g.vertex_ids
    m = g.m
    count = 0
    for assignment in permutations(pool, len(ids)):
        f = dict(zip(ids, assignment))
        labels = [induced(f[u], f[v], m) for u, v in g.edges]
        if len(set(labels)) == len(labels):
            count += 1
    return count


def _is_connected(k: int, edges: frozenset[frozenset[int]]) -> bool:
    if k == 1:
        return True
    adj = {i: set() for i in range(k)}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == k


def _canonical(k: int, edges: frozenset[frozenset[int]]) -> tuple:
    best = None
    for perm in permutations(range(k)):
        mapped = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in (tuple(e) for e in edges)))
        if best is None or mapped < best:
            best = mapped
    return best


def connected_graphs(max_vertices: int) -> list[RoughGraph]:
    """All connected graphs with <= max_vertices vertices, one per iso class."""
    result = []
    for k in range(1, max_vertices + 1):
        all_pairs = list(combinations(range(k), 2))
        seen = set()
        for bits in range(1 << len(all_pairs)):
            edges = frozenset(
                frozenset(all_pairs[i]) for i in range(len(all_pairs)) if bits >> i & 1
            )
            if not _is_connected(k, edges):
                continue
            canon = _canonical(k, edges)
            if canon in seen:
                continue
            seen.add(canon)
            result.append(graph_on(k, list(canon)))
    return result
