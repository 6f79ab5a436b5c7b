"""Exhaustive backtracking search for graceful even-vertex labelings.

This is the independent oracle for small instances: it assigns labels from
a finite even pool {0, 2, ..., 2*cap} to vertices in a fixed order
(degree-descending, id tiebreak), pruning on label reuse and on induced
edge-label collisions among fully placed edges. Exhaustion without a hit
certifies *none-within-pool*; it never claims nonexistence beyond the pool.

Two interchangeable kernels implement the inner loop: a compiled extension
(roughgrace._speedups, built from Cython) and a pure-Python fallback
(roughgrace._search_py). Import-time selection prefers the compiled one;
set ROUGHGRACE_PURE_PYTHON=1 to force the fallback, or pass
``kernel="pure"``/``kernel="compiled"`` explicitly. Results are identical;
benchmarks/bench_search.py measures the gap.

The search tree is partitioned by the first position's pool index, so
``threads > 1`` explores chunks concurrently and merges deterministically:
counts are summed, and the first solution is the one lowest in
lexicographic assignment order, exactly as in a sequential run.
"""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from . import _search_py
from .errors import ParameterError
from .graph import RoughGraph
from .labeling import VertexLabeling

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

__all__ = [
    "SearchConfig",
    "SearchResult",
    "search_order",
    "search_labeling",
    "count_labelings",
    "automorphism_count",
    "active_kernel_name",
    "available_kernels",
]

MODES = ("first", "count", "prove-none")

# Keep C arithmetic far from long long overflow and the label bitmap sane.
_MAX_LABEL = 2**60
_MAX_BITMAP = 2**26


def available_kernels() -> tuple[str, ...]:
    return ("compiled", "pure") if _speedups is not None else ("pure",)


def _default_kernel():
    if os.environ.get("ROUGHGRACE_PURE_PYTHON") == "1" or _speedups is None:
        return _search_py
    return _speedups


def _kernel(name: str | None):
    if name is None:
        return _default_kernel()
    if name == "pure":
        return _search_py
    if name == "compiled":
        if _speedups is None:
            raise ParameterError("compiled kernel is not available in this build")
        return _speedups
    raise ParameterError(f"unknown kernel {name!r}; use 'compiled' or 'pure'")


def active_kernel_name() -> str:
    return "compiled" if _default_kernel() is _speedups else "pure"


@dataclass(frozen=True)
class SearchConfig:
    """Pool and strategy for one search.

    The pool is {0, 2, ..., 2*cap}, or {2, ..., 2*cap} without zero; an
    injective assignment needs pool size >= vertex count. The vertex order
    is fixed policy (degree-descending, id tiebreak), not configurable.
    ``modulo_automorphisms`` applies to counting only and divides the raw
    count by the graph's automorphism count (valid because injective
    labelings have trivial stabilizers).
    """

    cap: int
    mode: str = "first"
    include_zero: bool = True
    threads: int = 1
    modulo_automorphisms: bool = False

    def __post_init__(self):
        if self.cap < 1:
            raise ParameterError(f"cap must be >= 1, got {self.cap}")
        if self.mode not in MODES:
            raise ParameterError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.threads < 1:
            raise ParameterError(f"threads must be >= 1, got {self.threads}")

    @property
    def pool(self) -> tuple[int, ...]:
        start = 0 if self.include_zero else 2
        return tuple(range(start, 2 * self.cap + 1, 2))


@dataclass(frozen=True)
class SearchResult:
    mode: str
    found: VertexLabeling | None = None
    count: int | None = None

    @property
    def none_within_pool(self) -> bool:
        """Certified: no valid assignment exists inside the configured pool."""
        if self.mode == "count":
            return self.count == 0
        return self.found is None


def search_order(g: RoughGraph) -> tuple[str, ...]:
    deg = g.degrees()
    return tuple(sorted(g.vertex_ids, key=lambda v: (-deg[v], v)))


def _prepare(g: RoughGraph, pool: tuple[int, ...]):
    """CSR adjacency toward earlier search positions, as C-typed arrays."""
    order = search_order(g)
    pos = {vid: i for i, vid in enumerate(order)}
    earlier: list[list[int]] = [[] for _ in order]
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        earlier[j].append(i)
    adj_start = array("i", [0])
    adj = array("i", [])
    for neigh in earlier:
        adj.extend(sorted(neigh))
        adj_start.append(len(adj))
    return order, adj_start, adj, array("q", pool)


def _validate(g: RoughGraph, cfg: SearchConfig, require_edge: bool) -> None:
    pool = cfg.pool
    if not pool:
        raise ParameterError("label pool is empty")
    if require_edge and g.m == 0:
        raise ParameterError("graph has no edges to label")
    if len(pool) < g.n:
        raise ParameterError(
            f"pool of {len(pool)} labels cannot injectively cover {g.n} vertices; "
            "raise cap"
        )
    if pool[-1] > _MAX_LABEL or g.m > _MAX_LABEL:
        raise ParameterError("labels too large for the search kernel")
    if pool[-1] + (g.m + 1) // 2 > _MAX_BITMAP:
        raise ParameterError("cap too large: edge-label bitmap would be excessive")


def _chunks(pool_len: int, threads: int) -> list[tuple[int, int]]:
    k = min(threads, pool_len)
    step, extra = divmod(pool_len, k)
    bounds = []
    lo = 0
    for i in range(k):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def search_labeling(
    g: RoughGraph, cfg: SearchConfig, kernel: str | None = None
) -> SearchResult:
    """First graceful labeling in lexicographic order, or none-within-pool."""
    _validate(g, cfg, require_edge=True)
    mode = "first" if cfg.mode == "count" else cfg.mode
    order, adj_start, adj, pool = _prepare(g, cfg.pool)
    kern = _kernel(kernel)
    pool_len = len(pool)
    if cfg.threads == 1 or pool_len <= 1:
        raw = kern.find_first(g.n, adj_start, adj, pool, g.m, 0, pool_len)
    else:
        raw = None
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool_exec:
            futures = [
                pool_exec.submit(kern.find_first, g.n, adj_start, adj, pool, g.m, lo, hi)
                for lo, hi in _chunks(pool_len, cfg.threads)
            ]
            # Chunks are ordered by first-position label, so the first hit
            # in submission order is the global lexicographic first.
            for fut in futures:
                result = fut.result()
                if raw is None and result is not None:
                    raw = result
    if raw is None:
        return SearchResult(mode=mode, found=None)
    return SearchResult(mode=mode, found=VertexLabeling(dict(zip(order, raw))))


def count_labelings(g: RoughGraph, cfg: SearchConfig, kernel: str | None = None) -> int:
    """Exhaustive count of valid assignments within the pool.

    Edgeless graphs are allowed (every injective assignment counts). With
    ``modulo_automorphisms`` the raw count is divided by |Aut(g)|.
    """
    _validate(g, cfg, require_edge=False)
    order, adj_start, adj, pool = _prepare(g, cfg.pool)
    kern = _kernel(kernel)
    pool_len = len(pool)
    if cfg.threads == 1 or pool_len <= 1:
        total = kern.count_all(g.n, adj_start, adj, pool, g.m, 0, pool_len)
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool_exec:
            futures = [
                pool_exec.submit(kern.count_all, g.n, adj_start, adj, pool, g.m, lo, hi)
                for lo, hi in _chunks(pool_len, cfg.threads)
            ]
            total = sum(fut.result() for fut in futures)
    total = int(total)
    if cfg.modulo_automorphisms:
        aut = automorphism_count(g)
        quotient, remainder = divmod(total, aut)
        if remainder:
            raise ParameterError(
                f"count {total} not divisible by automorphism count {aut}"
            )
        return quotient
    return total


def automorphism_count(g: RoughGraph, limit: int = 9) -> int:
    """|Aut(g)| by brute force over vertex permutations (small graphs only)."""
    if g.n > limit:
        raise ParameterError(f"automorphism counting supports at most {limit} vertices")
    idx = {vid: i for i, vid in enumerate(g.vertex_ids)}
    edges = {frozenset((idx[u], idx[v])) for u, v in g.edges}
    pairs = [tuple(e) for e in edges]
    count = 0
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[a], perm[b])) in edges for a, b in pairs):
            count += 1
    return count
