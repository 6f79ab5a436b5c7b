"""Pure-Python depth-first search kernel.

Same contract as the compiled twin in _speedups.pyx; roughgrace.search
picks whichever is available at import time. Positions 0..n-1 are vertices
in search order; ``adj_start``/``adj`` form a CSR list of each position's
earlier-position neighbours, so an edge is checked exactly when its second
endpoint is placed. ``seen`` is a bitmap over induced edge labels;
``undo`` records the labels set at each level for backtracking.
"""

from __future__ import annotations

__all__ = ["find_first", "count_all"]


def _bitmap_size(pool, m) -> int:
    if not pool:
        return 2
    return (pool[-1] * 2 + m + 1) // 2 + 2


def find_first(n, adj_start, adj, pool, m, lo, hi):
    """First complete assignment in lexicographic pool order, or None.

    ``lo``/``hi`` restrict the pool indices tried at position 0, which is
    how parallel callers partition the tree.
    """
    pool_len = len(pool)
    used = bytearray(pool_len)
    assign = [0] * n
    seen = bytearray(_bitmap_size(pool, m))
    undo = [0] * adj_start[n]

    def dfs(k: int, lo_k: int, hi_k: int) -> bool:
        if k == n:
            return True
        base = adj_start[k]
        top = adj_start[k + 1]
        for pi in range(lo_k, hi_k):
            if used[pi]:
                continue
            lab = pool[pi]
            cnt = 0
            ok = True
            for idx in range(base, top):
                s = lab + assign[adj[idx]] + m
                el = (s + (s & 1)) >> 1
                if seen[el]:
                    ok = False
                    break
                seen[el] = 1
                undo[base + cnt] = el
                cnt += 1
            if ok:
                assign[k] = lab
                used[pi] = 1
                if dfs(k + 1, 0, pool_len):
                    return True
                used[pi] = 0
            for idx in range(cnt):
                seen[undo[base + idx]] = 0
        return False

    if dfs(0, lo, hi):
        return assign
    return None


def count_all(n, adj_start, adj, pool, m, lo, hi):
    """Number of complete valid assignments with position 0 in [lo, hi)."""
    pool_len = len(pool)
    used = bytearray(pool_len)
    assign = [0] * n
    seen = bytearray(_bitmap_size(pool, m))
    undo = [0] * adj_start[n]

    def dfs(k: int, lo_k: int, hi_k: int) -> int:
        if k == n:
            return 1
        base = adj_start[k]
        top = adj_start[k + 1]
        total = 0
        for pi in range(lo_k, hi_k):
            if used[pi]:
                continue
            lab = pool[pi]
            cnt = 0
            ok = True
            for idx in range(base, top):
                s = lab + assign[adj[idx]] + m
                el = (s + (s & 1)) >> 1
                if seen[el]:
                    ok = False
                    break
                seen[el] = 1
                undo[base + cnt] = el
                cnt += 1
            if ok:
                assign[k] = lab
                used[pi] = 1
                total += dfs(k + 1, 0, pool_len)
                used[pi] = 0
            for idx in range(cnt):
                seen[undo[base + idx]] = 0
        return total

    return dfs(0, lo, hi)
