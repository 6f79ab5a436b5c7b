# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-first search kernel; contract mirrors _search_py.

The recursion runs without the GIL, so thread pools get real parallelism
when they partition the tree by the first position's pool index.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

__all__ = ["find_first", "count_all"]


cdef bint _dfs_first(Py_ssize_t k, Py_ssize_t n, Py_ssize_t lo, Py_ssize_t hi,
                     const int[:] adj_start, const int[:] adj,
                     const long long[:] pool, Py_ssize_t pool_len,
                     long long m, unsigned char *used, long long *assign,
                     unsigned char *seen, long long *undo) nogil:
    cdef Py_ssize_t pi, idx, cnt, base, top
    cdef long long lab, s, el
    cdef bint ok
    if k == n:
        return True
    base = adj_start[k]
    top = adj_start[k + 1]
    for pi in range(lo, hi):
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
            if _dfs_first(k + 1, n, 0, pool_len, adj_start, adj, pool,
                          pool_len, m, used, assign, seen, undo):
                return True
            used[pi] = 0
        for idx in range(cnt):
            seen[undo[base + idx]] = 0
    return False


cdef unsigned long long _dfs_count(Py_ssize_t k, Py_ssize_t n, Py_ssize_t lo,
                                   Py_ssize_t hi,
                                   const int[:] adj_start, const int[:] adj,
                                   const long long[:] pool, Py_ssize_t pool_len,
                                   long long m, unsigned char *used,
                                   long long *assign, unsigned char *seen,
                                   long long *undo) nogil:
    cdef Py_ssize_t pi, idx, cnt, base, top
    cdef long long lab, s, el
    cdef bint ok
    cdef unsigned long long total = 0
    if k == n:
        return 1
    base = adj_start[k]
    top = adj_start[k + 1]
    for pi in range(lo, hi):
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
            total += _dfs_count(k + 1, n, 0, pool_len, adj_start, adj, pool,
                                pool_len, m, used, assign, seen, undo)
            used[pi] = 0
        for idx in range(cnt):
            seen[undo[base + idx]] = 0
    return total


cdef struct _Buffers:
    unsigned char *used
    long long *assign
    unsigned char *seen
    long long *undo


cdef bint _alloc(_Buffers *b, Py_ssize_t pool_len, Py_ssize_t n,
                 Py_ssize_t seen_size, Py_ssize_t undo_size):
    b.used = <unsigned char *> PyMem_Malloc(max(pool_len, 1))
    b.assign = <long long *> PyMem_Malloc(max(n, 1) * sizeof(long long))
    b.seen = <unsigned char *> PyMem_Malloc(seen_size)
    b.undo = <long long *> PyMem_Malloc(max(undo_size, 1) * sizeof(long long))
    if b.used == NULL or b.assign == NULL or b.seen == NULL or b.undo == NULL:
        _free(b)
        return False
    cdef Py_ssize_t i
    for i in range(pool_len):
        b.used[i] = 0
    for i in range(seen_size):
        b.seen[i] = 0
    return True


cdef void _free(_Buffers *b):
    PyMem_Free(b.used)
    PyMem_Free(b.assign)
    PyMem_Free(b.seen)
    PyMem_Free(b.undo)


cdef Py_ssize_t _seen_size(const long long[:] pool, long long m):
    if pool.shape[0] == 0:
        return 2
    return <Py_ssize_t> ((pool[pool.shape[0] - 1] * 2 + m + 1) // 2 + 2)


def find_first(n, adj_start, adj, pool, m, lo, hi):
    """First complete assignment in lexicographic pool order, or None."""
    cdef const int[:] adj_start_v = adj_start
    cdef const int[:] adj_v = adj
    cdef const long long[:] pool_v = pool
    cdef Py_ssize_t n_c = n, lo_c = lo, hi_c = hi
    cdef Py_ssize_t pool_len = pool_v.shape[0]
    cdef long long m_c = m
    cdef Py_ssize_t seen_size = _seen_size(pool_v, m_c)
    cdef _Buffers buf
    if not _alloc(&buf, pool_len, n_c, seen_size, adj_start_v[n_c]):
        raise MemoryError()
    cdef bint found
    try:
        with nogil:
            found = _dfs_first(0, n_c, lo_c, hi_c, adj_start_v, adj_v, pool_v,
                               pool_len, m_c, buf.used, buf.assign, buf.seen,
                               buf.undo)
        if not found:
            return None
        return [buf.assign[i] for i in range(n_c)]
    finally:
        _free(&buf)


def count_all(n, adj_start, adj, pool, m, lo, hi):
    """Number of complete valid assignments with position 0 in [lo, hi)."""
    cdef const int[:] adj_start_v = adj_start
    cdef const int[:] adj_v = adj
    cdef const long long[:] pool_v = pool
    cdef Py_ssize_t n_c = n, lo_c = lo, hi_c = hi
    cdef Py_ssize_t pool_len = pool_v.shape[0]
    cdef long long m_c = m
    cdef Py_ssize_t seen_size = _seen_size(pool_v, m_c)
    cdef _Buffers buf
    if not _alloc(&buf, pool_len, n_c, seen_size, adj_start_v[n_c]):
        raise MemoryError()
    cdef unsigned long long total
    try:
        with nogil:
            total = _dfs_count(0, n_c, lo_c, hi_c, adj_start_v, adj_v, pool_v,
                               pool_len, m_c, buf.used, buf.assign, buf.seen,
                               buf.undo)
        return total
    finally:
        _free(&buf)
