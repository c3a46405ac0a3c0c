# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`arcmodel._pykernels`; same signatures, same results."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t

BACKEND = "cython"


cdef inline void _push(int x, int y, int k, char* present, int* order, int* n_order,
                       int* work, int* n_work):
    if x < y and not present[x * k + y]:
        present[x * k + y] = 1
        order[2 * n_order[0]] = x
        order[2 * n_order[0] + 1] = y
        n_order[0] += 1
        work[2 * n_work[0]] = x
        work[2 * n_work[0] + 1] = y
        n_work[0] += 1


def saturate_indices(int k, pairs):
    cdef int i, j, a, b, c, d, t
    cdef int n_order = 0, n_work = 0
    if k <= 0:
        for i, j in pairs:
            raise ValueError(f"bad rank pair ({i}, {j}) for k={k}")
        return []
    cdef char* present = <char*> calloc(k * k, sizeof(char))
    cdef int* order = <int*> malloc(k * k * sizeof(int))
    cdef int* work = <int*> malloc(k * k * sizeof(int))
    if present == NULL or order == NULL or work == NULL:
        free(present); free(order); free(work)
        raise MemoryError()
    try:
        for i, j in pairs:
            if not (0 <= i < j < k):
                raise ValueError(f"bad rank pair ({i}, {j}) for k={k}")
            _push(i, j, k, present, order, &n_order, work, &n_work)
        while n_work > 0:
            n_work -= 1
            a = work[2 * n_work]
            b = work[2 * n_work + 1]
            t = 0
            while t < n_order:
                c = order[2 * t]
                d = order[2 * t + 1]
                t += 1
                if a <= c and c <= b and b <= d:
                    _push(a, c, k, present, order, &n_order, work, &n_work)
                    _push(c, b, k, present, order, &n_order, work, &n_work)
                    _push(b, d, k, present, order, &n_order, work, &n_work)
                    _push(a, d, k, present, order, &n_order, work, &n_work)
                elif c <= a and a <= d and d <= b:
                    _push(c, a, k, present, order, &n_order, work, &n_work)
                    _push(a, d, k, present, order, &n_order, work, &n_work)
                    _push(d, b, k, present, order, &n_order, work, &n_work)
                    _push(c, b, k, present, order, &n_order, work, &n_work)
        out = []
        for i in range(k):
            for j in range(i + 1, k):
                if present[i * k + j]:
                    out.append((i, j))
        return out
    finally:
        free(present)
        free(order)
        free(work)


def is_saturated_indices(int k, pairs):
    cdef int i, j, a, b, c, d, s, t, n = 0
    cdef int x[4]
    cdef int y[4]
    cdef bint ok = True
    plist = list(pairs)
    if not plist:
        return True
    if k <= 0:
        raise ValueError(f"bad rank pair {plist[0]} for k={k}")
    cdef char* present = <char*> calloc(k * k, sizeof(char))
    cdef int* arcs = <int*> malloc(2 * len(plist) * sizeof(int))
    if present == NULL or arcs == NULL:
        free(present); free(arcs)
        raise MemoryError()
    try:
        for i, j in plist:
            if not (0 <= i < j < k):
                raise ValueError(f"bad rank pair ({i}, {j}) for k={k}")
            if not present[i * k + j]:
                present[i * k + j] = 1
                arcs[2 * n] = i
                arcs[2 * n + 1] = j
                n += 1
        for s in range(n):
            a = arcs[2 * s]
            b = arcs[2 * s + 1]
            for t in range(n):
                c = arcs[2 * t]
                d = arcs[2 * t + 1]
                if a <= c and c <= b and b <= d:
                    x[0] = a; y[0] = c
                    x[1] = c; y[1] = b
                    x[2] = b; y[2] = d
                    x[3] = a; y[3] = d
                    for i in range(4):
                        if x[i] < y[i] and not present[x[i] * k + y[i]]:
                            ok = False
                            break
                    if not ok:
                        return False
        return True
    finally:
        free(present)
        free(arcs)


def arc_index_table(int k):
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def saturated_masks(int k):
    cdef int n, p, q, r, idx
    cdef int a, b, c, d
    cdef uint64_t mask, total, need
    cdef bint ok
    table = arc_index_table(k)
    n = len(table)
    if n > 40:
        raise ValueError(f"too many arcs for mask enumeration: {n}")
    index = {pq: m for m, pq in enumerate(table)}
    # need[p * n + q]: arcs forced when p and q both present (0 when p, q don't touch in that order)
    cdef uint64_t* need_tab = <uint64_t*> calloc(n * n + 1, sizeof(uint64_t))
    cdef char* touch_tab = <char*> calloc(n * n + 1, sizeof(char))
    if need_tab == NULL or touch_tab == NULL:
        free(need_tab); free(touch_tab)
        raise MemoryError()
    try:
        for p in range(n):
            a, b = table[p]
            for q in range(n):
                c, d = table[q]
                if a <= c <= b <= d:
                    touch_tab[p * n + q] = 1
                    need = 0
                    for xy in ((a, c), (c, b), (b, d), (a, d)):
                        if xy[0] < xy[1]:
                            need |= (<uint64_t> 1) << (<int> index[xy])
                    need_tab[p * n + q] = need
        out = []
        total = (<uint64_t> 1) << n
        mask = 0
        while mask < total:
            ok = True
            p = 0
            while p < n and ok:
                if (mask >> p) & 1:
                    q = 0
                    while q < n:
                        if touch_tab[p * n + q] and (mask >> q) & 1 and (need_tab[p * n + q] & ~mask):
                            ok = False
                            break
                        q += 1
                p += 1
            if ok:
                out.append(mask)
            mask += 1
        return out
    finally:
        free(need_tab)
        free(touch_tab)
