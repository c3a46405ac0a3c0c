"""Pure-Python kernels on rank-compressed arcs.

Every kernel works on arcs ``(i, j)`` with ``0 <= i < j < k``, where ``i``
and ``j`` are ranks of endpoints in a sorted point list.  Saturation only
looks at the relative order of endpoints, so callers compress real
endpoints to ranks, run a kernel and map back.  ``_ckernels.pyx`` mirrors
this module function for function.
"""
from __future__ import annotations

BACKEND = "python"


def _derived(a: int, b: int, c: int, d: int):
    # arcs forced by a touching pair; caller has a <= c <= b <= d
    return ((a, c), (c, b), (b, d), (a, d))


def saturate_indices(k: int, pairs) -> list[tuple[int, int]]:
    """Saturation of ``pairs``, returned sorted."""
    present = set()
    for i, j in pairs:
        if not 0 <= i < j < k:
            raise ValueError(f"bad rank pair ({i}, {j}) for k={k}")
        present.add((i, j))
    work = list(present)
    order = list(present)
    while work:
        a, b = work.pop()
        for c, d in order:
            if a <= c <= b <= d:
                new = _derived(a, b, c, d)
            elif c <= a <= d <= b:
                new = _derived(c, d, a, b)
            else:
                continue
            for x, y in new:
                if x < y and (x, y) not in present:
                    present.add((x, y))
                    order.append((x, y))
                    work.append((x, y))
    return sorted(present)


def is_saturated_indices(k: int, pairs) -> bool:
    present = set()
    for i, j in pairs:
        if not 0 <= i < j < k:
            raise ValueError(f"bad rank pair ({i}, {j}) for k={k}")
        present.add((i, j))
    for a, b in present:
        for c, d in present:
            if a <= c <= b <= d:
                for x, y in _derived(a, b, c, d):
                    if x < y and (x, y) not in present:
                        return False
    return True


def arc_index_table(k: int) -> list[tuple[int, int]]:
    """All rank pairs on ``k`` points in lexicographic order; bit ``n`` of a mask is entry ``n``."""
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def _requirement_lists(k: int):
    table = arc_index_table(k)
    index = {p: n for n, p in enumerate(table)}
    reqs = []
    for a, b in table:
        row = []
        for c, d in table:
            if a <= c <= b <= d:
                need = 0
                for x, y in _derived(a, b, c, d):
                    if x < y:
                        need |= 1 << index[(x, y)]
                row.append((1 << index[(c, d)], need))
        reqs.append(row)
    return reqs


def saturated_masks(k: int) -> list[int]:
    """Every saturated subset of the arcs on ``k`` points, as ascending bitmasks.

    Brute-force filter over all ``2**(k*(k-1)/2)`` subsets.
    """
    reqs = _requirement_lists(k)
    n = len(reqs)
    out = []
    for mask in range(1 << n):
        ok = True
        m = mask
        p = 0
        while m and ok:
            if m & 1:
                for qbit, need in reqs[p]:
                    if mask & qbit and need & ~mask:
                        ok = False
                        break
            m >>= 1
            p += 1
        if ok:
            out.append(mask)
    return out
