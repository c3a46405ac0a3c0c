"""Saturated arc sets: closure operator, lattice operations, enumeration.

A finite set of arcs is saturated when, for every pair ``(a,b), (c,d)`` in
it with ``a <= c <= b <= d``, each of ``(a,c), (c,b), (b,d), (a,d)`` that is
an arc is also in it.  Finite saturated sets correspond to the finitely
generated thick subcategories.
"""
from __future__ import annotations

from typing import Iterable

from . import kernels
from .arcs import Arc, ArcSet, Endpoint, is_endpoint
from .errors import NotSaturated, ResourceLimit

__all__ = [
    "SaturatedArcSet",
    "is_saturated",
    "saturate",
    "meet",
    "join",
    "enumerate_saturated",
    "is_twist_stable",
    "DEFAULT_POINT_CAP",
    "FILTER_POINT_LIMIT",
]

DEFAULT_POINT_CAP = 8
# brute-force subset filtering is used up to this many points, the
# non-crossing-partition route above it
FILTER_POINT_LIMIT = 6


def _compress(arcs: Iterable[Arc]):
    arcs = list(arcs)
    points = sorted({x for u in arcs for x in u})
    rank = {x: n for n, x in enumerate(points)}
    return points, [(rank[u.left], rank[u.right]) for u in arcs]


class SaturatedArcSet(ArcSet):
    """An :class:`ArcSet` known to be saturated.

    The public constructor checks the closure condition and raises
    :class:`NotSaturated` on violation.
    """

    __slots__ = ()

    def __init__(self, arcs: Iterable[Arc] = (), *, _checked: bool = True) -> None:
        super().__init__(arcs)
        if _checked and not is_saturated(self):
            raise NotSaturated(f"{ArcSet(self)!r} is not saturated")

    @classmethod
    def _trusted(cls, arcs: Iterable[Arc]) -> "SaturatedArcSet":
        return cls(arcs, _checked=False)


def is_saturated(arcs: Iterable[Arc]) -> bool:
    points, pairs = _compress(arcs)
    return kernels.is_saturated_indices(len(points), pairs)


def saturate(arcs: Iterable[Arc]) -> SaturatedArcSet:
    """Smallest saturated set containing ``arcs``.

    Every arc added has both endpoints among the input's endpoints.
    """
    points, pairs = _compress(arcs)
    closed = kernels.saturate_indices(len(points), pairs)
    return SaturatedArcSet._trusted(Arc(points[i], points[j]) for i, j in closed)


def meet(s: SaturatedArcSet, t: SaturatedArcSet) -> SaturatedArcSet:
    return SaturatedArcSet._trusted(s.arcs & t.arcs)


def join(s: SaturatedArcSet, t: SaturatedArcSet) -> SaturatedArcSet:
    return saturate(s.arcs | t.arcs)


def _normalize_points(points: Iterable[Endpoint]) -> list[Endpoint]:
    pts = list(points)
    for x in pts:
        if not is_endpoint(x):
            raise TypeError(f"not an endpoint: {x!r}")
    return sorted(set(pts))


def enumerate_saturated(
    points: Iterable[Endpoint],
    *,
    cap: int = DEFAULT_POINT_CAP,
    method: str = "auto",
) -> list[SaturatedArcSet]:
    """Every saturated set of arcs with all endpoints in ``points``.

    ``method`` is ``"filter"`` (test every subset), ``"bijection"`` (build
    from non-crossing partitions) or ``"auto"``.  The result is sorted by
    size, then lexicographically by arcs.
    """
    pts = _normalize_points(points)
    if len(pts) > cap:
        raise ResourceLimit(f"{len(pts)} points exceeds the enumeration cap of {cap}")
    if method == "auto":
        method = "filter" if len(pts) <= FILTER_POINT_LIMIT else "bijection"
    if method == "filter":
        table = kernels.arc_index_table(len(pts))
        out = []
        for mask in kernels.saturated_masks(len(pts)):
            chosen = (table[n] for n in range(len(table)) if mask >> n & 1)
            out.append(SaturatedArcSet._trusted(Arc(pts[i], pts[j]) for i, j in chosen))
    elif method == "bijection":
        from .ncp import alpha, enumerate_noncrossing

        out = [alpha(p) for p in enumerate_noncrossing(pts)]
    else:
        raise ValueError(f"unknown method {method!r}")
    out.sort(key=ArcSet.sort_key)
    return out


def is_twist_stable(s: ArcSet, i: int) -> bool:
    from .dualities import twist

    return {twist(u, i) for u in s} == set(s.arcs)

