"""Finitely supported non-crossing partitions of ``Z ⊔ {-inf}``.

Only blocks with at least two points are stored; every other point is an
implicit singleton.  :func:`alpha` and :func:`phi` are mutually inverse
lattice isomorphisms between these partitions and finite saturated arc sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .arcs import Arc, Endpoint, format_endpoint, is_endpoint
from .errors import NotNoncrossing, NotSaturated, OverlappingBlocks
from .saturation import SaturatedArcSet, is_saturated, join

__all__ = [
    "NCPartition",
    "is_noncrossing",
    "alpha",
    "phi",
    "ncp_meet",
    "ncp_join",
    "enumerate_noncrossing",
]


def _check_disjoint(blocks: list[tuple]) -> None:
    seen: dict = {}
    for n, block in enumerate(blocks):
        for x in block:
            if x in seen and seen[x] != n:
                raise OverlappingBlocks(f"point {format_endpoint(x)} lies in two blocks")
            seen[x] = n


def _blocks_cross(p: tuple, q: tuple) -> bool:
    for a, b in combinations(p, 2):
        for c, d in combinations(q, 2):
            if a < c < b < d or c < a < d < b:
                return True
    return False


def is_noncrossing(blocks: Iterable[Iterable[Endpoint]]) -> bool:
    """True iff no two distinct blocks interleave as ``a < c < b < d``.

    Raises :class:`OverlappingBlocks` if the blocks are not disjoint.
    """
    bl = [tuple(sorted(set(b))) for b in blocks]
    _check_disjoint(bl)
    return not any(_blocks_cross(p, q) for p, q in combinations(bl, 2))


@dataclass(frozen=True)
class NCPartition:
    """Non-crossing partition given by its blocks of size >= 2.

    Blocks are stored sorted ascending and ordered by their minimum.
    Singleton blocks passed in are accepted and dropped.
    """

    blocks: tuple[tuple[Endpoint, ...], ...] = ()

    def __init__(self, blocks: Iterable[Iterable[Endpoint]] = ()) -> None:
        bl = []
        for block in blocks:
            members = list(block)
            for x in members:
                if not is_endpoint(x):
                    raise TypeError(f"not an endpoint: {x!r}")
            if len(set(members)) != len(members):
                raise OverlappingBlocks(f"repeated point in block {members!r}")
            if not members:
                raise ValueError("empty block")
            bl.append(tuple(sorted(members)))
        _check_disjoint(bl)
        bl = sorted((b for b in bl if len(b) >= 2), key=lambda b: b[0])
        for p, q in combinations(bl, 2):
            if _blocks_cross(p, q):
                raise NotNoncrossing(f"blocks {p} and {q} cross")
        object.__setattr__(self, "blocks", tuple(bl))

    @classmethod
    def _trusted(cls, blocks) -> "NCPartition":
        obj = object.__new__(cls)
        bl = sorted((tuple(sorted(b)) for b in blocks if len(b) >= 2), key=lambda b: b[0])
        object.__setattr__(obj, "blocks", tuple(bl))
        return obj

    def block_of(self, x: Endpoint) -> tuple[Endpoint, ...]:
        for b in self.blocks:
            if x in b:
                return b
        return (x,)

    def support(self) -> list[Endpoint]:
        return sorted(x for b in self.blocks for x in b)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(format_endpoint(x) for x in b) + "}" for b in self.blocks)
        return f"NCPartition({body})"


def alpha(p: NCPartition) -> SaturatedArcSet:
    """All arcs with both endpoints in a common block."""
    return SaturatedArcSet._trusted(Arc(a, b) for block in p.blocks for a, b in combinations(block, 2))


def phi(s: Iterable[Arc]) -> NCPartition:
    """Blocks ``{a} ∪ {b : (a,b) or (b,a) in S}``; ``S`` must be saturated."""
    arcs = list(s)
    if not is_saturated(arcs):
        raise NotSaturated("phi is only defined on saturated arc sets")
    nbr: dict = {}
    for u in arcs:
        nbr.setdefault(u.left, {u.left}).add(u.right)
        nbr.setdefault(u.right, {u.right}).add(u.left)
    blocks = {frozenset(b) for b in nbr.values()}
    return NCPartition(blocks)


def ncp_meet(p: NCPartition, q: NCPartition) -> NCPartition:
    return NCPartition._trusted(
        set(b) & set(c) for b in p.blocks for c in q.blocks if len(set(b) & set(c)) >= 2
    )


def ncp_join(p: NCPartition, q: NCPartition) -> NCPartition:
    """Least non-crossing partition coarser than both, via the saturation join."""
    return phi(join(alpha(p), alpha(q)))


def _nc_partitions(seq: tuple) -> Iterator[list[list]]:
    # recursion on the last point m sharing a block with seq[0]: the points
    # after m are partitioned independently; seq[1..m] is partitioned and
    # seq[0] joins the block of seq[m]
    if not seq:
        yield []
        return
    head = seq[0]
    for rest in _nc_partitions(seq[1:]):
        yield [[head]] + rest
    for m in range(1, len(seq)):
        for inner in _nc_partitions(seq[1 : m + 1]):
            merged = [[head] + b if seq[m] in b else b for b in inner]
            for outer in _nc_partitions(seq[m + 1 :]):
                yield merged + outer


def enumerate_noncrossing(points: Iterable[Endpoint]) -> list[NCPartition]:
    """All non-crossing partitions of the finite point set ``points``."""
    seq = tuple(sorted(set(points)))
    return [NCPartition._trusted(p) for p in _nc_partitions(seq)]
