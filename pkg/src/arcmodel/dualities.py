"""Internal-degree twist and Grothendieck-duality reflection on arcs.

Twisting by ``i`` translates finite endpoints by ``i``.  The reflection
``s_j(a, b) = (j - b, j - a)``, ``s_j(-inf, b) = (-inf, j - b)`` models
``RHom(-, S(j))``; torsion modules pick up one suspension under the duality
and free modules none, which :func:`shift_delta` records.
"""
from __future__ import annotations

from typing import Iterable

from .arcs import NEG_INF, Arc, ArcSet
from .ncp import NCPartition
from .saturation import SaturatedArcSet

__all__ = [
    "twist",
    "reflect",
    "shift_delta",
    "twist_set",
    "reflect_set",
    "reflect_ncp",
    "is_reflection_symmetric",
]


def twist(u: Arc, i: int) -> Arc:
    a, b = u
    return Arc(a if a is NEG_INF else a + i, b + i)


def reflect(u: Arc, j: int) -> Arc:
    a, b = u
    if a is NEG_INF:
        return Arc(NEG_INF, j - b)
    return Arc(j - b, j - a)


def shift_delta(u: Arc) -> int:
    """1 for a torsion (finite) arc, 0 for a free one."""
    return 1 if u.is_finite else 0


def _reflect_point(x, j: int):
    return x if x is NEG_INF else j - x


def twist_set(s: Iterable[Arc], i: int) -> SaturatedArcSet:
    """Translate a saturated set; translation preserves saturation."""
    s = s if isinstance(s, SaturatedArcSet) else SaturatedArcSet(s)
    return SaturatedArcSet._trusted(twist(u, i) for u in s)


def reflect_set(s: Iterable[Arc], j: int) -> SaturatedArcSet:
    s = s if isinstance(s, SaturatedArcSet) else SaturatedArcSet(s)
    return SaturatedArcSet._trusted(reflect(u, j) for u in s)


def reflect_ncp(p: NCPartition, j: int) -> NCPartition:
    return NCPartition._trusted([_reflect_point(x, j) for x in b] for b in p.blocks)


def is_reflection_symmetric(s: ArcSet, j: int) -> bool:
    return {reflect(u, j) for u in s} == set(s.arcs)
