"""Perpendicular sets and strong exceptional sequences.

Starting from ``S_0 = saturate(F)``, repeatedly take the lexicographically
minimal arc ``(l, m)`` of ``S_{i-1}`` and pass to

    S_{i-1} ⊥ (l, m) = {(a, b) : neither l < a <= m < b nor a <= l < b <= m}.

The extracted arcs form a strong exceptional sequence generating ``S_0``;
the endomorphism algebra of their sum is a product of linearly oriented
type-A path algebras, one per group of arcs sharing a left endpoint.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable

from .arcs import Arc, ArcSet
from .errors import EmptySet, NotMinimal
from .saturation import SaturatedArcSet, saturate

__all__ = [
    "ExceptionalSequence",
    "ChainQuiver",
    "minimal_arc",
    "perpendicular",
    "exceptional_sequence",
    "endo_quiver",
]


@dataclass(frozen=True)
class ExceptionalSequence:
    arcs: tuple[Arc, ...] = ()

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)


@dataclass(frozen=True)
class ChainQuiver:
    """Linearly oriented A-chains; ``chains[k]`` has ``len(chains[k])`` vertices."""

    chains: tuple[tuple[Arc, ...], ...] = ()

    @property
    def type_a_ranks(self) -> list[int]:
        return [len(c) for c in self.chains]

    def arrows(self) -> list[tuple[Arc, Arc]]:
        return [(c[n], c[n + 1]) for c in self.chains for n in range(len(c) - 1)]


def minimal_arc(s: ArcSet) -> Arc:
    if not len(s):
        raise EmptySet("the empty set has no minimal arc")
    return min(s)


def perpendicular(s: SaturatedArcSet, lm: Arc) -> SaturatedArcSet:
    """Arcs of ``s`` with no Hom or Ext^1 to the minimal arc ``lm``.

    Only defined when ``lm`` is the lexicographic minimum of ``s``.
    """
    if not len(s) or lm != min(s):
        raise NotMinimal(f"{lm} is not the minimal arc of the given set")
    l, m = lm
    return SaturatedArcSet._trusted(
        u for u in s if not (l < u.left <= m < u.right) and not (u.left <= l < u.right <= m)
    )


def exceptional_sequence(arcs: Iterable[Arc]) -> ExceptionalSequence:
    current = saturate(arcs)
    out = []
    while len(current):
        lm = minimal_arc(current)
        out.append(lm)
        current = perpendicular(current, lm)
    return ExceptionalSequence(tuple(out))


def endo_quiver(seq: ExceptionalSequence | Iterable[Arc]) -> ChainQuiver:
    """Group the sequence by left endpoint; each group, by right endpoint, is one chain."""
    arcs = sorted(seq)
    chains = tuple(tuple(g) for _, g in groupby(arcs, key=lambda u: u.left))
    return ChainQuiver(chains)
