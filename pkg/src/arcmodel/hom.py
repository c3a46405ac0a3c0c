"""Hom and Ext^1 between indecomposables, kernels, cokernels, cones, fibers.

All Hom and Ext spaces between indecomposables are 0- or 1-dimensional
whatever the ground field, so every answer here is an integer 0/1 or a
canonical list of summands.

Orientation: ``ext_dim(u, v)`` is ``dim Ext^1(M_u, M_v)``, extensions *of*
``u`` *by* ``v``, i.e. source first.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc, arc_or_none, format_endpoint
from .errors import NoExtension, NoMorphism

__all__ = [
    "ShiftedArc",
    "hom_dim",
    "ext_dim",
    "rhom_dim",
    "ker_coker",
    "cone",
    "fiber",
    "format_decomposition",
]


@dataclass(frozen=True)
class ShiftedArc:
    """``Σ^shift M_arc``; ``shift`` counts suspensions."""

    arc: Arc
    shift: int = 0

    def __str__(self) -> str:
        return f"Σ^{self.shift} {self.arc}"


def hom_dim(u: Arc, v: Arc) -> int:
    a, b = u
    c, d = v
    return int(a <= c < b <= d)


def ext_dim(u: Arc, v: Arc) -> int:
    # target v = (a, b), source u = (c, d)
    a, b = v
    c, d = u
    return int(a < c <= b < d)


def rhom_dim(u: Arc, v: Arc, n: int) -> int:
    """``dim Hom(M_u, Σ^n M_v)``; the base is hereditary so only n = 0, 1 survive."""
    if n == 0:
        return hom_dim(u, v)
    if n == 1:
        return ext_dim(u, v)
    return 0


def _require_hom(u: Arc, v: Arc) -> None:
    if not hom_dim(u, v):
        raise NoMorphism(
            f"no nonzero morphism {u} -> {v}: condition a <= c < b <= d fails"
        )


def ker_coker(u: Arc, v: Arc) -> tuple[Arc | None, Arc | None]:
    """Kernel and cokernel arcs of any nonzero map ``M_u -> M_v`` (None for zero)."""
    _require_hom(u, v)
    a, b = u
    c, d = v
    return arc_or_none(a, c), arc_or_none(b, d)


def cone(u: Arc, v: Arc) -> list[ShiftedArc]:
    """Cone of the nonzero map ``M_u -> M_v``: ``Σ ker ⊕ coker``."""
    ker, coker = ker_coker(u, v)
    out = []
    if ker is not None:
        out.append(ShiftedArc(ker, 1))
    if coker is not None:
        out.append(ShiftedArc(coker, 0))
    return out


def fiber(u: Arc, v: Arc) -> list[ShiftedArc]:
    """Middle term ``B`` of the non-split triangle ``M_v -> B -> M_u -> Σ M_v``."""
    if not ext_dim(u, v):
        raise NoExtension(
            f"no extension of {u} by {v}: condition a < c <= b < d fails "
            f"(target ({format_endpoint(v.left)},{v.right}), source ({format_endpoint(u.left)},{u.right}))"
        )
    a, b = v
    c, d = u
    return [ShiftedArc(w, 0) for w in (arc_or_none(c, b), arc_or_none(a, d)) if w is not None]


def format_decomposition(summands, ascii: bool = False) -> str:
    """``Σ^1 0..1 ⊕ Σ^0 3..4``; ``0`` for the empty sum."""
    if not summands:
        return "0"
    sym, plus = ("S", " + ") if ascii else ("Σ", " ⊕ ")
    return plus.join(f"{sym}^{s.shift} {s.arc}" for s in summands)
