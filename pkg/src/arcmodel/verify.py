"""Exhaustive cross-check of the arc calculus against the linear-algebra oracle."""
from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import NEG_INF, Arc
from .hom import ext_dim, hom_dim, ker_coker
from .oracle import (
    kernel_cokernel_dims,
    module_of_arc,
    oracle_direct_hom_dim,
    oracle_ext_dim,
    oracle_hom_dim,
)


def arcs_in_range(lo: int, hi: int, minus_inf: bool = True) -> list[Arc]:
    """Every arc with endpoints in ``[lo, hi]`` (and -inf on the left)."""
    pts = ([NEG_INF] if minus_inf else []) + list(range(lo, hi + 1))
    return [Arc(a, b) for a in pts for b in pts if b is not NEG_INF and a < b]


@dataclass
class VerifyReport:
    lo: int
    hi: int
    window: int
    field: int | None
    n_arcs: int = 0
    n_pairs: int = 0
    hom_mismatches: list = field(default_factory=list)
    direct_mismatches: list = field(default_factory=list)
    ext_mismatches: list = field(default_factory=list)
    cone_mismatches: list = field(default_factory=list)
    cone_checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.hom_mismatches or self.direct_mismatches or self.ext_mismatches or self.cone_mismatches)

    def text(self) -> str:
        fname = "Q" if self.field is None else f"GF({self.field})"
        lines = [
            f"range: {{-inf}} ∪ [{self.lo},{self.hi}]  window: {self.window}  field: {fname}",
            f"arcs: {self.n_arcs}",
            f"ordered pairs: {self.n_pairs}",
            f"hom mismatches (resolution oracle): {len(self.hom_mismatches)}",
            f"hom mismatches (direct oracle): {len(self.direct_mismatches)}",
            f"ext mismatches: {len(self.ext_mismatches)}",
            f"kernel/cokernel dimension mismatches: {len(self.cone_mismatches)} of {self.cone_checked}",
        ]
        for tag, bad in (
            ("hom", self.hom_mismatches),
            ("direct", self.direct_mismatches),
            ("ext", self.ext_mismatches),
            ("kercoker", self.cone_mismatches),
        ):
            for u, v, want, got in bad[:10]:
                lines.append(f"  {tag} {u} {v}: formula {want}, oracle {got}")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def _module_dims(u: Arc | None, window: int) -> dict[int, int]:
    if u is None:
        return {}
    return {d: n for d, n in module_of_arc(u, window).degrees.items() if n}


def verify_range(lo: int, hi: int, window: int, field: int | None = None) -> VerifyReport:
    """Compare formulas and oracles on every ordered pair of arcs in range.

    Raises :class:`~arcmodel.errors.WindowTooSmall` if ``window`` cannot
    hold the relations of some pair.
    """
    arcs = arcs_in_range(lo, hi)
    rep = VerifyReport(lo, hi, window, field, n_arcs=len(arcs), n_pairs=len(arcs) ** 2)
    for u in arcs:
        for v in arcs:
            h, e = hom_dim(u, v), ext_dim(u, v)
            oh = oracle_hom_dim(u, v, window, field)
            od = oracle_direct_hom_dim(u, v, window, field)
            oe = oracle_ext_dim(u, v, window, field)
            if oh != h:
                rep.hom_mismatches.append((u, v, h, oh))
            if od != h:
                rep.direct_mismatches.append((u, v, h, od))
            if oe != e:
                rep.ext_mismatches.append((u, v, e, oe))
            if h and od:
                rep.cone_checked += 1
                ker, coker = ker_coker(u, v)
                want = (_module_dims(ker, window), _module_dims(coker, window))
                got = kernel_cokernel_dims(u, v, window, field)
                if want != got:
                    rep.cone_mismatches.append((u, v, want, got))
    return rep
