"""Explicit graded k[y]-modules and linear-algebra Hom/Ext oracles.

``M_(a,b)`` for finite ``a`` is ``S/(y^(b-a))(b)``: one basis vector in each
internal degree ``-b, ..., -a-1`` with ``y`` the identity between
neighbours.  ``M_(-inf,b)`` is the free module ``S(b)``, generated in degree
``-b`` and truncated at ``window_top``.

None of this consults :mod:`arcmodel.hom`; it recomputes the same numbers
from the modules themselves.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..arcs import NEG_INF, Arc
from ..errors import NoMorphism, WindowTooSmall
from .linalg import Matrix, matmul, nullspace, rank, zeros

__all__ = [
    "GradedModuleRep",
    "module_of_arc",
    "check_window",
    "oracle_hom_dim",
    "oracle_ext_dim",
    "oracle_direct_hom_dim",
    "oracle_morphism",
    "kernel_cokernel_dims",
]


@dataclass
class GradedModuleRep:
    """Finite-dimensional graded vector space with a degree-raising ``y``.

    ``y_action[d]`` is the ``dim(d+1) x dim(d)`` matrix of ``y`` out of
    degree ``d``, present for every degree with ``dim(d) > 0``.
    """

    degrees: dict[int, int]
    y_action: dict[int, Matrix] = field(default_factory=dict)
    truncation_top: int | None = None

    def dim(self, d: int) -> int:
        return self.degrees.get(d, 0)

    def y(self, d: int) -> Matrix:
        if self.dim(d) == 0:
            return zeros(self.dim(d + 1), 0)
        return self.y_action[d]

    def y_power(self, d: int, k: int, p: int | None = None) -> Matrix:
        """Matrix of ``y^k`` from degree ``d`` to degree ``d + k``."""
        out = [[1 if i == j else 0 for j in range(self.dim(d))] for i in range(self.dim(d))]
        for step in range(k):
            e = d + step
            out = matmul(self.y(e), out, self.dim(e), self.dim(d), p)
        return out

    def occupied(self) -> list[int]:
        return sorted(d for d, n in self.degrees.items() if n)


def module_of_arc(u: Arc, window_top: int | None = None) -> GradedModuleRep:
    a, b = u
    if a is NEG_INF:
        if window_top is None or window_top < -b:
            raise WindowTooSmall(f"window top {window_top} is below the generator degree {-b} of {u}")
        lo, hi, top = -b, window_top, window_top
    else:
        lo, hi, top = -b, -a - 1, None
    degrees = {d: 1 for d in range(lo, hi + 1)}
    y_action = {d: [[1]] for d in range(lo, hi)}
    y_action[hi] = []  # zero map into the (empty) next degree
    return GradedModuleRep(degrees, y_action, top)


def check_window(u: Arc, v: Arc, window_top: int) -> None:
    """Raise unless ``window_top`` clears every relation and generator degree."""
    lefts = [-x for x in (u.left, v.left) if x is not NEG_INF]
    need = max([x + 1 for x in lefts] + [-u.right, -v.right])
    if window_top < need:
        raise WindowTooSmall(f"window top {window_top} < required {need} for {u}, {v}")


def _y_map(v: GradedModuleRep, src: int, k: int, p: int | None) -> tuple[Matrix, int, int]:
    return v.y_power(src, k, p), v.dim(src), v.dim(src + k)


def oracle_hom_dim(u: Arc, v: Arc, window_top: int, p: int | None = None) -> int:
    """``dim Hom(M_u, M_v)`` from the presentation ``S(c) --y^(d-c)--> S(d) -> M_u``."""
    check_window(u, v, window_top)
    V = module_of_arc(v, window_top)
    c, d = u
    if c is NEG_INF:
        return V.dim(-d)
    m, n_src, _ = _y_map(V, -d, d - c, p)
    return n_src - rank(m, p)


def oracle_ext_dim(u: Arc, v: Arc, window_top: int, p: int | None = None) -> int:
    """``dim Ext^1(M_u, M_v)`` as the cokernel of ``Hom(S(d), V) -> Hom(S(c), V)``."""
    check_window(u, v, window_top)
    c, d = u
    if c is NEG_INF:
        return 0
    V = module_of_arc(v, window_top)
    m, _, n_tgt = _y_map(V, -d, d - c, p)
    return n_tgt - rank(m, p)


def _commuting_system(M: GradedModuleRep, N: GradedModuleRep, window_top: int, p):
    # unknowns: entries of f_d (dim N_d x dim M_d), for degrees where both are nonzero
    degs = sorted(set(M.occupied()) & set(N.occupied()))
    offset, pos = {}, 0
    for d in degs:
        offset[d] = pos
        pos += N.dim(d) * M.dim(d)
    nvars = pos

    def var(d, i, j):
        return offset[d] + i * M.dim(d) + j

    rows = []
    lo = min(M.occupied() + N.occupied(), default=0)
    for d in range(lo, window_top):
        # f_{d+1} y^M_d - y^N_d f_d = 0, entrywise (i in N_{d+1}, j in M_d)
        yM, yN = M.y(d), N.y(d)
        for i in range(N.dim(d + 1)):
            for j in range(M.dim(d)):
                row = [0] * nvars
                if d + 1 in offset:
                    for k in range(M.dim(d + 1)):
                        row[var(d + 1, i, k)] += yM[k][j]
                if d in offset:
                    for k in range(N.dim(d)):
                        row[var(d, k, j)] -= yN[i][k]
                if any(row):
                    rows.append(row)
    return rows, nvars, degs, offset


def oracle_direct_hom_dim(u: Arc, v: Arc, window_top: int, p: int | None = None) -> int:
    """``dim Hom(M_u, M_v)`` by solving ``f y = y f`` degree by degree."""
    check_window(u, v, window_top)
    M, N = module_of_arc(u, window_top), module_of_arc(v, window_top)
    rows, nvars, _, _ = _commuting_system(M, N, window_top, p)
    return nvars - rank(rows, p) if rows else nvars


def oracle_morphism(u: Arc, v: Arc, window_top: int, p: int | None = None) -> dict[int, Matrix]:
    """A nonzero degree-0 map ``M_u -> M_v`` as ``{degree: matrix}``."""
    check_window(u, v, window_top)
    M, N = module_of_arc(u, window_top), module_of_arc(v, window_top)
    rows, nvars, degs, offset = _commuting_system(M, N, window_top, p)
    basis = nullspace(rows, nvars, p)
    if not basis:
        raise NoMorphism(f"no nonzero morphism {u} -> {v}")
    x = basis[0]
    f = {}
    for d in degs:
        r, c = N.dim(d), M.dim(d)
        f[d] = [[x[offset[d] + i * c + j] for j in range(c)] for i in range(r)]
    return f


def kernel_cokernel_dims(u: Arc, v: Arc, window_top: int, p: int | None = None):
    """Degreewise ``(ker, coker)`` dimensions of a nonzero map ``M_u -> M_v``."""
    M, N = module_of_arc(u, window_top), module_of_arc(v, window_top)
    f = oracle_morphism(u, v, window_top, p)
    ker, coker = {}, {}
    lo = min(M.occupied() + N.occupied())
    for d in range(lo, window_top + 1):
        rk = rank(f[d], p) if d in f else 0
        if M.dim(d) - rk:
            ker[d] = M.dim(d) - rk
        if N.dim(d) - rk:
            coker[d] = N.dim(d) - rk
    return ker, coker
