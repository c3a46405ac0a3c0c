"""Exact Gaussian elimination over the rationals or a prime field.

Matrices are lists of rows.  ``p=None`` means the rationals (entries become
:class:`fractions.Fraction`); an integer ``p`` means arithmetic mod ``p``.
"""
from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[int | Fraction]]


def _convert(m: Matrix, p: int | None) -> Matrix:
    if p is None:
        return [[Fraction(x) for x in row] for row in m]
    return [[int(x) % p for x in row] for row in m]


def _inverse(x, p: int | None):
    if p is None:
        return 1 / x
    return pow(x, p - 2, p)


def rref(m: Matrix, p: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = _convert(m, p)
    if not a:
        return a, []
    rows, cols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _inverse(a[r][c], p)
        a[r] = [x * inv if p is None else x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                if p is None:
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                else:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix, p: int | None = None) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: Matrix, ncols: int, p: int | None = None) -> list[list]:
    """Basis of ``{x : m x = 0}`` for an ``len(m) x ncols`` matrix."""
    if not m:
        one = Fraction(1) if p is None else 1
        zero = Fraction(0) if p is None else 0
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    r, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0) if p is None else 0 for _ in range(ncols)]
        v[fc] = Fraction(1) if p is None else 1
        for row, pc in zip(r, pivots):
            v[pc] = -row[fc] if p is None else (-row[fc]) % p
        basis.append(v)
    return basis


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix, inner: int, ncols: int, p: int | None = None) -> Matrix:
    """``a @ b`` with explicit inner and column sizes, so empty shapes are unambiguous."""
    out = []
    for row in a:
        new = []
        for j in range(ncols):
            s = sum(row[k] * b[k][j] for k in range(inner))
            new.append(s if p is None else s % p)
        out.append(new)
    return out
