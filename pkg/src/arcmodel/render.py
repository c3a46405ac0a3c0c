"""ASCII and Graphviz DOT drawings of arc sets and chain quivers."""
from __future__ import annotations

from typing import Iterable

from .arcs import NEG_INF, Arc, format_endpoint, length
from .exceptional import ChainQuiver


def _label(x) -> str:
    return "[-inf]" if x is NEG_INF else str(x)


def render_ascii(arcs: Iterable[Arc]) -> str:
    """Points on a line with every arc as a chord above it, longest on top.

    Endpoints shared by several arcs get one column; vertical strokes run
    from each chord down to its endpoints, so crossings show as ``|``
    passing through ``-``.
    """
    arcs = sorted(arcs, key=lambda u: (-length(u), u))
    if not arcs:
        return "(no arcs)\n"
    points = sorted({x for u in arcs for x in u})
    col, pos = {}, 0
    for x in points:
        w = len(_label(x))
        col[x] = pos + w // 2
        pos += w + 3
    width = pos
    grid = [[" "] * width for _ in arcs]
    for r, u in enumerate(arcs):
        lo, hi = col[u.left], col[u.right]
        for c in range(lo + 1, hi):
            grid[r][c] = "-"
        grid[r][lo] = grid[r][hi] = "+"
    for r, u in enumerate(arcs):
        lo, hi = col[u.left], col[u.right]
        for below in range(r + 1, len(arcs)):
            for c in (lo, hi):
                if grid[below][c] in (" ", "-"):
                    grid[below][c] = "|"
    labels = [" "] * width
    for x in points:
        s = _label(x)
        start = col[x] - len(s) // 2
        labels[start : start + len(s)] = list(s)
    lines = ["".join(row).rstrip() for row in grid]
    lines.append("".join(labels).rstrip())
    return "\n".join(lines) + "\n"


def _dot_id(x) -> str:
    return '"-inf"' if x is NEG_INF else f'"{x}"'


def render_dot(arcs: Iterable[Arc], name: str = "arcs") -> str:
    """One node per endpoint laid out left to right, one edge per arc."""
    arcs = sorted(arcs)
    points = sorted({x for u in arcs for x in u})
    out = [f"graph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for x in points:
        if x is NEG_INF:
            out.append('  "-inf" [shape=doublecircle, label="-∞"];')
        else:
            out.append(f'  {_dot_id(x)} [label="{x}"];')
    if len(points) > 1:
        spine = " -- ".join(_dot_id(x) for x in points)
        out.append(f"  {spine} [style=invis];")
    for u in arcs:
        out.append(f'  {_dot_id(u.left)} -- {_dot_id(u.right)} [constraint=false, label="{u}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def quiver_dot(q: ChainQuiver, name: str = "quiver") -> str:
    """Vertices are the arcs of the sequence, arrows the consecutive chain maps."""
    out = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    for chain in q.chains:
        for u in chain:
            out.append(f'  "{u}";')
    for s, t in q.arrows():
        out.append(f'  "{s}" -> "{t}";')
    out.append("}")
    return "\n".join(out) + "\n"


def quiver_text(q: ChainQuiver) -> str:
    lines = []
    for chain in q.chains:
        lines.append(f"A{len(chain)}: " + " -> ".join(str(u) for u in chain))
    return "\n".join(lines) + ("\n" if lines else "")
