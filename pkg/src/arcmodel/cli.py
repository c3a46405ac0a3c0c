"""Command-line interface: ``arcmodel <subcommand> ...``.

Arcs are written ``a..b`` (``-inf..5``).  Arc sets, partitions and
sequences are JSON given inline (``'{"arcs": [[0,2]]}'``), as a file path,
or as ``-`` / omitted for standard input.

Exit status: 0 on success, 1 on a domain error (no morphism, set not
saturated, ...), 2 on unparseable input.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .arcs import NEG_INF, Arc, ArcSet, parse_arc, parse_endpoint
from .dualities import reflect, reflect_ncp, reflect_set, twist, twist_set, is_reflection_symmetric
from .errors import ArcModelError, ParseError
from .exceptional import endo_quiver, exceptional_sequence
from .hom import cone, ext_dim, fiber, format_decomposition, hom_dim, ker_coker, rhom_dim
from .ncp import NCPartition, alpha, ncp_join, ncp_meet, phi
from .render import quiver_dot, render_ascii, render_dot
from .saturation import (
    DEFAULT_POINT_CAP,
    SaturatedArcSet,
    enumerate_saturated,
    is_saturated,
    is_twist_stable,
    join,
    meet,
    saturate,
)
from .verify import verify_range

# translation-stable thick subcategories; only the first is finitely generated
TWIST_STABLE = (
    ("0", "the zero subcategory (empty arc set)"),
    ("D^b_tors(gr S)", "all finite arcs"),
    ("D^b(gr S)", "all arcs"),
)


class _Parser(argparse.ArgumentParser):
    # let "-4..4", "-inf..5" and "-inf,0,1" through as values, not options
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-(\d|inf)")


def _arc_arg(text: str) -> Arc:
    try:
        return parse_arc(text)
    except ArcModelError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _points_arg(text: str) -> list:
    try:
        return [parse_endpoint(t) for t in text.split(",") if t.strip()]
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if not sep or a > b:
        raise argparse.ArgumentTypeError(f"expected LO..HI with LO <= HI, got {text!r}")
    return a, b


def _read_json(source: str | None):
    if source is None or source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return io.loads(text)


def _arcset(source) -> ArcSet:
    return io.arcset_from_json(_read_json(source))


def _saturated(source) -> SaturatedArcSet:
    s = _arcset(source)
    return s if isinstance(s, SaturatedArcSet) else SaturatedArcSet(s)


def _ncp(source) -> NCPartition:
    return io.ncp_from_json(_read_json(source))


def _emit(obj) -> None:
    print(io.dumps(obj))


def _target(text: str):
    """An arc in ``a..b`` syntax, or JSON of an arc set or partition."""
    if ".." in text and not text.lstrip().startswith("{"):
        try:
            return parse_arc(text)
        except ArcModelError as exc:
            raise ParseError(str(exc)) from None
    obj = _read_json(text)
    if isinstance(obj, dict) and "blocks" in obj:
        return io.ncp_from_json(obj)
    return io.arcset_from_json(obj)


# --- subcommand handlers ---------------------------------------------------

def cmd_hom(ns):
    print(hom_dim(ns.u, ns.v))


def cmd_ext(ns):
    print(ext_dim(ns.u, ns.v))


def cmd_rhom(ns):
    print(rhom_dim(ns.u, ns.v, ns.degree))


def cmd_cone(ns):
    print(format_decomposition(cone(ns.u, ns.v), ascii=ns.ascii))


def cmd_fiber(ns):
    print(format_decomposition(fiber(ns.u, ns.v), ascii=ns.ascii))


def cmd_kercoker(ns):
    ker, coker = ker_coker(ns.u, ns.v)
    print(f"ker: {ker if ker else 0}")
    print(f"coker: {coker if coker else 0}")


def cmd_saturate(ns):
    _emit(io.arcset_to_json(saturate(_arcset(ns.set))))


def cmd_is_saturated(ns):
    print("true" if is_saturated(_arcset(ns.set)) else "false")


def cmd_meet(ns):
    _emit(io.arcset_to_json(meet(_saturated(ns.s), _saturated(ns.t))))


def cmd_join(ns):
    _emit(io.arcset_to_json(join(_saturated(ns.s), _saturated(ns.t))))


def cmd_to_ncp(ns):
    _emit(io.ncp_to_json(phi(_saturated(ns.set))))


def cmd_from_ncp(ns):
    _emit(io.arcset_to_json(alpha(_ncp(ns.partition))))


def cmd_ncp_meet(ns):
    _emit(io.ncp_to_json(ncp_meet(_ncp(ns.p), _ncp(ns.q))))


def cmd_ncp_join(ns):
    _emit(io.ncp_to_json(ncp_join(_ncp(ns.p), _ncp(ns.q))))


def cmd_exceptional(ns):
    _emit(io.sequence_to_json(exceptional_sequence(_arcset(ns.set))))


def cmd_quiver(ns):
    obj = _read_json(ns.input)
    if isinstance(obj, dict) and "sequence" in obj:
        seq = io.sequence_from_json(obj)
    else:
        seq = exceptional_sequence(io.arcset_from_json(obj))
    q = endo_quiver(seq)
    if ns.dot:
        sys.stdout.write(quiver_dot(q))
    else:
        _emit(io.quiver_to_json(q))


def cmd_twist(ns):
    t = _target(ns.target)
    if isinstance(t, Arc):
        print(twist(t, ns.by))
    elif isinstance(t, NCPartition):
        raise ParseError("twist acts on arcs and arc sets")
    else:
        _emit(io.arcset_to_json(twist_set(t, ns.by)))


def cmd_reflect(ns):
    t = _target(ns.target)
    if isinstance(t, Arc):
        print(reflect(t, ns.about))
    elif isinstance(t, NCPartition):
        _emit(io.ncp_to_json(reflect_ncp(t, ns.about)))
    else:
        _emit(io.arcset_to_json(reflect_set(t, ns.about)))


def cmd_symmetric(ns):
    print("true" if is_reflection_symmetric(_saturated(ns.set), ns.about) else "false")


def cmd_twist_stable(ns):
    s = _saturated(ns.set)
    stable = is_twist_stable(s, ns.by)
    print("true" if stable else "false")
    if ns.by != 0:
        names = ", ".join(f"{n} ({d})" for n, d in TWIST_STABLE)
        print(f"# thick subcategories stable under all twists: {names}", file=sys.stderr)


def cmd_enumerate(ns):
    pts = list(ns.points)
    if ns.with_minus_inf and NEG_INF not in pts:
        pts.append(NEG_INF)
    sets = enumerate_saturated(pts, cap=ns.cap, method=ns.method)
    if ns.count:
        print(len(sets))
    else:
        for s in sets:
            _emit(io.arcset_to_json(s))


def cmd_verify(ns):
    lo, hi = ns.range
    report = verify_range(lo, hi, ns.window, field=ns.field)
    sys.stdout.write(report.text())
    return 0 if report.ok else 1


def cmd_render(ns):
    s = _arcset(ns.set)
    sys.stdout.write(render_dot(s) if ns.format == "dot" else render_ascii(s))


def _field_arg(text: str) -> int | None:
    if text.upper() == "Q":
        return None
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("field is Q or a prime") from None
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arcmodel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(name, func, help, ascii=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("u", type=_arc_arg)
        p.add_argument("v", type=_arc_arg)
        if ascii:
            p.add_argument("--ascii", action="store_true", help="write S^k and + instead of Σ^k and ⊕")
        p.set_defaults(func=func)
        return p

    pair("hom", cmd_hom, "dim Hom(M_u, M_v)")
    pair("ext", cmd_ext, "dim Ext^1(M_u, M_v)")
    pair("rhom", cmd_rhom, "dim Hom(M_u, Σ^n M_v)").add_argument("--degree", type=int, required=True)
    pair("cone", cmd_cone, "cone of the nonzero map M_u -> M_v", ascii=True)
    pair("fiber", cmd_fiber, "middle term of the non-split extension of u by v", ascii=True)
    pair("kercoker", cmd_kercoker, "kernel and cokernel of the nonzero map M_u -> M_v")

    def one_set(name, func, help, dest="set"):
        p = sub.add_parser(name, help=help)
        p.add_argument(dest, nargs="?", default="-", help="JSON, file path or - for stdin")
        p.set_defaults(func=func)
        return p

    def two(name, func, help, a, b):
        p = sub.add_parser(name, help=help)
        p.add_argument(a)
        p.add_argument(b)
        p.set_defaults(func=func)
        return p

    one_set("saturate", cmd_saturate, "saturation of an arc set")
    one_set("is-saturated", cmd_is_saturated, "test the saturation condition")
    two("meet", cmd_meet, "intersection of saturated sets", "s", "t")
    two("join", cmd_join, "saturation of the union", "s", "t")
    one_set("to-ncp", cmd_to_ncp, "saturated set -> non-crossing partition")
    one_set("from-ncp", cmd_from_ncp, "non-crossing partition -> saturated set", dest="partition")
    two("ncp-meet", cmd_ncp_meet, "meet of non-crossing partitions", "p", "q")
    two("ncp-join", cmd_ncp_join, "join of non-crossing partitions", "p", "q")
    one_set("exceptional", cmd_exceptional, "strong exceptional sequence generating sat(F)")
    one_set("quiver", cmd_quiver, "type-A chains of the endomorphism algebra", dest="input").add_argument(
        "--dot", action="store_true"
    )

    p = sub.add_parser("twist", help="translate by an internal degree")
    p.add_argument("--by", type=int, required=True)
    p.add_argument("target", help="arc a..b or arc-set JSON")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("reflect", help="reflection s_j")
    p.add_argument("--about", type=int, required=True)
    p.add_argument("target", help="arc a..b, arc-set JSON or partition JSON")
    p.set_defaults(func=cmd_reflect)

    one_set("symmetric", cmd_symmetric, "is the saturated set symmetric about j").add_argument(
        "--about", type=int, required=True
    )
    one_set("twist-stable", cmd_twist_stable, "is the saturated set stable under twisting").add_argument(
        "--by", type=int, required=True
    )

    p = sub.add_parser("enumerate", help="all saturated sets on a finite point set")
    p.add_argument("--points", type=_points_arg, required=True, help="comma-separated, e.g. 0,1,2")
    p.add_argument("--count", action="store_true")
    p.add_argument("--with-minus-inf", action="store_true")
    p.add_argument("--method", choices=("auto", "filter", "bijection"), default="auto")
    p.add_argument("--cap", type=int, default=DEFAULT_POINT_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive oracle cross-check")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--range", type=_range_arg, required=True, help="LO..HI")
    p.add_argument("--field", type=_field_arg, default=None, help="Q (default) or a prime")
    p.set_defaults(func=cmd_verify)

    p = one_set("render", cmd_render, "draw an arc diagram")
    p.add_argument("--format", choices=("ascii", "dot"), default="ascii")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = ns.func(ns)
    except ParseError as exc:
        print(f"arcmodel {ns.command}: {exc}", file=sys.stderr)
        return 2
    except ArcModelError as exc:
        print(f"arcmodel {ns.command}: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
