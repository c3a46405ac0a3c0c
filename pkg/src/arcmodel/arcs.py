"""Endpoints, arcs and finite arc sets.

An endpoint is either a Python ``int`` or the singleton :data:`NEG_INF`,
which compares below every integer.  An arc ``(a, b)`` with ``a < b`` labels
the suspension orbit of one indecomposable graded module; see
:mod:`arcmodel.hom` for the calculus built on top of these predicates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import DegenerateArc, InvalidArc, ParseError

__all__ = [
    "NEG_INF",
    "MinusInfinity",
    "Endpoint",
    "Arc",
    "ArcSet",
    "make_arc",
    "length",
    "touches",
    "crosses",
    "lex_cmp",
    "is_endpoint",
    "parse_endpoint",
    "format_endpoint",
    "parse_arc",
]


class MinusInfinity:
    """The point at minus infinity, minimal in the endpoint order."""

    _instance: "MinusInfinity | None" = None

    def __new__(cls) -> "MinusInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (MinusInfinity, ())

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"

    def __hash__(self) -> int:
        return hash("arcmodel.NEG_INF")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self:
            return False
        if is_endpoint(other):
            return True
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if is_endpoint(other):
            return True
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if is_endpoint(other):
            return False
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if is_endpoint(other):
            return other is self
        return NotImplemented


NEG_INF = MinusInfinity()

Endpoint = Union[int, MinusInfinity]


def is_endpoint(x: object) -> bool:
    return x is NEG_INF or (isinstance(x, int) and not isinstance(x, bool))


def parse_endpoint(text: str) -> Endpoint:
    t = text.strip()
    if t in ("-inf", "-∞"):
        return NEG_INF
    try:
        return int(t)
    except ValueError:
        raise ParseError(f"not an endpoint: {text!r}") from None


def format_endpoint(x: Endpoint) -> str:
    return "-inf" if x is NEG_INF else str(x)


@dataclass(frozen=True, order=True)
class Arc:
    """An arc ``(left, right)`` with ``left < right`` and ``right`` finite.

    Ordering is lexicographic on ``(left, right)``.
    """

    left: Endpoint
    right: Endpoint

    def __post_init__(self) -> None:
        a, b = self.left, self.right
        if not is_endpoint(a) or not is_endpoint(b):
            raise InvalidArc(f"endpoints must be integers or NEG_INF, got ({a!r}, {b!r})")
        if a == b:
            raise DegenerateArc(f"({a},{b}) is degenerate (the zero object)")
        if b is NEG_INF:
            raise InvalidArc("no arc ends at -inf")
        if a > b:
            raise InvalidArc(f"left endpoint {a} exceeds right endpoint {b}")

    @property
    def is_finite(self) -> bool:
        return self.left is not NEG_INF

    def endpoints(self) -> tuple[Endpoint, Endpoint]:
        return (self.left, self.right)

    def __iter__(self) -> Iterator[Endpoint]:
        yield self.left
        yield self.right

    def __repr__(self) -> str:
        return f"Arc({format_endpoint(self.left)}, {self.right})"

    def __str__(self) -> str:
        return f"{format_endpoint(self.left)}..{self.right}"


def make_arc(a: Endpoint, b: Endpoint) -> Arc:
    return Arc(a, b)


def arc_or_none(a: Endpoint, b: Endpoint) -> Arc | None:
    """``Arc(a, b)`` if the pair is an arc, otherwise ``None`` (zero object)."""
    if b is NEG_INF or not a < b:
        return None
    return Arc(a, b)


def parse_arc(text: str) -> Arc:
    """Parse the ``a..b`` syntax, e.g. ``-inf..5`` or ``0..3``."""
    left, sep, right = text.strip().partition("..")
    if not sep:
        raise ParseError(f"expected '<a>..<b>', got {text!r}")
    b = parse_endpoint(right)
    if b is NEG_INF:
        raise InvalidArc("no arc ends at -inf")
    return Arc(parse_endpoint(left), b)


def length(u: Arc) -> float | int:
    """``b - a`` for a finite arc, ``math.inf`` when the left end is -inf."""
    if u.left is NEG_INF:
        return math.inf
    return u.right - u.left


def touches(u: Arc, v: Arc) -> bool:
    a, b = u
    c, d = v
    return (a <= c <= b <= d) or (c <= a <= d <= b)


def crosses(u: Arc, v: Arc) -> bool:
    a, b = u
    c, d = v
    return (a < c < b < d) or (c < a < d < b)


def lex_cmp(u: Arc, v: Arc) -> int:
    """-1, 0 or 1 as ``u`` is below, equal to or above ``v`` lexicographically."""
    if u == v:
        return 0
    return -1 if u < v else 1


class ArcSet:
    """Immutable finite set of arcs, iterated in lexicographic order."""

    __slots__ = ("_arcs", "_sorted")

    def __init__(self, arcs: Iterable[Arc] = ()) -> None:
        fs = frozenset(arcs)
        for u in fs:
            if not isinstance(u, Arc):
                raise TypeError(f"ArcSet members must be Arc, got {u!r}")
        self._arcs = fs
        self._sorted = tuple(sorted(fs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Endpoint, Endpoint]]):
        return cls(Arc(a, b) for a, b in pairs)

    @property
    def arcs(self) -> frozenset[Arc]:
        return self._arcs

    def __iter__(self) -> Iterator[Arc]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._arcs)

    def __contains__(self, u: object) -> bool:
        return u in self._arcs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ArcSet):
            return self._arcs == other._arcs
        if isinstance(other, (set, frozenset)):
            return self._arcs == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._arcs)

    def __le__(self, other: "ArcSet") -> bool:
        return self._arcs <= other._arcs

    def __lt__(self, other: "ArcSet") -> bool:
        return self._arcs < other._arcs

    def __repr__(self) -> str:
        body = ", ".join(str(u) for u in self._sorted)
        return f"{type(self).__name__}({{{body}}})"

    def sort_key(self) -> tuple:
        """Deterministic total order used for listings: size, then arcs."""
        return (len(self._sorted), self._sorted)

    def endpoints(self) -> list[Endpoint]:
        pts = {x for u in self._arcs for x in u}
        return sorted(pts)

    def is_finite_type(self) -> bool:
        """True when every arc has finite length."""
        return all(u.is_finite for u in self._arcs)

    def union(self, other: Iterable[Arc]) -> "ArcSet":
        return ArcSet(self._arcs | frozenset(other))

    def intersection(self, other: Iterable[Arc]) -> "ArcSet":
        return ArcSet(self._arcs & frozenset(other))
