"""JSON encodings for arc sets, partitions and exceptional sequences.

-inf is encoded as the string ``"-inf"``; every list is emitted in sorted
order so that encoding is deterministic.
"""
from __future__ import annotations

import json
from typing import Any

from .arcs import NEG_INF, Arc, ArcSet, Endpoint, is_endpoint
from .errors import ParseError
from .exceptional import ChainQuiver, ExceptionalSequence
from .ncp import NCPartition
from .saturation import SaturatedArcSet


def endpoint_to_json(x: Endpoint):
    return "-inf" if x is NEG_INF else x


def endpoint_from_json(x: Any) -> Endpoint:
    if x == "-inf":
        return NEG_INF
    if isinstance(x, int) and is_endpoint(x):
        return x
    raise ParseError(f"bad endpoint {x!r}: expected an integer or \"-inf\"")


def arc_to_json(u: Arc) -> list:
    return [endpoint_to_json(u.left), endpoint_to_json(u.right)]


def arc_from_json(obj: Any) -> Arc:
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError(f"an arc is a two-element list, got {obj!r}")
    return Arc(endpoint_from_json(obj[0]), endpoint_from_json(obj[1]))


def arcset_to_json(s: ArcSet) -> dict:
    out: dict = {"arcs": [arc_to_json(u) for u in s]}
    if isinstance(s, SaturatedArcSet):
        out["saturated"] = True
    return out


def arcset_from_json(obj: Any) -> ArcSet:
    """Decode ``{"arcs": [...]}``; with ``"saturated": true`` the invariant is re-checked."""
    if not isinstance(obj, dict) or not isinstance(obj.get("arcs"), list):
        raise ParseError('expected an object with an "arcs" list')
    arcs = [arc_from_json(a) for a in obj["arcs"]]
    if obj.get("saturated") is True:
        return SaturatedArcSet(arcs)
    return ArcSet(arcs)


def ncp_to_json(p: NCPartition) -> dict:
    return {"blocks": [[endpoint_to_json(x) for x in b] for b in p.blocks]}


def ncp_from_json(obj: Any) -> NCPartition:
    if not isinstance(obj, dict) or not isinstance(obj.get("blocks"), list):
        raise ParseError('expected an object with a "blocks" list')
    blocks = []
    for b in obj["blocks"]:
        if not isinstance(b, list):
            raise ParseError(f"a block is a list of endpoints, got {b!r}")
        blocks.append([endpoint_from_json(x) for x in b])
    return NCPartition(blocks)


def sequence_to_json(e: ExceptionalSequence) -> dict:
    return {"sequence": [arc_to_json(u) for u in e.arcs]}


def sequence_from_json(obj: Any) -> ExceptionalSequence:
    if not isinstance(obj, dict) or not isinstance(obj.get("sequence"), list):
        raise ParseError('expected an object with a "sequence" list')
    return ExceptionalSequence(tuple(arc_from_json(a) for a in obj["sequence"]))


def quiver_to_json(q: ChainQuiver) -> dict:
    return {"chains": [[arc_to_json(u) for u in c] for c in q.chains]}


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
