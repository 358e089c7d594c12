"""Versioned JSON documents for the values the command line emits."""

from __future__ import annotations

import json

from .categories import GHomElement, HomPoset, SubsetMorphism, enumerate_nerve
from .core import SzResult, VerifyReport
from .simplicial_ops import NormalOperator

SCHEMA_VERSION = 1


def ghom_to_dict(g: GHomElement) -> dict:
    return {"n": g.n, "p": g.p, "q": g.q, "positions": g.to_list(), "pretty": g.pretty()}


def ghom_from_dict(data: dict) -> GHomElement:
    return GHomElement(data["n"], data["p"], data["q"], tuple(data["positions"]))


def subset_to_dict(u: SubsetMorphism) -> dict:
    return {"n": u.n, "p": u.p, "q": u.q, "members": u.to_list()}


def subset_from_dict(data: dict) -> SubsetMorphism:
    return SubsetMorphism(data["n"], data["p"], data["q"], tuple(data["members"]))


def _element_from_list(poset: HomPoset, values):
    if poset.kind == "c":
        return SubsetMorphism(poset.n, poset.p, poset.q, tuple(values))
    return GHomElement(poset.n, poset.p, poset.q, tuple(values))


def hom_to_dict(poset: HomPoset, max_dim: int, nondegenerate_only: bool = True) -> dict:
    return {
        "kind": poset.kind,
        "n": poset.n,
        "p": poset.p,
        "q": poset.q,
        "size": poset.size(),
        "elements": [e.to_list() for e in poset.elements()],
        "nondegenerate_only": nondegenerate_only,
        "nerve": [
            {"dim": ell, "chains": [[e.to_list() for e in c] for c in enumerate_nerve(poset, ell, nondegenerate_only)]}
            for ell in range(max_dim + 1)
        ],
    }


def hom_from_dict(data: dict) -> tuple[HomPoset, list, dict[int, list[tuple]]]:
    poset = HomPoset(data["kind"], data["n"], data["p"], data["q"])
    elements = [_element_from_list(poset, e) for e in data["elements"]]
    nerve = {
        level["dim"]: [tuple(_element_from_list(poset, e) for e in chain) for chain in level["chains"]]
        for level in data["nerve"]
    }
    return poset, elements, nerve


_ENCODERS = {
    "compute": SzResult.to_dict,
    "hin": ghom_to_dict,
    "verify": VerifyReport.to_dict,
    "operator": NormalOperator.to_dict,
}

_DECODERS = {
    "compute": SzResult.from_dict,
    "hin": ghom_from_dict,
    "verify": VerifyReport.from_dict,
    "operator": NormalOperator.from_dict,
    "hom": hom_from_dict,
}


def dumps(command: str, value, **extra) -> str:
    """Wrap ``value`` in a document; ``hom`` takes an already encoded dict."""
    payload = value if command == "hom" else _ENCODERS[command](value)
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "result": payload}
    doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str):
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    return _DECODERS[doc["command"]](doc["result"])
