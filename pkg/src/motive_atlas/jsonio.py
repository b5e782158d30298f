"""JSON wire format for twisted-variety descriptors and verdicts.

Descriptors are objects tagged by ``kind``::

    {"kind": "sb_flag", "steps": [1, 3],
     "algebra": {"class_id": "A", "op": false, "degree": 4, "index": 4, "exponent": 4}}
    {"kind": "quadric", "dim": 3, "form_id": "q", "anisotropic": true, "split": false}
    {"kind": "g2", "cocycle_id": "xi", "split": false, "parabolic": 2}
    {"kind": "bc", "family": "C", "rank": 3, "l": 1, "cocycle_id": "g", "split": false}
    {"kind": "split", "factors": [{"type": "B2", "theta": []}]}

A verdict serializes as ``{"conclusion", "motives_isomorphic", "reason",
"trace": [{"rule", "citation", "facts"}]}``.
"""

from __future__ import annotations

from typing import Any

import jsonschema

from .motive import FlagDescriptor
from .rootsys import InvalidTypeError, SimpleType
from .twisted import (
    BCForm,
    BrauerDescriptor,
    G2Form,
    InvalidDescriptorError,
    Quadric,
    SBFlag,
    SplitVariety,
    TwistedVariety,
    Verdict,
)

_POS = {"type": "integer", "minimum": 1}
_LABEL = {"type": "string", "minLength": 1}

ALGEBRA_SCHEMA = {
    "type": "object",
    "properties": {
        "class_id": _LABEL,
        "op": {"type": "boolean"},
        "degree": _POS,
        "index": _POS,
        "exponent": _POS,
    },
    "required": ["degree", "index", "exponent"],
    "additionalProperties": False,
}

KIND_SCHEMAS: dict[str, dict] = {
    "sb_flag": {
        "properties": {
            "kind": {"const": "sb_flag"},
            "algebra": ALGEBRA_SCHEMA,
            "steps": {"type": "array", "items": _POS, "minItems": 1},
        },
        "required": ["kind", "algebra", "steps"],
    },
    "quadric": {
        "properties": {
            "kind": {"const": "quadric"},
            "dim": _POS,
            "form_id": _LABEL,
            "anisotropic": {"type": "boolean"},
            "split": {"type": "boolean"},
        },
        "required": ["kind", "dim", "form_id"],
    },
    "g2": {
        "properties": {
            "kind": {"const": "g2"},
            "cocycle_id": _LABEL,
            "split": {"type": "boolean"},
            "parabolic": {"enum": [1, 2]},
        },
        "required": ["kind", "cocycle_id", "split", "parabolic"],
    },
    "bc": {
        "properties": {
            "kind": {"const": "bc"},
            "family": {"enum": ["B", "C"]},
            "rank": {"type": "integer", "minimum": 2},
            "l": _POS,
            "cocycle_id": _LABEL,
            "split": {"type": "boolean"},
        },
        "required": ["kind", "family", "rank", "l", "cocycle_id", "split"],
    },
    "split": {
        "properties": {
            "kind": {"const": "split"},
            "factors": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "properties": {
                        "type": {"type": "string"},
                        "theta": {"type": "array", "items": _POS},
                    },
                    "required": ["type", "theta"],
                    "additionalProperties": False,
                },
            },
        },
        "required": ["kind", "factors"],
    },
}

for _s in KIND_SCHEMAS.values():
    _s.update(type="object", additionalProperties=False)

DESCRIPTOR_SCHEMA = {
    "type": "object",
    "properties": {"kind": {"enum": sorted(KIND_SCHEMAS)}},
    "required": ["kind"],
}


class SchemaError(ValueError):
    pass


def _check(obj: Any, schema: dict) -> None:
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as e:
        where = "/".join(map(str, e.absolute_path)) or "<root>"
        raise SchemaError(f"{where}: {e.message}") from None


def descriptor_from_json(obj: Any) -> TwistedVariety:
    _check(obj, DESCRIPTOR_SCHEMA)
    kind = obj["kind"]
    _check(obj, KIND_SCHEMAS[kind])
    try:
        if kind == "sb_flag":
            a = obj["algebra"]
            alg = BrauerDescriptor(
                a.get("class_id", "A"), a.get("op", False), a["degree"], a["index"], a["exponent"]
            )
            return SBFlag(alg, tuple(obj["steps"]))
        if kind == "quadric":
            return Quadric(obj["dim"], obj["form_id"], obj.get("anisotropic", False), obj.get("split", False))
        if kind == "g2":
            return G2Form(obj["cocycle_id"], obj["split"], obj["parabolic"])
        if kind == "bc":
            return BCForm(obj["family"], obj["rank"], obj["l"], obj["cocycle_id"], obj["split"])
        factors = [SimpleType.parse(f["type"]) for f in obj["factors"]]
        return SplitVariety(FlagDescriptor(tuple(factors), tuple(frozenset(f["theta"]) for f in obj["factors"])))
    except (InvalidDescriptorError, InvalidTypeError, ValueError) as e:
        raise SchemaError(str(e)) from None


def descriptor_to_json(x: TwistedVariety) -> dict:
    if isinstance(x, SBFlag):
        a = x.algebra
        return {
            "kind": "sb_flag",
            "algebra": {"class_id": a.class_id, "op": a.op, "degree": a.degree, "index": a.index, "exponent": a.exponent},
            "steps": list(x.steps),
        }
    if isinstance(x, Quadric):
        return {"kind": "quadric", "dim": x.dim, "form_id": x.form_id, "anisotropic": x.anisotropic, "split": x.split}
    if isinstance(x, G2Form):
        return {"kind": "g2", "cocycle_id": x.cocycle_id, "split": x.split, "parabolic": x.parabolic}
    if isinstance(x, BCForm):
        return {"kind": "bc", "family": x.family, "rank": x.rank, "l": x.l, "cocycle_id": x.cocycle_id, "split": x.split}
    if isinstance(x, SplitVariety):
        d = x.descriptor
        return {
            "kind": "split",
            "factors": [{"type": str(t), "theta": sorted(th)} for t, th in zip(d.factors, d.theta)],
        }
    raise TypeError(f"not a twisted variety: {x!r}")


def verdict_to_json(v: Verdict) -> dict:
    return {
        "conclusion": v.conclusion.value,
        "motives_isomorphic": v.motives_isomorphic,
        "reason": v.reason,
        "trace": [{"rule": e.rule, "citation": e.citation, "facts": list(e.facts)} for e in v.trace],
    }
