import json
import random

import pytest

from descriptor_gen import random_variety
from motive_atlas.jsonio import SchemaError, descriptor_from_json, descriptor_to_json, verdict_to_json
from motive_atlas.twisted import classify_pair


def test_round_trip_random_descriptors():
    rng = random.Random(7)
    for _ in range(500):
        x = random_variety(rng)
        obj = json.loads(json.dumps(descriptor_to_json(x)))
        assert descriptor_from_json(obj) == x


def test_defaults():
    x = descriptor_from_json({"kind": "sb_flag", "steps": [1], "algebra": {"degree": 3, "index": 3, "exponent": 3}})
    assert x.algebra.class_id == "A" and x.algebra.op is False


@pytest.mark.parametrize("obj,where", [
    ({}, "kind"),
    ({"kind": "torus"}, "kind"),
    ({"kind": "quadric", "dim": 0, "form_id": "q"}, "dim"),
    ({"kind": "quadric", "dim": 3, "form_id": "q", "colour": "red"}, "colour"),
    ({"kind": "g2", "cocycle_id": "x", "split": False, "parabolic": 3}, "parabolic"),
    ({"kind": "sb_flag", "steps": [1], "algebra": {"degree": 4, "index": 3, "exponent": 3}}, "index must divide degree"),
    ({"kind": "sb_flag", "steps": [], "algebra": {"degree": 4, "index": 1, "exponent": 1}}, "steps"),
    ({"kind": "split", "factors": [{"type": "B1", "theta": []}]}, "B1"),
    ({"kind": "bc", "family": "B", "rank": 3, "l": 5, "cocycle_id": "g", "split": False}, "l must"),
])
def test_schema_errors(obj, where):
    with pytest.raises(SchemaError, match=where):
        descriptor_from_json(obj)


def test_verdict_json_shape():
    a = descriptor_from_json({"kind": "quadric", "dim": 3, "form_id": "q", "anisotropic": True})
    b = descriptor_from_json({"kind": "sb_flag", "steps": [1], "algebra": {"degree": 4, "index": 4, "exponent": 4}})
    out = verdict_to_json(classify_pair(a, b))
    assert set(out) == {"conclusion", "motives_isomorphic", "reason", "trace"}
    assert out["motives_isomorphic"] is False
    assert [e["rule"] for e in out["trace"]] == ["R0", "R1"]
    assert all(set(e) == {"rule", "citation", "facts"} for e in out["trace"])
