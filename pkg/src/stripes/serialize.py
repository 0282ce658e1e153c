"""JSON and CSV forms of schemes, slopes and result lists.

Floats are always written with 17 significant digits so that a document
re-parses to the exact same doubles.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .closure import HORIZONTAL, GenericSlope, HorizontalSlope, Slope, StructuredSlope
from .core import Scheme


def _encode(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialise {obj!r}")
        return format(0.0 if obj == 0.0 else obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_encode(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_encode(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalars
        return _encode(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return _encode(obj)


def scheme_to_json(scheme: Scheme) -> dict:
    return {"theta": {"cos": scheme.cos_theta, "sin": scheme.sin_theta},
            "epsilon": scheme.epsilon}


def scheme_from_json(doc: dict) -> Scheme:
    theta = doc["theta"]
    eps = doc.get("epsilon")
    if "tan" in theta:
        return Scheme.from_tan(float(theta["tan"]), eps)
    if "degrees" in theta:
        return Scheme.from_degrees(float(theta["degrees"]), eps)
    if "cos" in theta and "sin" in theta:
        return Scheme.from_cos_sin(float(theta["cos"]), float(theta["sin"]), eps)
    raise ValueError(f"unrecognised theta {theta!r}")


def slope_to_json(slope: Slope):
    if isinstance(slope, StructuredSlope):
        return {"structured": {"a": slope.a, "b": slope.b, "d": slope.d}}
    if isinstance(slope, GenericSlope):
        return {"generic": {"s": slope.s}}
    return "horizontal"


def slope_from_json(doc) -> Slope:
    if doc == "horizontal":
        return HORIZONTAL
    if "structured" in doc:
        p = doc["structured"]
        return StructuredSlope(int(p["a"]), int(p["b"]), int(p["d"]))
    if "generic" in doc:
        return GenericSlope(float(doc["generic"]["s"]))
    raise ValueError(f"unrecognised slope {doc!r}")


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format(0.0 if v == 0.0 else v, ".17g") if isinstance(v, float) else v
                    for v in row])
    return buf.getvalue()


_number = {"type": "number"}
_int = {"type": "integer"}

SCHEME_SCHEMA = {
    "type": "object",
    "required": ["theta", "epsilon"],
    "properties": {
        "theta": {"oneOf": [
            {"type": "object", "required": ["tan"], "properties": {"tan": _number},
             "additionalProperties": False},
            {"type": "object", "required": ["cos", "sin"],
             "properties": {"cos": _number, "sin": _number}, "additionalProperties": False},
            {"type": "object", "required": ["degrees"], "properties": {"degrees": _number},
             "additionalProperties": False},
        ]},
        "epsilon": _number,
    },
}

SLOPE_SCHEMA = {"oneOf": [
    {"const": "horizontal"},
    {"type": "object", "required": ["structured"], "additionalProperties": False,
     "properties": {"structured": {"type": "object", "required": ["a", "b", "d"],
                                   "properties": {"a": _int, "b": _int, "d": _int}}}},
    {"type": "object", "required": ["generic"], "additionalProperties": False,
     "properties": {"generic": {"type": "object", "required": ["s"],
                                "properties": {"s": _number}}}},
]}

_point = {"type": "object", "required": ["m", "n", "x", "x_star"],
          "properties": {"m": _int, "n": _int, "k": _int, "x": _number, "x_star": _number}}
_interval = {"type": "array", "items": _number, "minItems": 2, "maxItems": 2}

SCHEMAS = {
    "enumerate": {"type": "object", "required": ["scheme", "points"],
                  "properties": {"scheme": SCHEME_SCHEMA,
                                 "points": {"type": "array", "items": _point}}},
    "classify": {"type": "object", "required": ["scheme", "slope", "classification"],
                 "properties": {"scheme": SCHEME_SCHEMA, "slope": SLOPE_SCHEMA,
                                "classification": {"type": "object", "required": ["kind"]}}},
    "closure": {"type": "object", "required": ["scheme", "slope", "intervals"],
                "properties": {"scheme": SCHEME_SCHEMA, "slope": SLOPE_SCHEMA,
                               "intervals": {"type": "array", "items": _interval}}},
    "trace": {"type": "object", "required": ["scheme", "slope", "intercepts", "containment"],
              "properties": {
                  "scheme": SCHEME_SCHEMA, "slope": SLOPE_SCHEMA,
                  "intercepts": {"type": "array", "items": {
                      "type": "object", "required": ["value", "m", "n", "k"],
                      "properties": {"value": _number, "m": _int, "n": _int, "k": _int}}},
                  "containment": {"type": ["object", "null"]}}},
    "iet": {"type": "object", "required": ["step", "xi", "eta", "invariant_residual"],
            "properties": {"step": _int, "xi": _number, "eta": _number,
                           "invariant_residual": _number}},
    "kronecker": {"type": "object", "required": ["hit", "min_distance", "nearest"],
                  "properties": {"hit": {"type": "boolean"}, "min_distance": _number}},
    "render": {"type": "object", "required": ["lines"],
               "properties": {"lines": {"type": "array", "items": {
                   "type": "object", "required": ["intercept", "count"],
                   "properties": {"intercept": _number, "count": _int}}}}},
}
