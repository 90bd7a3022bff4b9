"""JSON encoding of operators, parameter spaces, families and homotopies.

Rationals travel as strings ``"p/q"`` (or ``"p"``); integers are accepted on
input. Structure is checked with JSON Schema, then semantic invariants
(square matrices, window sizes, certified spectra, admissibility) are checked
while building the values.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .errors import AdmissibilityError, SchemaError
from .family import Homotopy, OpFamily, ParamSpace
from .opmodel import DirectSum, MatrixOp, OmegaShift, Operator, ShiftBand
from .poly import Poly
from .ratlin import Mat, to_rat

_RAT = {"anyOf": [{"type": "string", "pattern": r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$"}, {"type": "integer"}]}
_ROWS = {"type": "array", "items": {"type": "array", "items": _RAT}}

OPERATOR_SCHEMA: dict[str, Any] = {
    "$defs": {
        "op": {
            "oneOf": [
                {"type": "object", "required": ["type", "entries"], "additionalProperties": False,
                 "properties": {"type": {"const": "matrix"}, "entries": _ROWS}},
                {"type": "object", "required": ["type", "fwd", "bwd"], "additionalProperties": False,
                 "properties": {
                     "type": {"const": "shiftband"},
                     "fwd": {"type": "integer", "minimum": 0},
                     "bwd": {"type": "integer", "minimum": 0},
                     "monomial": {"type": "boolean"},
                     "window": {"type": "object", "required": ["size", "entries"], "additionalProperties": False,
                                "properties": {"size": {"type": "integer", "minimum": 0}, "entries": _ROWS}},
                 }},
                {"type": "object", "required": ["type", "dir"], "additionalProperties": False,
                 "properties": {"type": {"const": "omegashift"}, "dir": {"enum": ["fwd", "bwd", "id"]}}},
                {"type": "object", "required": ["type", "parts"], "additionalProperties": False,
                 "properties": {"type": {"const": "directsum"},
                                "parts": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/op"}}}},
                {"type": "object", "required": ["type", "matrix", "eigenvalues"], "additionalProperties": False,
                 "properties": {"type": {"const": "ratspectrum"}, "matrix": _ROWS,
                                "eigenvalues": {"type": "array", "items": _RAT}}},
            ]
        },
        "space": {
            "type": "object", "required": ["vertices"], "additionalProperties": False,
            "properties": {
                "vertices": {"type": "array", "items": {"type": "string"}},
                "edges": {"type": "array",
                          "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "string"}}},
            },
        },
        "ops": {"type": "object", "additionalProperties": {"$ref": "#/$defs/op"}},
    },
    "$ref": "#/$defs/op",
}

SPACE_SCHEMA = {"$defs": OPERATOR_SCHEMA["$defs"], "$ref": "#/$defs/space"}
FAMILY_SCHEMA = {
    "$defs": OPERATOR_SCHEMA["$defs"],
    "type": "object", "required": ["space", "ops"], "additionalProperties": False,
    "properties": {"space": {"$ref": "#/$defs/space"}, "ops": {"$ref": "#/$defs/ops"}},
}
HOMOTOPY_SCHEMA = {
    "$defs": OPERATOR_SCHEMA["$defs"],
    "type": "object", "required": ["space", "steps"], "additionalProperties": False,
    "properties": {
        "space": {"$ref": "#/$defs/space"},
        "steps": {"type": "array", "minItems": 1,
                  "items": {"anyOf": [
                      {"type": "object", "required": ["ops"], "additionalProperties": False,
                       "properties": {"ops": {"$ref": "#/$defs/ops"}}},
                      {"$ref": "#/$defs/ops"},
                  ]}},
    },
}


def _validate(doc: Any, schema: dict) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    err = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if err is not None:
        raise SchemaError(err.message, err.json_path)


def _mat(rows: list, path: str, size: int | None = None) -> Mat:
    n = len(rows)
    if size is not None and n != size:
        raise SchemaError(f"expected {size} rows, found {n}", path)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise SchemaError(f"row {i} has {len(r)} entries; matrix must be square of size {n}", f"{path}[{i}]")
    try:
        return Mat.from_rows([[to_rat(x) for x in r] for r in rows], n)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc), path) from exc


# --- operators ------------------------------------------------------------------------------

def operator_from_json(doc: Any, path: str = "$", validate: bool = True):
    """Build an operator (or a rational-spectrum matrix) from decoded JSON."""
    if validate:
        _validate(doc, OPERATOR_SCHEMA)
    kind = doc["type"]
    if kind == "matrix":
        return MatrixOp(_mat(doc["entries"], f"{path}.entries"))
    if kind == "shiftband":
        w = doc.get("window", {"size": 0, "entries": []})
        window = _mat(w["entries"], f"{path}.window.entries", w["size"])
        return ShiftBand(doc["fwd"], doc["bwd"], window, doc.get("monomial", True))
    if kind == "omegashift":
        return OmegaShift(doc["dir"])
    if kind == "directsum":
        return DirectSum(tuple(operator_from_json(p, f"{path}.parts[{i}]", False)
                               for i, p in enumerate(doc["parts"])))
    from .errors import PreconditionError
    from .regmem import RatSpectrumMatrix

    m = _mat(doc["matrix"], f"{path}.matrix")
    try:
        return RatSpectrumMatrix(m, tuple(to_rat(x) for x in doc["eigenvalues"]))
    except PreconditionError as exc:
        raise SchemaError(str(exc), f"{path}.eigenvalues") from exc


def operator_to_json(t) -> dict:
    match t:
        case MatrixOp():
            return {"type": "matrix", "entries": t.mat.to_json()}
        case ShiftBand():
            out: dict[str, Any] = {"type": "shiftband", "fwd": t.fwd, "bwd": t.bwd,
                                   "window": {"size": t.W, "entries": t.window.to_json()}}
            if not t.monomial:
                out["monomial"] = False
            return out
        case OmegaShift():
            return {"type": "omegashift", "dir": t.dir}
        case DirectSum():
            return {"type": "directsum", "parts": [operator_to_json(p) for p in t.parts]}
    if hasattr(t, "to_json"):
        return t.to_json()
    raise TypeError(f"cannot serialise {type(t).__name__}")


# --- spaces, families, homotopies --------------------------------------------------------------

def space_from_json(doc: Any, path: str = "$", validate: bool = True) -> ParamSpace:
    if validate:
        _validate(doc, SPACE_SCHEMA)
    try:
        return ParamSpace(tuple(doc["vertices"]), tuple(tuple(e) for e in doc.get("edges", [])))
    except SchemaError as exc:
        raise SchemaError(str(exc).split(": ", 1)[-1], path + exc.path[1:]) from exc


def _ops(doc: dict, path: str) -> dict[str, Operator]:
    out = {}
    for v, op in doc.items():
        t = operator_from_json(op, f"{path}.{v}", False)
        out[v] = getattr(t, "op", t)  # a certified-spectrum matrix acts as its matrix
    return out


def family_from_json(doc: Any, validate: bool = True) -> OpFamily:
    if validate:
        _validate(doc, FAMILY_SCHEMA)
    space = space_from_json(doc["space"], "$.space", False)
    return OpFamily(space, _ops(doc["ops"], "$.ops"))


def family_to_json(f: OpFamily) -> dict:
    return {"space": f.space.to_json(), "ops": {v: operator_to_json(t) for v, t in f.ops.items()}}


def homotopy_from_json(doc: Any, validate: bool = True) -> Homotopy:
    if validate:
        _validate(doc, HOMOTOPY_SCHEMA)
    space = space_from_json(doc["space"], "$.space", False)
    steps = []
    for i, step in enumerate(doc["steps"]):
        wrapped = set(step) == {"ops"} and "ops" not in space.vertices
        ops = step["ops"] if wrapped else step
        try:
            steps.append(OpFamily(space, _ops(ops, f"$.steps[{i}]")))
        except AdmissibilityError as exc:
            raise AdmissibilityError(f"$.steps[{i}]: {exc}", exc.edge, exc.edge_index) from exc
    return Homotopy(space, tuple(steps))


def homotopy_to_json(h: Homotopy) -> dict:
    return {"space": h.space.to_json(),
            "steps": [{v: operator_to_json(t) for v, t in s.ops.items()} for s in h.steps]}


def poly_from_json(doc: Any) -> Poly:
    """Coefficient list, low degree first, as rational strings or integers."""
    if not isinstance(doc, list):
        raise SchemaError("polynomial must be a list of coefficients", "$")
    try:
        return Poly(tuple(to_rat(c) for c in doc))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc), "$") from exc


def poly_from_text(text: str) -> Poly:
    """``"1,0,-2"`` or a JSON list; coefficients low degree first."""
    text = text.strip()
    if text.startswith("["):
        return poly_from_json(json.loads(text))
    return poly_from_json([c.strip() for c in text.split(",") if c.strip()])


def detect_kind(doc: Any) -> str:
    if isinstance(doc, dict):
        if "type" in doc:
            return "operator"
        if "steps" in doc:
            return "homotopy"
        if "ops" in doc:
            return "family"
        if "vertices" in doc:
            return "space"
    raise SchemaError("unrecognised document: expected an operator, space, family or homotopy", "$")


def load_any(doc: Any):
    kind = detect_kind(doc)
    loader = {"operator": operator_from_json, "homotopy": homotopy_from_json,
              "family": family_from_json, "space": space_from_json}[kind]
    return kind, loader(doc)


def read_json(path: str | Path) -> Any:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {p}: {exc.strerror}", str(p)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", str(p)) from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=str)

