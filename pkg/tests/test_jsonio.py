from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from sfindex import corpus
from sfindex.errors import AdmissibilityError, SchemaError
from sfindex.jsonio import (
    detect_kind,
    dumps,
    family_from_json,
    family_to_json,
    homotopy_from_json,
    homotopy_to_json,
    load_any,
    operator_from_json,
    operator_to_json,
    poly_from_text,
    read_json,
)
from sfindex.opmodel import DirectSum, OmegaShift, ShiftBand, s_plus
from sfindex.poly import Poly
from sfindex.regmem import RatSpectrumMatrix

DATA = Path(__file__).parent / "data"


def _through_text(doc):
    return json.loads(dumps(doc))


def test_operator_round_trip():
    rng = random.Random(0)
    ops = [OmegaShift("fwd"), OmegaShift("id"), ShiftBand(monomial=False),
           DirectSum((s_plus(), OmegaShift("bwd"))), corpus.rat_spectrum_matrix(rng, 4)]
    for _ in range(30):
        ops.append(corpus.shift_op(rng)[0])
        ops.append(corpus.matrix_op(rng, rng.randint(1, 4)))
    for t in ops:
        assert operator_from_json(_through_text(operator_to_json(t))) == t


def test_family_and_homotopy_round_trip():
    rng = random.Random(1)
    for _ in range(5):
        f = corpus.family(rng, kinds=("shift", "matrix", "omega", "sum"))
        assert family_from_json(_through_text(family_to_json(f))) == f
        h = corpus.homotopy(rng)
        assert homotopy_from_json(_through_text(homotopy_to_json(h))) == h


def test_non_normal_shift_input_is_normalized():
    t = operator_from_json({"type": "shiftband", "fwd": 2, "bwd": 1})
    # S+^2 S- = S+ (I - P_0) = S+ - E_10
    assert (t.fwd, t.bwd) == (1, 0)
    assert t.window.to_json() == [["0", "0"], ["-1", "0"]]


def test_schema_errors_carry_paths():
    with pytest.raises(SchemaError) as exc:
        operator_from_json({"type": "matrix", "entries": [[1, 2], [3]]})
    assert exc.value.path == "$.entries[1]"
    with pytest.raises(SchemaError) as exc:
        operator_from_json({"type": "shiftband", "fwd": 0, "bwd": 0, "window": {"size": 2, "entries": [[1]]}})
    assert exc.value.path == "$.window.entries"
    with pytest.raises(SchemaError):
        operator_from_json({"type": "matrix", "entries": [["0.5"]]})
    with pytest.raises(SchemaError):
        operator_from_json({"type": "omegashift", "dir": "sideways"})
    with pytest.raises(SchemaError) as exc:
        operator_from_json({"type": "ratspectrum", "matrix": [[1, 0], [0, 2]], "eigenvalues": [1, 1]})
    assert exc.value.path == "$.eigenvalues"


def test_space_errors_name_the_edge():
    with pytest.raises(SchemaError) as exc:
        load_any(read_json(DATA / "unknown_vertex_space.json"))
    assert exc.value.path == "$.edges[1]"
    doc = read_json(DATA / "two_component_family.json")
    doc["space"]["edges"].append(["v0", "nowhere"])
    with pytest.raises(SchemaError) as exc:
        family_from_json(doc)
    assert exc.value.path == "$.space.edges[3]"


def test_admissibility_from_files():
    with pytest.raises(AdmissibilityError) as exc:
        load_any(read_json(DATA / "mismatch_family.json"))
    assert exc.value.edge_index == 0
    with pytest.raises(AdmissibilityError) as exc:
        load_any(read_json(DATA / "planted_jump_homotopy.json"))
    assert "$.steps[1]" in str(exc.value)


def test_read_json_reports_position(tmp_path):
    with pytest.raises(SchemaError) as exc:
        read_json(DATA / "malformed.json")
    assert "line 2" in str(exc.value)
    with pytest.raises(SchemaError):
        read_json(tmp_path / "missing.json")


def test_detect_kind_and_ratspectrum():
    assert detect_kind({"type": "matrix", "entries": []}) == "operator"
    assert detect_kind({"space": {"vertices": []}, "steps": []}) == "homotopy"
    kind, t = load_any(read_json(DATA / "ratspec.json"))
    assert kind == "operator" and isinstance(t, RatSpectrumMatrix)
    with pytest.raises(SchemaError):
        detect_kind([1, 2])


def test_poly_text():
    assert poly_from_text("1,0,-2") == Poly.of(1, 0, -2)
    assert poly_from_text('["1/2", 3]') == Poly.of("1/2", 3)
    with pytest.raises(SchemaError):
        poly_from_text("1,x")
