"""Round-trip and schema tests for the JSON layer.

Every ``*_from_json`` validates against the shipped schema before touching a
constructor, so structural garbage must raise ``jsonschema.ValidationError``
while value-level garbage (legal shape, illegal mathematics) must keep
raising ``DomainError``.  Emission is canonical: sorted keys, no spaces, no
NaN — byte-identical across calls.
"""

from __future__ import annotations

import json
import math

import jsonschema
import pytest

from hpiso import (
    DomainError,
    IsometrySpec,
    ZeroSequence,
    classify,
    construct_nonzero_intersection,
    construct_zero_intersection,
    decide_crownover,
    decide_equivalent,
    identity,
    normalized_factor,
    standard_hyperbolic,
)
from hpiso import serialize as ser

from conftest import (
    interior_point,
    phi_parabolic_plus,
    random_automorphism,
    random_by_kind,
    unimodular,
)


def test_complex_round_trip(rng):
    for _ in range(20):
        z = complex(rng.normal(), rng.normal())
        obj = ser.complex_to_json(z)
        assert set(obj) == {"re", "im"}
        assert ser.complex_from_json(obj) == z
    with pytest.raises(jsonschema.ValidationError):
        ser.complex_from_json({"re": 1.0})
    with pytest.raises(jsonschema.ValidationError):
        ser.complex_from_json({"re": 1.0, "im": 0.0, "abs": 1.0})
    with pytest.raises(jsonschema.ValidationError):
        ser.complex_from_json({"re": "1.0", "im": 0.0})


def test_automorphism_round_trip(rng):
    for _ in range(50):
        phi = random_automorphism(rng)
        obj = ser.automorphism_to_json(phi)
        ser.validate("automorphism", obj)
        back = ser.automorphism_from_json(obj)
        assert back.lam == phi.lam and back.a == phi.a
    with pytest.raises(DomainError):
        ser.automorphism_from_json(
            {"lambda": {"re": 1.0, "im": 0.0}, "a": {"re": 2.0, "im": 0.0}}
        )


def test_classification_shape(rng):
    for kind in ("Hyperbolic", "Parabolic", "Elliptic"):
        obj = ser.classification_to_json(classify(random_by_kind(rng, kind)))
        ser.validate("classification", obj)
        assert obj["kind"] == kind
    obj = ser.classification_to_json(classify(identity()))
    ser.validate("classification", obj)
    assert obj["kind"] == "Identity" and obj["fixed_points"] == []
    assert obj["orientation"] is None


def test_sequence_round_trips(rng):
    explicit = ZeroSequence.explicit([interior_point(rng, 0.8) for _ in range(5)])
    orbit = ZeroSequence.orbit(
        normalized_factor(interior_point(rng, 0.5)), random_automorphism(rng)
    )
    forward = ZeroSequence.forward_orbit(phi_parabolic_plus())
    for seq in (explicit, orbit, forward):
        obj = ser.sequence_to_json(seq)
        ser.validate("sequence", obj)
        back = ser.sequence_from_json(obj)
        assert back.kind == seq.kind
        depth = 2 if seq.is_explicit else 4
        assert back.terms_up_to(depth) == seq.terms_up_to(depth)
    with pytest.raises(jsonschema.ValidationError):
        ser.sequence_from_json({"kind": "Orbit"})


def test_construction_round_trip():
    back_con = construct_zero_intersection(standard_hyperbolic(0.5))
    thin_con = construct_nonzero_intersection(phi_parabolic_plus(), 3)
    for con in (back_con, thin_con):
        obj = ser.construction_to_json(con)
        ser.validate("construction", obj)
        got = ser.construction_from_json(obj)
        assert got.kind == con.kind
        assert got.indices == con.indices
        assert got.budget == pytest.approx(con.budget)
    with pytest.raises(jsonschema.ValidationError):
        ser.construction_from_json({"kind": "SomethingElse", "phi": ser.automorphism_to_json(identity())})


def test_spec_round_trip_fuzz(rng):
    # 1000 random specs: every emitted object re-parses under the same schema
    # and the parse is faithful (constructors may renormalize a last ulp)
    for k in range(1000):
        phi = random_automorphism(rng)
        codim = int(rng.integers(0, 4))
        factors = tuple(
            normalized_factor(interior_point(rng, 0.85)) for _ in range(codim)
        )
        p = float(rng.choice([1.0, 1.5, 3.0, 4.0]))
        spec = IsometrySpec(p, unimodular(rng), factors, phi)
        obj = ser.spec_to_json(spec)
        ser.validate("spec", obj)
        text = ser.dumps(obj)
        back = ser.spec_from_json(json.loads(text))
        assert back.p == spec.p
        assert back.phase == pytest.approx(spec.phase, abs=1e-15)
        assert back.phi.a == spec.phi.a
        assert back.phi.lam == pytest.approx(spec.phi.lam, abs=1e-15)
        for f1, f2 in zip(spec.psi_zeros, back.psi_zeros):
            assert f1.a == f2.a and f2.lam == pytest.approx(f1.lam, abs=1e-15)
        # re-emission of the parse is stable from the first generation on
        text2 = ser.dumps(ser.spec_to_json(back))
        ser.validate("spec", json.loads(text2))
        assert ser.dumps(ser.spec_to_json(ser.spec_from_json(json.loads(text2)))) == text2


def test_infinite_spec_round_trip():
    phi = standard_hyperbolic(0.5)
    spec = IsometrySpec(3.0, 1.0, (), phi, infinite=construct_zero_intersection(phi))
    obj = ser.spec_to_json(spec)
    ser.validate("spec", obj)
    back = ser.spec_from_json(obj)
    assert back.infinite is not None
    assert back.infinite.kind == "BackwardOrbitProduct"
    assert ser.dumps(ser.spec_to_json(back)) == ser.dumps(obj)


def test_spec_schema_rejections(rng):
    phi_obj = ser.automorphism_to_json(random_automorphism(rng))
    good = {
        "p": 3.0,
        "phase": {"re": 1.0, "im": 0.0},
        "psi_zeros": [],
        "phi": phi_obj,
        "infinite": None,
    }
    ser.spec_from_json(good)
    for mutation in (
        {"p": "three"},
        {"psi_zeros": [{"re": 0.1, "im": 0.0}]},  # raw zero, not a factor
        {"extra": 1},
        {"infinite": {"kind": "BackwardOrbitProduct"}},  # missing phi
    ):
        bad = {**good, **mutation}
        with pytest.raises(jsonschema.ValidationError):
            ser.spec_from_json(bad)
    with pytest.raises(jsonschema.ValidationError):
        ser.spec_from_json({k: v for k, v in good.items() if k != "phi"})


def test_witness_and_verdict_shapes(rng):
    phi = random_by_kind(rng, "Hyperbolic")
    spec = IsometrySpec(3.0, 1.0, (normalized_factor(0.3),), phi)
    w = decide_equivalent(spec, spec)
    obj = ser.witness_to_json(w)
    ser.validate("witness", obj)
    assert obj["residual"] >= 0.0

    v = decide_crownover(spec)
    obj = ser.crownover_verdict_to_json(v)
    ser.validate("crownover_verdict", obj)
    assert obj["verdict"] == "NotCrownover"
    assert obj["evidence"]["certificate"]["kind"] == "merged"
    with_csv = ser.crownover_verdict_to_json(v, evidence_csv="out.csv")
    assert with_csv["evidence_csv"] == "out.csv"

    div = decide_crownover(IsometrySpec(3.0, 1.0, (normalized_factor(0.3),), identity()))
    obj = ser.crownover_verdict_to_json(div)
    ser.validate("crownover_verdict", obj)
    assert obj["evidence"]["certificate"]["kind"] == "divergence"
    assert obj["codim"] == 1


def test_dumps_canonical():
    assert ser.dumps({"b": 1, "a": [1.5, {"z": None}]}) == '{"a":[1.5,{"z":null}],"b":1}'
    with pytest.raises(ValueError):
        ser.dumps({"x": float("nan")})
    with pytest.raises(ValueError):
        ser.dumps({"x": math.inf})


def test_validate_unknown_schema():
    with pytest.raises(OSError):
        ser.validate("no_such_schema", {})
