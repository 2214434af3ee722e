"""JSON serialization for every object the package exchanges with disk.

Complex numbers are ``{"re": float, "im": float}`` objects, never strings;
automorphisms are ``{"lambda": complex, "a": complex}``.  Each ``*_from_json``
validates its input against the shipped JSON Schema first, so malformed
structure surfaces as ``jsonschema.ValidationError`` (the CLI's parse-error
exit) while value-level violations keep raising ``DomainError`` from the
constructors (the CLI's invalid-input exit).
"""

from __future__ import annotations

import json
import math
from functools import lru_cache
from importlib import resources

import jsonschema

from .blaschke import (
    ConvergenceVerdict,
    DivergenceCertificate,
    MergedTailCertificate,
    TailCertificate,
    ZeroSequence,
)
from .hardy import IsometrySpec
from .isometries import CrownoverVerdict, EquivWitness, InfiniteConstruction
from .moebius import Classification, DiscAutomorphism

__all__ = [
    "validate",
    "dumps",
    "complex_to_json",
    "complex_from_json",
    "automorphism_to_json",
    "automorphism_from_json",
    "classification_to_json",
    "sequence_to_json",
    "sequence_from_json",
    "construction_to_json",
    "construction_from_json",
    "spec_to_json",
    "spec_from_json",
    "witness_to_json",
    "certificate_to_json",
    "convergence_verdict_to_json",
    "crownover_verdict_to_json",
]


@lru_cache(maxsize=None)
def _schema(name: str) -> dict:
    text = resources.files("hpiso.schemas").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def validate(name: str, obj) -> None:
    """Validate ``obj`` against the shipped schema ``name`` (raises
    ``jsonschema.ValidationError``)."""
    jsonschema.validate(obj, _schema(name))


def dumps(obj) -> str:
    """Deterministic single-line JSON (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def complex_to_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_json(obj) -> complex:
    validate("complex", obj)
    return complex(obj["re"], obj["im"])


def automorphism_to_json(phi: DiscAutomorphism) -> dict:
    return {"lambda": complex_to_json(phi.lam), "a": complex_to_json(phi.a)}


def automorphism_from_json(obj) -> DiscAutomorphism:
    validate("automorphism", obj)
    return DiscAutomorphism(
        complex(obj["lambda"]["re"], obj["lambda"]["im"]),
        complex(obj["a"]["re"], obj["a"]["im"]),
    )


def classification_to_json(cls: Classification) -> dict:
    return {
        "kind": cls.kind.value,
        "fixed_points": [complex_to_json(w) for w in cls.fixed_points],
        "multiplier": None if cls.multiplier is None else complex_to_json(cls.multiplier),
        "orientation": cls.orientation.value,
    }


def sequence_to_json(seq: ZeroSequence) -> dict:
    if seq.kind == "Explicit":
        return {"kind": "Explicit", "zeros": [complex_to_json(a) for a in seq.zeros]}
    if seq.kind == "Orbit":
        return {
            "kind": "Orbit",
            "psi": automorphism_to_json(seq.psi),
            "phi": automorphism_to_json(seq.phi),
        }
    return {"kind": "ForwardOrbit", "phi": automorphism_to_json(seq.phi)}


def sequence_from_json(obj) -> ZeroSequence:
    validate("sequence", obj)
    if obj["kind"] == "Explicit":
        return ZeroSequence.explicit(
            tuple(complex(c["re"], c["im"]) for c in obj["zeros"])
        )
    if obj["kind"] == "Orbit":
        return ZeroSequence.orbit(
            automorphism_from_json(obj["psi"]), automorphism_from_json(obj["phi"])
        )
    return ZeroSequence.forward_orbit(automorphism_from_json(obj["phi"]))


def construction_to_json(con: InfiniteConstruction) -> dict:
    return {
        "kind": con.kind,
        "phi": automorphism_to_json(con.phi),
        "indices": list(con.indices),
        "budget": con.budget,
    }


def construction_from_json(obj) -> InfiniteConstruction:
    validate("construction", obj)
    return InfiniteConstruction(
        obj["kind"],
        automorphism_from_json(obj["phi"]),
        tuple(obj["indices"]),
        float(obj["budget"]),
    )


def spec_to_json(spec: IsometrySpec) -> dict:
    return {
        "p": float(spec.p),
        "phase": complex_to_json(spec.phase),
        "psi_zeros": [automorphism_to_json(fac) for fac in spec.psi_zeros],
        "phi": automorphism_to_json(spec.phi),
        "infinite": None if spec.infinite is None else construction_to_json(spec.infinite),
    }


def spec_from_json(obj) -> IsometrySpec:
    validate("spec", obj)
    infinite = obj.get("infinite")
    return IsometrySpec(
        float(obj["p"]),
        complex(obj["phase"]["re"], obj["phase"]["im"]),
        tuple(automorphism_from_json(f) for f in obj["psi_zeros"]),
        automorphism_from_json(obj["phi"]),
        None if infinite is None else construction_from_json(infinite),
    )


def witness_to_json(w: EquivWitness) -> dict:
    return {
        "eta": automorphism_to_json(w.eta),
        "rho": complex_to_json(w.rho),
        "residual": w.residual,
    }


def certificate_to_json(cert) -> dict:
    """One-way serialization of tail/divergence certificates for reports."""
    if cert is None:
        return None
    if isinstance(cert, DivergenceCertificate):
        return {"kind": "divergence", "delta": cert.delta}
    if isinstance(cert, MergedTailCertificate):
        return {"kind": "merged", "parts": [certificate_to_json(p) for p in cert.parts]}
    if isinstance(cert, TailCertificate):
        out = {"kind": cert.kind, "constant": cert.constant}
        if cert.kind == "geometric":
            out["ratio"] = cert.ratio
        else:
            out.update(offset=cert.offset, step=cert.step, height=cert.height)
        return out
    raise TypeError(f"not a certificate: {cert!r}")


def convergence_verdict_to_json(v: ConvergenceVerdict) -> dict:
    return {
        "verdict": v.verdict,
        "growth": v.growth,
        "reason": v.reason,
        "n_terms": int(v.n_terms),
        "partial_sum": float(v.partial_sum),
        "certificate": certificate_to_json(v.certificate),
    }


def crownover_verdict_to_json(v: CrownoverVerdict, evidence_csv=None) -> dict:
    return {
        "verdict": v.verdict,
        "reason": v.reason,
        "codim": "Infinite" if math.isinf(v.codim) else int(v.codim),
        "evidence": convergence_verdict_to_json(v.evidence),
        "evidence_csv": evidence_csv,
    }
