"""JSON encodings for spaces, cycles, correspondences and certificates.

Coefficients travel as decimal strings so consumers never need 64-bit
assumptions.  Term lists are sorted by the canonical monomial order, making
every serialized document byte-stable for fixed inputs.  All documents carry
a top-level ``schema`` version.
"""

from typing import Any

from .chow import (
    CycleClass,
    Grassmannian,
    Monomial,
    ProductSpace,
    Projective,
    Space,
    cycle_class,
)
from .motives import Correspondence, DecompositionCertificate

SCHEMA_VERSION = 1


def space_to_dict(space: Space) -> dict:
    if isinstance(space, Projective):
        return {"kind": "projective", "n": space.n}
    if isinstance(space, Grassmannian):
        return {"kind": "grassmannian", "d": space.d, "n": space.n}
    return {
        "kind": "product",
        "left": space_to_dict(space.left),
        "right": space_to_dict(space.right),
    }


def space_from_dict(payload: dict) -> Space:
    kind = payload.get("kind")
    if kind == "projective":
        return Projective(int(payload["n"]))
    if kind == "grassmannian":
        return Grassmannian(int(payload["d"]), int(payload["n"]))
    if kind == "product":
        return ProductSpace(
            space_from_dict(payload["left"]), space_from_dict(payload["right"])
        )
    raise ValueError(f"unknown space kind {kind!r}")


def _factor_fields(space: Space, mon: Monomial, suffix: str = "") -> dict:
    if isinstance(space, Projective):
        return {f"h{suffix}": mon}
    if isinstance(space, Grassmannian):
        return {f"mu{suffix}": list(mon)}
    raise ValueError("nested product factors are not serializable")


def term_to_dict(space: Space, mon: Monomial, coeff: int) -> dict:
    if isinstance(space, ProductSpace):
        left, right = space.left, space.right
        entry = _factor_fields(left, mon[0])
        # Same-kind factors disambiguate with a "2" suffix on the right.
        suffix = "2" if type(left) is type(right) else ""
        entry.update(_factor_fields(right, mon[1], suffix))
    else:
        entry = _factor_fields(space, mon)
    entry["coeff"] = str(coeff)
    return entry


def _factor_monomial(space: Space, entry: dict, suffix: str = "") -> Monomial:
    if isinstance(space, Projective):
        return int(entry[f"h{suffix}"])
    if isinstance(space, Grassmannian):
        return tuple(int(p) for p in entry[f"mu{suffix}"])
    raise ValueError("nested product factors are not serializable")


def term_from_dict(space: Space, entry: dict) -> tuple[Monomial, int]:
    coeff = int(entry["coeff"])
    if isinstance(space, ProductSpace):
        left, right = space.left, space.right
        suffix = "2" if type(left) is type(right) else ""
        mon: Monomial = (
            _factor_monomial(left, entry),
            _factor_monomial(right, entry, suffix),
        )
    else:
        mon = _factor_monomial(space, entry)
    return mon, coeff


def cycle_to_dict(c: CycleClass) -> dict:
    return {
        "space": space_to_dict(c.space),
        "codim": c.codim,
        "terms": [term_to_dict(c.space, mon, v) for mon, v in c.sorted_terms()],
    }


def cycle_from_dict(payload: dict) -> CycleClass:
    space = space_from_dict(payload["space"])
    terms = [term_from_dict(space, entry) for entry in payload["terms"]]
    return cycle_class(space, int(payload["codim"]), terms)


def correspondence_to_dict(corr: Correspondence) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "source": space_to_dict(corr.source),
        "target": space_to_dict(corr.target),
        "codim": corr.codim,
        "terms": [
            term_to_dict(corr.cycle.space, mon, v) for mon, v in corr.cycle.sorted_terms()
        ],
    }


def correspondence_from_dict(payload: dict) -> Correspondence:
    source = space_from_dict(payload["source"])
    target = space_from_dict(payload["target"])
    space = ProductSpace(source, target)
    terms = [term_from_dict(space, entry) for entry in payload["terms"]]
    cyc = cycle_class(space, int(payload["codim"]), terms)
    return Correspondence(source, target, cyc)


def certificate_to_dict(cert: DecompositionCertificate) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "n": cert.n,
        "d": cert.d,
        "r": cert.r,
        "verdict": cert.verdict,
        "sign_case": cert.sign_case,
    }
    if cert.verdict == "verified":
        payload["alpha"] = correspondence_to_dict(cert.alpha)
        payload["beta"] = correspondence_to_dict(cert.beta)
        payload["composition"] = cycle_to_dict(cert.composition)
        payload["projector"] = correspondence_to_dict(cert.projector)
    else:
        payload["obstruction_scan"] = cert.obstruction_witness
    return payload
