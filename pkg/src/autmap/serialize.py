"""JSON encoding of instances, certificates and search reports.

Polynomials are stored as ``{"variables": [...], "expr": "..."}`` with the
expression in the parser grammar; rationals as ``"p/q"`` strings (plain
``"p"`` for integers). Key order is fixed, so equal objects encode to
identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .elliptic import Curve, ECPoint
from .groebner import GroebnerBasis, TermOrder
from .lattice import GElement, build_S
from .polyring import Polynomial, VarRegistry, parse_poly, render_poly
from .reducer import InstanceDescriptor, normalize_projective
from .smoothing import SmoothingResult, jacobian_generators

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def rational(q) -> str:
    return str(Fraction(q))


def poly_to_json(p: Polynomial) -> dict:
    return {"variables": list(p.registry.names), "expr": render_poly(p)}


def poly_from_json(d: dict) -> Polynomial:
    return parse_poly(d["expr"], VarRegistry(d["variables"]))


def basis_to_json(b: GroebnerBasis) -> dict:
    return {
        "order": b.order.kind,
        "variables": list(b.registry.names),
        "generators": [render_poly(g) for g in b.generators],
        "is_unit": b.is_unit(),
    }


def basis_from_json(d: dict, source=()) -> GroebnerBasis:
    reg = VarRegistry(d["variables"])
    gens = tuple(parse_poly(e, reg) for e in d["generators"])
    return GroebnerBasis(gens, TermOrder(d["order"], reg), tuple(source))


def curve_to_json(E: Curve) -> dict:
    out = {"label": E.label}
    for name, c in zip(("a1", "a2", "a3", "a4", "a6"), E.coefficients()):
        out[name] = rational(c)
    return out


def curve_from_json(d: dict) -> Curve:
    return Curve(*(Fraction(d[k]) for k in ("a1", "a2", "a3", "a4", "a6")), label=d.get("label"))


def point_to_json(pt: ECPoint):
    if pt.is_infinity:
        return "infinity"
    return [rational(pt.x), rational(pt.y)]


def point_from_json(d) -> ECPoint:
    if d == "infinity":
        return ECPoint()
    return ECPoint(Fraction(d[0]), Fraction(d[1]))


def g_to_json(g: GElement) -> dict:
    return {"a": list(g.a), "eps": g.eps}


def g_from_json(d: dict) -> GElement:
    return GElement(tuple(d["a"]), d["eps"])


def smoothing_to_json(r: SmoothingResult) -> dict:
    return {
        "f": poly_to_json(r.f),
        "c": r.c,
        "F": poly_to_json(r.F),
        "smoothing_variable": r.y_name,
        "certificate": basis_to_json(r.certificate),
        "rejected": [{"c": c, "basis": basis_to_json(b)} for c, b in r.rejected],
        "degree_in": r.degree_in,
        "degree_out": r.degree_out,
        "geometrically_integral": r.geometrically_integral,
    }


def smoothing_from_json(d: dict) -> SmoothingResult:
    F = poly_from_json(d["F"])
    source = jacobian_generators(F)
    return SmoothingResult(
        f=poly_from_json(d["f"]),
        c=d["c"],
        F=F,
        y_name=d["smoothing_variable"],
        certificate=basis_from_json(d["certificate"], source),
        rejected=tuple((r["c"], basis_from_json(r["basis"])) for r in d["rejected"]),
        degree_in=d["degree_in"],
        degree_out=d["degree_out"],
        geometrically_integral=d["geometrically_integral"],
    )


def _opt_poly(p):
    return None if p is None else poly_to_json(p)


def descriptor_to_json(desc: InstanceDescriptor) -> dict:
    prov = desc.provenance
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "instance",
        "n": desc.n,
        "curve": curve_to_json(desc.curve),
        "P": point_to_json(desc.P),
        "S": [list(s) for s in desc.S.points],
        "S_prime": [[point_to_json(pt) for pt in tup] for tup in desc.S_prime],
        "base_point_x": list(normalize_projective(desc.base_point_x)),
        "Z_equation": poly_to_json(desc.Z_equation),
        "smoothing": smoothing_to_json(desc.smoothing),
        "mode": desc.mode,
        "blowup": desc.blowup,
        "provenance": {
            "f": poly_to_json(prov["f"]),
            "mode": prov["mode"],
            "four_squares": _opt_poly(prov["four_squares"]),
            "F": poly_to_json(prov["F"]),
            "c": prov["c"],
            "smoothing_variable": prov["smoothing_variable"],
            "homogenizing_variable": prov["homogenizing_variable"],
            "order": prov["order"],
        },
    }


def descriptor_from_json(d: dict) -> InstanceDescriptor:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
    p = d["provenance"]
    provenance = {
        "f": poly_from_json(p["f"]),
        "mode": p["mode"],
        "four_squares": None if p["four_squares"] is None else poly_from_json(p["four_squares"]),
        "F": poly_from_json(p["F"]),
        "c": p["c"],
        "smoothing_variable": p["smoothing_variable"],
        "homogenizing_variable": p["homogenizing_variable"],
        "order": p["order"],
    }
    S = build_S(d["n"])
    if [list(s) for s in S.points] != d["S"]:
        raise ValueError("lattice set S does not match the construction for this n")
    return InstanceDescriptor(
        n=d["n"],
        curve=curve_from_json(d["curve"]),
        P=point_from_json(d["P"]),
        S=S,
        S_prime=tuple(tuple(point_from_json(pt) for pt in tup) for tup in d["S_prime"]),
        base_point_x=tuple(d["base_point_x"]),
        Z_equation=poly_from_json(d["Z_equation"]),
        smoothing=smoothing_from_json(d["smoothing"]),
        mode=d["mode"],
        provenance=provenance,
        blowup=d["blowup"],
    )


def report_to_json(report) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "search_report",
        "bound": report.bound,
        "mode": report.mode,
        "solved_polynomial": poly_to_json(report.instance.solved_polynomial),
        "f_zeros": [list(a) for a in report.f_zeros],
        "sigma_witnesses": [g_to_json(g) for g in report.sigma_witnesses],
        "consistent": report.consistent,
        "verdict": report.verdict,
        "instance": descriptor_to_json(report.instance),
    }
