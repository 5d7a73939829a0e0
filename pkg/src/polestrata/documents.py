"""JSON documents for representations, certificates and reports.

Schemas (all keys always present, in this order):

RepDocument::

    {"stratum": "H^1(1^4,-1^4)",
     "vertices": [{"family": [0, 4], "weight": 0}, ...],
     "edges": [[0, 2], ...]}

Family entries index the singularities of the stratum string: conical
singularities in the order written, then poles of higher order.

Rationals are written as ``"num/den"`` strings and complex numbers as
``{"re": "num/den", "im": "num/den"}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bounds import BoundsReport
from .errors import MalformedInput
from .multigraph import Multigraph
from .notation import parse_stratum
from .representation import GraphRepresentation, IrreducibilityReport, Violation
from .residues import ResidueCertificate

__all__ = [
    "bounds_to_json",
    "certificate_to_json",
    "dumps",
    "fraction_from_json",
    "fraction_to_json",
    "irreducibility_to_json",
    "rep_from_json",
    "rep_to_json",
    "violation_to_json",
]


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def fraction_to_json(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_json(text: str) -> Fraction:
    return Fraction(text)


def rep_to_json(rep: GraphRepresentation) -> dict:
    return {
        "stratum": str(rep.stratum),
        "vertices": [
            {"family": list(fam), "weight": w} for fam, w in zip(rep.families, rep.weights)
        ],
        "edges": [list(e) for e in rep.graph.edges],
    }


def rep_from_json(doc: Any) -> GraphRepresentation:
    """Structural decoding only; run ``validate`` for the combinatorial conditions."""
    if not isinstance(doc, dict):
        raise MalformedInput("representation document must be a JSON object")
    for key in ("stratum", "vertices", "edges"):
        if key not in doc:
            raise MalformedInput(f"representation document lacks '{key}'")
    stratum = parse_stratum(doc["stratum"])
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise MalformedInput("'vertices' must be a nonempty list")
    families, weights = [], []
    for vertex in vertices:
        try:
            families.append(tuple(int(i) for i in vertex["family"]))
            weights.append(int(vertex.get("weight", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad vertex entry {vertex!r}") from exc
    try:
        edges = tuple((int(e[0]), int(e[1])) for e in doc["edges"] if len(e) == 2)
    except (TypeError, ValueError, IndexError) as exc:
        raise MalformedInput("'edges' must be a list of vertex pairs") from exc
    if len(edges) != len(doc["edges"]):
        raise MalformedInput("'edges' must be a list of vertex pairs")
    graph = Multigraph(len(vertices), edges)
    return GraphRepresentation(stratum, graph, tuple(families), tuple(weights))


def violation_to_json(v: Violation) -> dict:
    return {"condition": v.condition, "message": v.message, "vertex": v.vertex, "edge": v.edge}


def certificate_to_json(cert: ResidueCertificate) -> dict:
    system = cert.system
    variables = []
    for var, value, nonzero in zip(system.variables, cert.values, cert.nonzero):
        variables.append(
            {
                "name": var.name,
                "kind": var.kind,
                "vertex": var.vertex,
                "edge": var.edge,
                "end": var.end,
                "pole": var.pole,
                "pole_order": var.pole_order,
                "value": {"re": fraction_to_json(value[0]), "im": fraction_to_json(value[1])},
                "nonzero": nonzero,
            }
        )
    rows, cols = system.shape
    return {
        "representation": rep_to_json(cert.rep),
        "shape": [rows, cols],
        "rank": system.rank(),
        "equations": [
            {"label": label, "coefficients": list(row)}
            for label, row in zip(system.row_labels, system.rows)
        ],
        "seed": cert.seed,
        "attempts": cert.attempts,
        "variables": variables,
        "vertex_conditions": list(cert.vertex_conditions),
        "sufficient_only": cert.sufficient_only,
        "waist_curve_poles": list(cert.waist_curve_poles),
        "verified": cert.verify(),
    }


def _split_json(split: tuple | None) -> list | None:
    return None if split is None else [list(side) for side in split]


def irreducibility_to_json(report: IrreducibilityReport) -> dict:
    return {
        "irreducible": report.irreducible,
        "genus": report.genus,
        "kappa": report.kappa,
        "witness": None if report.witness is None else rep_to_json(report.witness),
        "split_literal": _split_json(report.split_literal),
        "split_with_conical": _split_json(report.split_with_conical),
        "readings_disagree": report.readings_disagree,
    }


def bounds_to_json(report: BoundsReport) -> dict:
    upper = report.mgas_upper
    generic = report.generic_mgas
    return {
        "stratum": str(report.stratum),
        "g": report.g,
        "n": report.n,
        "p": report.p,
        "mgas_lower": report.mgas_lower,
        "mgas_upper": None
        if upper is None
        else {"value": upper.value, "rule": upper.rule, "rules": list(upper.rules)},
        "sc_lower": report.sc_lower.value,
        "degenerate_core_possible": report.degenerate_core_possible,
        "sc_stratum_bound": report.sc_stratum_bound,
        "sc_chamber_bound": report.chamber_bound,
        "max_finite_volume_components": report.max_finite_volume_components,
        "infinite_cylinder_max": report.infinite_cylinder_max,
        "free_component_max": report.free_component_max,
        "generic_mgas": {"kind": generic.kind.value, "value": generic.value},
    }
