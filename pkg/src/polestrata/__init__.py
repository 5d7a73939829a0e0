"""Combinatorics of strata of meromorphic k-differentials with poles of higher order."""

from .bounds import (
    BoundsReport,
    bounds_report,
    invariant_component_bounds,
    mgas_from_boundary,
    mgas_from_triangles,
    mgas_generic,
    mgas_lower,
    mgas_upper,
    sc_chamber_bound,
    sc_lower,
    sc_stratum_bound,
)
from .errors import PoleStrataError
from .multigraph import Multigraph
from .notation import parse_stratum, render_stratum
from .representation import (
    GraphRepresentation,
    KappaMethod,
    enumerate_reps,
    gcd_obstruction,
    is_irreducible,
    kappa,
    purify,
    trivial_rep,
    validate,
)
from .residues import build_system, classify_variables, realize_residues, solution_space
from .stratum import Nonemptiness, Stratum, genus, is_nonempty

__all__ = [
    "BoundsReport",
    "GraphRepresentation",
    "KappaMethod",
    "Multigraph",
    "Nonemptiness",
    "PoleStrataError",
    "Stratum",
    "bounds_report",
    "build_system",
    "classify_variables",
    "enumerate_reps",
    "gcd_obstruction",
    "genus",
    "invariant_component_bounds",
    "is_irreducible",
    "is_nonempty",
    "kappa",
    "mgas_from_boundary",
    "mgas_from_triangles",
    "mgas_generic",
    "mgas_lower",
    "mgas_upper",
    "parse_stratum",
    "purify",
    "realize_residues",
    "render_stratum",
    "sc_chamber_bound",
    "sc_lower",
    "sc_stratum_bound",
    "solution_space",
    "trivial_rep",
    "validate",
]
