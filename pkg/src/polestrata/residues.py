"""Residue conditions for realizing a graph representation.

Every edge of a representation is a cylinder; its two ends become simple
poles (k=1) or order-two poles (k=2) of the adjacent pieces, whose residues
(holonomy vectors for k=2) must be opposite.  The residues attached to each
piece must sum to zero.  This gives ``t + s + 1`` real linear equations in
``2t + p`` complex unknowns, solved here exactly over the rationals.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateVariable, SearchCapExceeded, UnsupportedK
from .linalg import mat_vec, null_space, rank
from .representation import GraphRepresentation

__all__ = [
    "ResidueCertificate",
    "ResidueSystem",
    "Variable",
    "VariableClass",
    "build_system",
    "classify_variables",
    "realize_residues",
    "solution_space",
]

MAX_ATTEMPTS = 64
COEFFICIENT_RANGE = 3

Complex = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Variable:
    """Edge-end (``kind='t'``) or pole (``kind='p'``) unknown attached to a vertex."""

    name: str
    kind: str
    vertex: int
    edge: int | None = None
    end: int | None = None
    pole: int | None = None
    pole_order: int | None = None


@dataclass(frozen=True)
class ResidueSystem:
    rep: GraphRepresentation
    variables: tuple[Variable, ...]
    rows: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.variables)

    def rank(self) -> int:
        return rank(self.rows) if self.rows else 0

    def vertex_variables(self, vertex: int) -> list[int]:
        return [i for i, var in enumerate(self.variables) if var.vertex == vertex]

    def required_nonzero(self, index: int) -> bool:
        var = self.variables[index]
        return var.kind == "t" or var.pole_order == self.rep.stratum.k


def build_system(rep: GraphRepresentation) -> ResidueSystem:
    """Edge-balance rows then vertex rows; edge ends first, then poles in input order."""
    stratum, graph = rep.stratum, rep.graph
    if stratum.k not in (1, 2):
        raise UnsupportedK("residue systems are defined for k in {1, 2}")
    owner = {}
    for v, fam in enumerate(rep.families):
        for idx in fam:
            owner[idx] = v
    variables: list[Variable] = []
    for e, (i, j) in enumerate(graph.edges):
        variables.append(Variable(f"e{e}.0", "t", i, edge=e, end=0))
        variables.append(Variable(f"e{e}.1", "t", j, edge=e, end=1))
    for pj, b in enumerate(stratum.poles):
        vertex = owner[stratum.n + pj]
        variables.append(Variable(f"pole{pj}", "p", vertex, pole=pj, pole_order=b))
    width = len(variables)
    rows: list[tuple[int, ...]] = []
    labels: list[str] = []
    for e in range(graph.edge_count):
        row = [0] * width
        row[2 * e] = row[2 * e + 1] = 1
        rows.append(tuple(row))
        labels.append(f"edge {e}")
    for v in range(graph.vertex_count):
        row = [int(var.vertex == v) for var in variables]
        rows.append(tuple(row))
        labels.append(f"vertex {v}")
    return ResidueSystem(rep, tuple(variables), tuple(rows), tuple(labels))


def solution_space(system: ResidueSystem) -> list[list[Fraction]]:
    """Exact rational basis of the null space.

    The complex solutions are the vectors whose real and imaginary parts both
    lie in the span of this basis (the coefficients are real).
    """
    return null_space(system.rows, len(system.variables))


class VariableClass(enum.Enum):
    GENERICALLY_NONZERO = "generically-nonzero"
    IDENTICALLY_ZERO = "identically-zero"


def classify_variables(rep_or_system: GraphRepresentation | ResidueSystem) -> list[VariableClass]:
    """A coordinate is identically zero iff it vanishes on every basis vector."""
    system = rep_or_system if isinstance(rep_or_system, ResidueSystem) else build_system(rep_or_system)
    basis = solution_space(system)
    return [
        VariableClass.GENERICALLY_NONZERO
        if any(vec[i] != 0 for vec in basis)
        else VariableClass.IDENTICALLY_ZERO
        for i in range(len(system.variables))
    ]


def _is_zero(z: Complex) -> bool:
    return z[0] == 0 and z[1] == 0


def vertex_condition(values: list[Complex]) -> str | None:
    """Which hypothesis of the prescribed-residue construction holds, if any.

    ``no-residues`` and ``single-pole`` cover pieces with at most one
    unknown; otherwise the nonzero values must span the plane over the reals
    or be exactly two.
    """
    if not values:
        return "no-residues"
    if len(values) == 1:
        return "single-pole"
    nonzero = [z for z in values if not _is_zero(z)]
    for a in range(len(nonzero)):
        for b in range(a + 1, len(nonzero)):
            (x1, y1), (x2, y2) = nonzero[a], nonzero[b]
            if x1 * y2 - x2 * y1 != 0:
                return "spans"
    if len(nonzero) == 2:
        return "two-nonzero"
    return None


@dataclass(frozen=True)
class ResidueCertificate:
    """Exact complex residues satisfying every equation and nondegeneracy check."""

    system: ResidueSystem
    seed: int
    attempts: int
    values: tuple[Complex, ...]
    nonzero: tuple[bool, ...]
    vertex_conditions: tuple[str, ...]
    sufficient_only: bool
    waist_curve_poles: tuple[int, ...]

    @property
    def rep(self) -> GraphRepresentation:
        return self.system.rep

    def residuals(self) -> list[Complex]:
        re = [z[0] for z in self.values]
        im = [z[1] for z in self.values]
        return list(zip(mat_vec(self.system.rows, re), mat_vec(self.system.rows, im)))

    def verify(self) -> bool:
        """Re-substitute and re-check every invariant from scratch."""
        if any(not _is_zero(r) for r in self.residuals()):
            return False
        system = self.system
        for i, z in enumerate(self.values):
            if system.required_nonzero(i) and _is_zero(z):
                return False
        for e in range(system.rep.graph.edge_count):
            a, b = self.values[2 * e], self.values[2 * e + 1]
            if a[0] + b[0] != 0 or a[1] + b[1] != 0:
                return False
        for v in range(system.rep.graph.vertex_count):
            vals = [self.values[i] for i in system.vertex_variables(v)]
            if vertex_condition(vals) is None:
                return False
        return True


def realize_residues(
    rep: GraphRepresentation, seed: int = 0, max_attempts: int = MAX_ATTEMPTS
) -> ResidueCertificate:
    """Seeded search for residues realizing ``rep``.

    Real and imaginary parts are independent small-integer combinations of
    the null-space basis; on failure the seed is incremented.
    """
    system = build_system(rep)
    basis = solution_space(system)
    classes = classify_variables(system)
    for i, cls in enumerate(classes):
        if cls is VariableClass.IDENTICALLY_ZERO and system.required_nonzero(i):
            raise DegenerateVariable(
                f"variable {system.variables[i].name} vanishes on every solution"
            )
    width = len(system.variables)
    k = rep.stratum.k
    for attempt in range(max_attempts):
        rng = random.Random(seed + attempt)
        parts = []
        for _ in range(2):
            coeffs = [rng.randint(-COEFFICIENT_RANGE, COEFFICIENT_RANGE) for _ in basis]
            parts.append(
                [sum((c * vec[i] for c, vec in zip(coeffs, basis)), Fraction(0)) for i in range(width)]
            )
        values = tuple(zip(parts[0], parts[1]))
        if any(system.required_nonzero(i) and _is_zero(z) for i, z in enumerate(values)):
            continue
        conditions = []
        for v in range(rep.graph.vertex_count):
            cond = vertex_condition([values[i] for i in system.vertex_variables(v)])
            if cond is None:
                break
            conditions.append(cond)
        else:
            return ResidueCertificate(
                system=system,
                seed=seed + attempt,
                attempts=attempt + 1,
                values=values,
                nonzero=tuple(not _is_zero(z) for z in values),
                vertex_conditions=tuple(conditions),
                sufficient_only=(k == 2),
                waist_curve_poles=tuple(
                    var.pole for var in system.variables if k == 2 and var.pole_order == 2
                ),
            )
    raise SearchCapExceeded(f"no admissible residues after {max_attempts} attempts")
