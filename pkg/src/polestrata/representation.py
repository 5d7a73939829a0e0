"""Graph representations of strata of abelian and quadratic differentials.

A graph representation of level ``s`` cuts a surface along ``t`` cylinders
into ``s + 1`` pieces.  It is encoded by a connected multigraph (one vertex
per piece, one edge per cylinder), a partition of the singularities into
families (one per vertex) and a genus weight per vertex.  The reducibility
index ``kappa`` is the largest level admitting a representation.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import MalformedInput, UnsupportedK, UnsupportedStratum, WrongGenus
from .multigraph import Multigraph, canonical_form, multigraphs_with_degrees
from .partitions import multiset_partitions
from .stratum import Stratum

__all__ = [
    "GraphRepresentation",
    "IrreducibilityReport",
    "KappaMethod",
    "Violation",
    "enumerate_reps",
    "gcd_obstruction",
    "is_irreducible",
    "kappa",
    "kappa_upper_bound",
    "level_exists",
    "purify",
    "split_test",
    "trivial_rep",
    "validate",
]


def _require_k(stratum: Stratum) -> None:
    if stratum.k not in (1, 2):
        raise UnsupportedK(f"graph representations need k in {{1, 2}}, got k={stratum.k}")


@dataclass(frozen=True)
class GraphRepresentation:
    """Multigraph with a family of singularity indices and a weight per vertex.

    Construction only checks structure (the families partition the
    singularity indices, sizes agree); :func:`validate` checks the
    combinatorial conditions.
    """

    stratum: Stratum
    graph: Multigraph
    families: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        _require_k(self.stratum)
        families = tuple(tuple(sorted(int(i) for i in fam)) for fam in self.families)
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "families", families)
        object.__setattr__(self, "weights", weights)
        size = self.graph.vertex_count
        if len(families) != size or len(weights) != size:
            raise MalformedInput(
                f"{size} vertices but {len(families)} families and {len(weights)} weights"
            )
        if any(w < 0 for w in weights):
            raise MalformedInput("weights must be nonnegative")
        if any(not fam for fam in families):
            raise MalformedInput("families must be nonempty")
        indices = sorted(i for fam in families for i in fam)
        if indices != list(range(self.stratum.n + self.stratum.p)):
            raise MalformedInput("families do not partition the singularity indices")

    @property
    def level(self) -> int:
        return self.graph.vertex_count - 1

    @property
    def is_pure(self) -> bool:
        return not any(self.weights)

    def family_orders(self, vertex: int) -> tuple[int, ...]:
        orders = self.stratum.orders
        return tuple(orders[i] for i in self.families[vertex])

    def sigma(self, vertex: int) -> int:
        return sum(self.family_orders(vertex))

    def has_pole(self, vertex: int) -> bool:
        n = self.stratum.n
        return any(i >= n for i in self.families[vertex])

    def has_conical(self, vertex: int) -> bool:
        n = self.stratum.n
        return any(i < n for i in self.families[vertex])

    def vertex_color(self, vertex: int) -> tuple:
        return (tuple(sorted(self.family_orders(vertex))), self.weights[vertex])

    def canonical_key(self) -> tuple:
        colors = [self.vertex_color(v) for v in range(self.graph.vertex_count)]
        code, _ = canonical_form(self.graph.matrix(), colors)
        return (self.level, tuple(sorted(self.weights)), code)


@dataclass(frozen=True)
class Violation:
    """One failed condition; ``condition`` is one of
    ``connected``, ``i``, ``ii``, ``iii``, ``edge-count``, ``weight-sum``."""

    condition: str
    message: str
    vertex: int | None = None
    edge: int | None = None


def validate(rep: GraphRepresentation) -> list[Violation]:
    """All violated conditions, in a fixed order (empty list means valid)."""
    stratum, graph = rep.stratum, rep.graph
    k, g = stratum.k, stratum.genus
    out: list[Violation] = []
    if not graph.is_connected():
        out.append(Violation("connected", "graph is not connected"))
    valencies = graph.valencies()
    for v in range(graph.vertex_count):
        if not rep.has_conical(v):
            out.append(Violation("i", f"family of vertex {v} has no conical singularity", vertex=v))
        sigma = rep.sigma(v)
        expected = k * valencies[v] + 2 * k * rep.weights[v] - 2 * k
        if sigma != expected:
            out.append(
                Violation(
                    "ii",
                    f"vertex {v}: sigma={sigma} but k*v+2k*w-2k={expected}",
                    vertex=v,
                )
            )
    if k == 1:
        for idx in graph.bridges():
            i, j = graph.edges[idx]
            side = graph.component_of(i, removed_edge=idx)
            other = set(range(graph.vertex_count)) - side
            for part in (side, other):
                if not any(rep.has_pole(v) for v in part):
                    out.append(
                        Violation(
                            "iii",
                            f"bridge {idx}={graph.edges[idx]} leaves vertices "
                            f"{sorted(part)} without a pole",
                            edge=idx,
                        )
                    )
                    break
    total_weight = sum(rep.weights)
    if total_weight > g:
        out.append(Violation("weight-sum", f"total weight {total_weight} exceeds genus {g}"))
    expected_edges = rep.level + g - total_weight
    if graph.edge_count != expected_edges:
        out.append(
            Violation(
                "edge-count",
                f"{graph.edge_count} edges but s+g-sum(w)={expected_edges}",
            )
        )
    return out


def purify(rep: GraphRepresentation) -> GraphRepresentation:
    """Trade every unit of weight for a loop at the same vertex."""
    loops = tuple((v, v) for v, w in enumerate(rep.weights) for _ in range(w))
    if not loops:
        return rep
    graph = Multigraph(rep.graph.vertex_count, tuple(sorted(rep.graph.edges + loops)))
    return GraphRepresentation(rep.stratum, graph, rep.families, (0,) * len(rep.weights))


def trivial_rep(stratum: Stratum, pure: bool = False) -> GraphRepresentation:
    """Level-0 representation: one vertex carrying everything, weight ``g``."""
    _require_k(stratum)
    stratum.require_conical()
    g = stratum.genus
    family = tuple(range(stratum.n + stratum.p))
    rep = GraphRepresentation(stratum, Multigraph(1, ()), (family,), (g,))
    return purify(rep) if pure else rep


# ---------------------------------------------------------------------------
# enumeration


def _block_degree_base(block: Sequence[int], k: int) -> int | None:
    """``v + 2w`` forced by a family, or None when k does not divide its sum."""
    sigma = sum(block)
    if sigma % k:
        return None
    return sigma // k + 2


def _weight_vectors(
    bases: Sequence[int], blocks: Sequence[tuple], genus: int, min_valency: int
) -> Iterator[tuple[int, ...]]:
    """Weights with ``sum <= genus`` and every valency ``base - 2w >= min_valency``.

    Identical families get nonincreasing weights (the other orders are isomorphic).
    """
    size = len(bases)
    current = [0] * size

    def rec(i: int, budget: int) -> Iterator[tuple[int, ...]]:
        if i == size:
            yield tuple(current)
            return
        top = min(budget, (bases[i] - min_valency) // 2)
        if i and blocks[i] == blocks[i - 1]:
            top = min(top, current[i - 1])
        for w in range(top, -1, -1):
            current[i] = w
            yield from rec(i + 1, budget - w)
        current[i] = 0

    yield from rec(0, genus)


def _level_candidates(
    stratum: Stratum, level: int, pure_only: bool
) -> Iterator[tuple[list[tuple[int, ...]], tuple[int, ...], tuple[int, ...]]]:
    """Families, weights and valencies that pass conditions (i) and (ii)."""
    k, g = stratum.k, stratum.genus
    blocks_wanted = level + 1
    min_valency = 1 if level else 0
    conical = set(stratum.zeros)

    def accept(block: tuple[int, ...]) -> bool:
        base = _block_degree_base(block, k)
        return base is not None and base >= min_valency

    for blocks in multiset_partitions(
        stratum.orders, blocks_wanted, accept=accept, required=conical.__contains__
    ):
        bases = [_block_degree_base(b, k) for b in blocks]
        genus_budget = 0 if pure_only else g
        for weights in _weight_vectors(bases, blocks, genus_budget, min_valency):
            degrees = tuple(b - 2 * w for b, w in zip(bases, weights))
            yield blocks, weights, degrees


def _bridges_ok(graph: Multigraph, pole_flags: Sequence[bool]) -> bool:
    everything = set(range(graph.vertex_count))
    for idx in graph.bridges():
        side = graph.component_of(graph.edges[idx][0], removed_edge=idx)
        if not any(pole_flags[v] for v in side):
            return False
        if not any(pole_flags[v] for v in everything - side):
            return False
    return True


def _graphs_for(
    degrees: Sequence[int], pole_flags: Sequence[bool], k: int
) -> Iterator[Multigraph]:
    for matrix in multigraphs_with_degrees(degrees, connected=True):
        graph = Multigraph.from_matrix(matrix)
        if k == 1 and not _bridges_ok(graph, pole_flags):
            continue
        yield graph


@lru_cache(maxsize=65536)
def _graph_exists(profile: tuple[tuple[int, bool], ...], k: int) -> bool:
    degrees = [d for d, _ in profile]
    flags = [f for _, f in profile]
    return next(iter(_graphs_for(degrees, flags, k)), None) is not None


def _assign_indices(stratum: Stratum, blocks: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    queues: dict[int, list[int]] = {}
    for idx, order in enumerate(stratum.orders):
        queues.setdefault(order, []).append(idx)
    cursor = Counter()
    families = []
    for block in blocks:
        fam = []
        for order in block:
            fam.append(queues[order][cursor[order]])
            cursor[order] += 1
        families.append(tuple(fam))
    return families


def enumerate_reps(
    stratum: Stratum, max_level: int | None = None, pure_only: bool = False
) -> list[GraphRepresentation]:
    """Every graph representation up to isomorphism, in canonical order.

    Isomorphisms are graph isomorphisms preserving family multisets and
    weights.  Levels ``0..min(max_level, n-1)`` are covered; each output
    representation has its vertices in canonical order.
    """
    _require_k(stratum)
    stratum.require_conical()
    top = stratum.n - 1 if max_level is None else min(max_level, stratum.n - 1)
    k = stratum.k
    found: dict[tuple, GraphRepresentation] = {}
    pole_orders = {-b for b in stratum.poles}
    for level in range(top + 1):
        for blocks, weights, degrees in _level_candidates(stratum, level, pure_only):
            colors = [(blocks[v], weights[v]) for v in range(level + 1)]
            flags = [any(x in pole_orders for x in b) for b in blocks]
            for graph in _graphs_for(degrees, flags, k):
                code, order = canonical_form(graph.matrix(), colors)
                key = (level, tuple(sorted(weights)), code)
                if key in found:
                    continue
                canon_graph = graph.relabel(order)
                canon_blocks = [blocks[v] for v in order]
                rep = GraphRepresentation(
                    stratum,
                    canon_graph,
                    tuple(_assign_indices(stratum, canon_blocks)),
                    tuple(weights[v] for v in order),
                )
                found[key] = rep
    return [found[key] for key in sorted(found)]


def level_exists(stratum: Stratum, level: int) -> GraphRepresentation | None:
    """A representation of exactly the given level, or None."""
    _require_k(stratum)
    stratum.require_conical()
    if level > stratum.n - 1:
        return None
    k = stratum.k
    pole_orders = {-b for b in stratum.poles}
    for blocks, weights, degrees in _level_candidates(stratum, level, pure_only=False):
        flags = [any(x in pole_orders for x in b) for b in blocks]
        profile = tuple(sorted(zip(degrees, flags)))
        if not _graph_exists(profile, k):
            continue
        graph = next(iter(_graphs_for(degrees, flags, k)))
        return GraphRepresentation(
            stratum, graph, tuple(_assign_indices(stratum, blocks)), weights
        )
    return None


# ---------------------------------------------------------------------------
# reducibility index


class KappaMethod(enum.Enum):
    DIRECT = "direct"
    GENUS_REDUCTION = "reduce"


def kappa_upper_bound(stratum: Stratum) -> int:
    """Combinatorial ceiling on the level: ``n - 1``, sharpened for ``k = 1``."""
    bound = stratum.n - 1
    if stratum.k == 1:
        g, p = stratum.genus, stratum.p
        if g == 0 and p == 1:
            return 0
        bound = min(bound, 2 * g + 2 * p - 3)
    return max(bound, 0)


def _check_kappa_domain(stratum: Stratum) -> None:
    _require_k(stratum)
    stratum.require_conical()
    if stratum.p == 0 and stratum.k != 1:
        raise UnsupportedStratum("strata without poles of higher order are only handled for k=1")


def _kappa_direct(stratum: Stratum) -> tuple[int, GraphRepresentation]:
    # Contracting a non-loop edge lowers the level by one and keeps every
    # condition, so the feasible levels form an initial segment.
    witness = trivial_rep(stratum)
    best = 0
    for level in range(1, kappa_upper_bound(stratum) + 1):
        rep = level_exists(stratum, level)
        if rep is None:
            break
        best, witness = level, rep
    return best, witness


def genus_zero_partner(stratum: Stratum) -> Stratum:
    """Append ``2g`` poles of order ``k``; the result has genus zero."""
    return stratum.with_extra_poles(stratum.k, 2 * stratum.genus)


def kappa(stratum: Stratum, method: KappaMethod | str = KappaMethod.DIRECT) -> int:
    """Reducibility index, either by direct search or on the genus-zero partner."""
    method = KappaMethod(method)
    _check_kappa_domain(stratum)
    if method is KappaMethod.GENUS_REDUCTION:
        return _kappa_direct(genus_zero_partner(stratum))[0]
    return _kappa_direct(stratum)[0]


# ---------------------------------------------------------------------------
# irreducibility


def split_test(stratum: Stratum, require_conical: bool) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split of the pattern into two families each summing to ``-k``.

    With ``require_conical`` both families must contain a conical
    singularity.  Returns the two families of orders, or None.
    """
    k = stratum.k
    required = set(stratum.zeros).__contains__ if require_conical else None
    for blocks in multiset_partitions(
        stratum.orders, 2, accept=lambda b: sum(b) == -k, required=required
    ):
        return blocks[0], blocks[1]
    return None


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible: bool
    genus: int
    kappa: int
    witness: GraphRepresentation | None
    split_literal: tuple | None = None
    split_with_conical: tuple | None = None
    readings_disagree: bool = field(default=False)


def is_irreducible(stratum: Stratum) -> IrreducibilityReport:
    """Irreducible means genus zero and no representation of positive level.

    The witness of reducibility is a representation with at least one edge.
    For genus zero the report also carries the raw two-family split, both
    read literally and with the conical-singularity requirement.
    """
    _check_kappa_domain(stratum)
    g = stratum.genus
    k_value, witness = _kappa_direct(stratum)
    if k_value == 0:
        witness = trivial_rep(stratum, pure=True) if g > 0 else None
    literal = with_conical = None
    disagree = False
    if g == 0:
        literal = split_test(stratum, require_conical=False)
        with_conical = split_test(stratum, require_conical=True)
        disagree = (literal is None) != (with_conical is None)
    return IrreducibilityReport(
        irreducible=(g == 0 and k_value == 0),
        genus=g,
        kappa=k_value,
        witness=witness,
        split_literal=literal,
        split_with_conical=with_conical,
        readings_disagree=disagree,
    )


def gcd_obstruction(stratum: Stratum) -> bool:
    """Arithmetic certificate of irreducibility for genus-zero abelian strata."""
    if stratum.k != 1:
        raise UnsupportedK("the gcd obstruction is stated for k=1")
    if stratum.genus != 0:
        raise WrongGenus(f"gcd obstruction needs genus 0, {stratum} has genus {stratum.genus}")
    return stratum.pattern_gcd() != 1
