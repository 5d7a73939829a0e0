"""Counting identities and bounds for saddle connections and arc systems.

Notation: ``|A|`` is the number of arcs of a maximal geodesic arc system
(MGAS), ``|SC|`` the number of saddle connections, ``t`` the number of
triangles of the triangulated core and ``beta`` the boundary number of the
pole domains.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    InvalidBeta,
    MalformedInput,
    NotApplicable,
    NotIrreducible,
    PoleStrataError,
    UnsupportedK,
)
from .representation import is_irreducible, kappa
from .stratum import Stratum

__all__ = [
    "BoundsReport",
    "ComponentBounds",
    "GenericKind",
    "GenericMgas",
    "ScLower",
    "UpperBound",
    "bounds_report",
    "invariant_component_bounds",
    "mgas_from_boundary",
    "mgas_from_triangles",
    "mgas_generic",
    "mgas_lower",
    "mgas_upper",
    "sc_chamber_bound",
    "sc_lower",
    "sc_stratum_bound",
    "triangles_from_boundary",
]


def _nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise MalformedInput(f"{name} must be nonnegative, got {value}")


def mgas_lower(stratum: Stratum) -> int:
    """Arcs in any MGAS; attained exactly when the core is degenerate."""
    return 2 * stratum.genus - 2 + stratum.n + stratum.p


def mgas_from_triangles(g: int, n: int, p: int, t: int) -> int:
    """Arc count of an MGAS whose core carries ``t`` ideal triangles."""
    _nonnegative(g=g, n=n, p=p, t=t)
    return 2 * g - 2 + n + p + t


def mgas_from_boundary(g: int, n: int, p: int, beta: int) -> int:
    """Arc count from the boundary number of the pole domains."""
    _nonnegative(g=g, n=n, p=p)
    if beta < p:
        raise InvalidBeta(f"beta={beta} < p={p}: every pole domain has a boundary arc")
    return 6 * g - 6 + 3 * n + 3 * p - beta


def triangles_from_boundary(g: int, n: int, p: int, beta: int) -> int:
    """Angle count linking the two arc formulas: ``t = 4g-4+2n+2p-beta``."""
    return 4 * g - 4 + 2 * n + 2 * p - beta


@dataclass(frozen=True)
class UpperBound:
    """Minimum over the applicable rules; ``rules`` lists every tag that applied."""

    value: int
    rule: str
    rules: tuple[str, ...]


def mgas_upper(stratum: Stratum) -> UpperBound:
    """Smallest applicable upper bound on ``|A|``.

    Rules: ``base`` (6g-6+3n+2p) for k in {1, 2}; for k=1 only,
    ``one-pole`` (p=1, g>=1), ``one-pole-genus-zero`` (p=1, g=0, n>=3) and
    ``two-poles-irreducible`` (p=2, n>=2, irreducible stratum).
    """
    k, g, n, p = stratum.k, stratum.genus, stratum.n, stratum.p
    if k not in (1, 2):
        raise UnsupportedK(f"arc bounds are stated for k in {{1, 2}}, got k={k}")
    if g == 0 and n == 1 and p == 1:
        # One cone point on a sphere with one pole: there is no saddle
        # connection at all, so the pole domain has no boundary arc (beta=0).
        raise NotApplicable(f"{stratum} has no saddle connection bounding its pole")
    candidates = [("base", 6 * g - 6 + 3 * n + 2 * p)]
    if k == 1:
        if p == 1 and g >= 1:
            candidates.append(("one-pole", 6 * g + 3 * n - 5))
        if p == 1 and g == 0 and n >= 3:
            candidates.append(("one-pole-genus-zero", 3 * n - 6))
        if p == 2 and n >= 2 and g == 0 and is_irreducible(stratum).irreducible:
            candidates.append(("two-poles-irreducible", 3 * n - 3))
    rule, value = min(candidates, key=lambda c: c[1])
    return UpperBound(value, rule, tuple(tag for tag, _ in candidates))


class GenericKind(enum.Enum):
    EXACT = "exact"
    AT_LEAST = "at-least"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class GenericMgas:
    kind: GenericKind
    value: int | None = None

    def __str__(self) -> str:
        if self.kind is GenericKind.NOT_APPLICABLE:
            return "NotApplicable"
        name = "Exact" if self.kind is GenericKind.EXACT else "AtLeast"
        return f"{name}({self.value})"


def mgas_generic(stratum: Stratum) -> GenericMgas:
    """``|A|`` on a generic surface when every pole has order exactly ``k``."""
    k, g, n, p = stratum.k, stratum.genus, stratum.n, stratum.p
    if p == 0 or any(b != k for b in stratum.poles):
        return GenericMgas(GenericKind.NOT_APPLICABLE)
    value = 6 * g - 6 + 3 * n + 2 * p
    if k % 2 == 1 or p >= 2:
        return GenericMgas(GenericKind.EXACT, value)
    return GenericMgas(GenericKind.AT_LEAST, 6 * g + 3 * n - 5)


@dataclass(frozen=True)
class ScLower:
    """``|SC| >= value``; ``degenerate_core_possible`` says whether equality can occur.

    ``None`` means the question is not settled for this stratum.
    """

    value: int
    degenerate_core_possible: bool | None


def sc_lower(stratum: Stratum) -> ScLower:
    k = stratum.k
    value = mgas_lower(stratum)
    if k in (1, 2):
        return ScLower(value, True)
    # Conical orders in (-k, -k/2) force a core with nonempty interior.
    if any(-k < a and 2 * a < -k for a in stratum.zeros):
        return ScLower(value, False)
    return ScLower(value, None)


def sc_chamber_bound(g: int, n: int, p: int, triangle_counts: list[int], k: int = 1) -> int:
    """Bound on ``|SC|`` inside a chamber with triangle counts ``t_1..t_s``."""
    if k != 1:
        raise NotApplicable("the chamber bound is proved for k=1 only")
    _nonnegative(g=g, n=n, p=p)
    for t in triangle_counts:
        _nonnegative(t_i=t)
    t = sum(triangle_counts)
    return 2 * g - 2 + n + p + t + sum(ti * (ti - 1) for ti in triangle_counts) // 2


def sc_stratum_bound(stratum: Stratum) -> int:
    """Uniform bound on ``|SC|`` over an irreducible stratum of 1-forms."""
    if stratum.k != 1:
        raise NotApplicable("the stratum bound is proved for k=1 only")
    if not is_irreducible(stratum).irreducible:
        raise NotIrreducible(f"{stratum} is reducible; its surfaces may have cylinders")
    g, n, p = stratum.genus, stratum.n, stratum.p
    return 2 * g - 2 + n + p + (4 * g - 4 + 2 * n + p) * (4 * g + 2 * n + p - 3) // 2


@dataclass(frozen=True)
class ComponentBounds:
    """Maxima for invariant components of a directional foliation.

    ``infinite_cylinder_max`` only carries meaning for k=1, where such
    cylinders end at simple poles; for k=2 it is 0 and ``infinite_cylinder_applies``
    is False.
    """

    finite_volume_max: int
    infinite_cylinder_max: int
    free_component_max: int
    infinite_cylinder_applies: bool


def invariant_component_bounds(stratum: Stratum) -> ComponentBounds:
    if stratum.k not in (1, 2):
        raise UnsupportedK(f"component bounds need k in {{1, 2}}, got k={stratum.k}")
    finite = stratum.genus + kappa(stratum)
    if stratum.k == 1:
        simple = sum(1 for b in stratum.poles if b == 1)
        return ComponentBounds(finite, simple, stratum.p, True)
    return ComponentBounds(finite, 0, stratum.p, False)


@dataclass(frozen=True)
class BoundsReport:
    """Every bound that applies to a stratum; inapplicable entries are None."""

    stratum: Stratum
    g: int
    n: int
    p: int
    mgas_lower: int
    mgas_upper: UpperBound | None
    sc_lower: ScLower
    sc_stratum_bound: int | None
    max_finite_volume_components: int | None
    infinite_cylinder_max: int | None
    free_component_max: int
    generic_mgas: GenericMgas
    chamber_bound: int | None = None

    @property
    def degenerate_core_possible(self) -> bool | None:
        return self.sc_lower.degenerate_core_possible


def _optional(func, *args):
    try:
        return func(*args)
    except PoleStrataError:
        return None


def bounds_report(stratum: Stratum, triangle_counts: list[int] | None = None) -> BoundsReport:
    components = _optional(invariant_component_bounds, stratum)
    g, n, p = stratum.genus, stratum.n, stratum.p
    chamber = None
    if triangle_counts is not None:
        chamber = sc_chamber_bound(g, n, p, triangle_counts, k=stratum.k)
    return BoundsReport(
        stratum=stratum,
        g=g,
        n=n,
        p=p,
        mgas_lower=mgas_lower(stratum),
        mgas_upper=_optional(mgas_upper, stratum),
        sc_lower=sc_lower(stratum),
        sc_stratum_bound=_optional(sc_stratum_bound, stratum),
        max_finite_volume_components=components.finite_volume_max if components else None,
        infinite_cylinder_max=components.infinite_cylinder_max if components else None,
        free_component_max=p,
        generic_mgas=mgas_generic(stratum),
        chamber_bound=chamber,
    )
