import itertools
import random

import pytest

from polestrata.bounds import (
    GenericKind,
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
    triangles_from_boundary,
)
from polestrata.errors import InvalidBeta, MalformedInput, NotApplicable, NotIrreducible, UnsupportedK
from polestrata.notation import parse_stratum as P
from polestrata.representation import is_irreducible, kappa
from polestrata.stratum import iter_strata


def test_arc_counts_from_triangles():
    assert mgas_from_triangles(0, 2, 4, 4) == 8
    # H^1(3,-1^3): 9 arcs, so t = 9 - (2g-2+n+p) = 5
    assert mgas_from_triangles(1, 1, 3, 5) == 9
    s = P("H^1(4,3,2,-5)")
    assert mgas_from_triangles(s.genus, s.n, s.p, 0) == mgas_lower(s)


def test_arc_counts_from_boundary():
    assert mgas_from_boundary(0, 2, 4, 4) == 8
    assert mgas_from_boundary(0, 1, 3, 3) == 3
    assert mgas_from_boundary(1, 2, 3, 3) == 6 - 6 + 6 + 6
    with pytest.raises(InvalidBeta):
        mgas_from_boundary(0, 2, 4, 3)


def test_triangle_and_boundary_formulas_agree():
    for g, n, p in itertools.product(range(4), range(1, 6), range(1, 6)):
        for beta in range(p, 4 * g - 4 + 2 * n + 2 * p + 1):
            t = triangles_from_boundary(g, n, p, beta)
            assert mgas_from_triangles(g, n, p, t) == mgas_from_boundary(g, n, p, beta)


def test_upper_bound_pins():
    assert mgas_upper(P("H^1(1^2,-1^4)")).value == 8
    assert mgas_upper(P("H^1(3,-1^3)")).value == 9
    assert mgas_upper(P("H^1(1^2,-2^2)")).value == 4
    assert mgas_upper(P("H^1(3,-1^5)")).value == 7
    assert mgas_lower(P("H^1(1^2,-2^2)")) == 2


def test_upper_bound_rules():
    u = mgas_upper(P("H^1(2,2,-6)"))  # g=0, p=1, n=2: only the base rule
    assert u.rules == ("base",)
    u = mgas_upper(P("H^1(2,1,1,-6)"))
    assert u.rule == "one-pole-genus-zero" and u.value == 3
    u = mgas_upper(P("H^1(2,-2)"))
    assert u.rule == "one-pole" and u.value == 6 + 3 - 5
    u = mgas_upper(P("H^1(1,7,-5^2)"))
    assert u.rule == "two-poles-irreducible" and u.value == 3
    u = mgas_upper(P("H^1(1^2,-2^2)"))  # reducible: no refinement
    assert u.rules == ("base",)
    u = mgas_upper(P("H^2(2,-2)"))  # refinements are for k=1 only
    assert u.rules == ("base",)
    with pytest.raises(UnsupportedK):
        mgas_upper(P("H^3(4,-2^2,-3^2)"))
    with pytest.raises(NotApplicable):
        mgas_upper(P("H^1(1,-3)"))


def test_upper_bound_dominates_lower_bound():
    rng = random.Random(0)
    pool = list(iter_strata(1, 8, genera=(0, 1, 2), max_singularities=7))
    pool += list(iter_strata(2, 8, genera=(0, 1), max_singularities=7))
    for s in rng.sample(pool, 400):
        try:
            upper = mgas_upper(s).value
        except NotApplicable:
            assert (s.genus, s.n, s.p) == (0, 1, 1)
            continue
        assert upper >= mgas_lower(s)


def test_generic_counts():
    g = mgas_generic(P("H^1(3,-1^3)"))
    assert (g.kind, g.value) == (GenericKind.EXACT, 9)
    g = mgas_generic(P("H^2(1,-1^3,-2)"))
    assert (g.kind, g.value) == (GenericKind.AT_LEAST, 7)
    assert str(g) == "AtLeast(7)"
    assert mgas_generic(P("H^2(2,-1^2,-2^2)")).kind is GenericKind.EXACT
    g = mgas_generic(P("H^3(4,-2^2,-3^2)"))
    assert (g.kind, g.value) == (GenericKind.EXACT, 7)
    assert mgas_generic(P("H^3(2,-4^2)")).kind is GenericKind.NOT_APPLICABLE
    assert mgas_generic(P("H^3(1^3,-3^3)")).kind is GenericKind.EXACT
    assert mgas_generic(P("H^1(1^2,-2^2)")).kind is GenericKind.NOT_APPLICABLE
    assert mgas_generic(P("H^1(1^2)")).kind is GenericKind.NOT_APPLICABLE


def test_sc_lower():
    sc = sc_lower(P("H^1(1^2,-2^2)"))
    assert sc.value == 2
    assert sc.degenerate_core_possible is True
    assert sc_lower(P("H^3(4,-2^2,-3^2)")).degenerate_core_possible is False
    assert sc_lower(P("H^4(11,-3,-4^4)")).degenerate_core_possible is False
    assert sc_lower(P("H^3(1^3,-3^3)")).degenerate_core_possible is None


def test_chamber_bound():
    assert sc_chamber_bound(0, 1, 5, [3]) == 10
    for p in range(3, 65):
        assert sc_chamber_bound(0, 1, p, [p - 2]) == p * (p - 1) // 2
    assert sc_chamber_bound(2, 2, 3, []) == mgas_lower(P("H^1(3,2,-1^3)"))
    assert sc_chamber_bound(0, 2, 2, [1, 2]) == 2 + 3 + 1
    with pytest.raises(MalformedInput):
        sc_chamber_bound(0, 1, 3, [-1])
    with pytest.raises(NotApplicable):
        sc_chamber_bound(0, 1, 3, [1], k=2)


def test_stratum_bound():
    assert sc_stratum_bound(P("H^1(1,7,-5^2)")) == 5
    with pytest.raises(NotIrreducible):
        sc_stratum_bound(P("H^1(3,-1^3)"))
    with pytest.raises(NotApplicable):
        sc_stratum_bound(P("H^2(2,-6)"))


def test_stratum_bound_is_chamber_bound_at_max_triangles():
    count = 0
    for s in iter_strata(1, 10, max_singularities=7):
        if not is_irreducible(s).irreducible:
            continue
        g, n, p = s.genus, s.n, s.p
        if (g, n, p) == (0, 1, 1):
            continue  # t_1 = -1: no core at all
        assert sc_stratum_bound(s) == sc_chamber_bound(g, n, p, [4 * g - 4 + 2 * n + p])
        count += 1
    assert count > 50


def test_component_bounds():
    b = invariant_component_bounds(P("H^1(1^4,-1^4)"))
    assert (b.finite_volume_max, b.infinite_cylinder_max, b.free_component_max) == (4, 4, 4)
    b = invariant_component_bounds(P("H^1(1,7,-5^2)"))
    assert (b.finite_volume_max, b.infinite_cylinder_max, b.free_component_max) == (0, 0, 2)
    s = P("H^1(3,-1^3)")
    b = invariant_component_bounds(s)
    assert (b.finite_volume_max, b.infinite_cylinder_max, b.free_component_max) == (1 + kappa(s), 3, 3)
    b = invariant_component_bounds(P("H^2(2,-2)"))
    assert b.infinite_cylinder_max == 0 and not b.infinite_cylinder_applies
    with pytest.raises(UnsupportedK):
        invariant_component_bounds(P("H^3(6)"))


def test_report():
    r = bounds_report(P("H^1(1,7,-5^2)"), triangle_counts=[2])
    assert (r.g, r.n, r.p) == (0, 2, 2)
    assert r.mgas_lower <= r.mgas_upper.value
    assert r.sc_stratum_bound == 5 and r.chamber_bound == 2 + 2 + 1
    assert r.max_finite_volume_components == 0 and r.degenerate_core_possible
    r = bounds_report(P("H^3(4,-2^2,-3^2)"))
    assert r.mgas_upper is None and r.max_finite_volume_components is None
    assert r.degenerate_core_possible is False
