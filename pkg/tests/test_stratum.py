import pytest
from hypothesis import given, strategies as st

from polestrata.errors import MalformedStratum, UnsupportedStratum
from polestrata.stratum import Nonemptiness, Stratum, genus, is_nonempty, iter_strata


def test_genus_examples():
    assert genus(Stratum(1, (3,), (1, 1, 1))) == 1
    assert genus(Stratum(1, (1,), (1, 1, 1))) == 0
    assert genus(Stratum(2, (2, 1, 1, 1, -1, -1, -1), (2, 2, 2))) == 0


@pytest.mark.parametrize(
    "k, zeros, poles",
    [
        (1, (1,), (2,)),  # odd degree sum
        (1, (0, 2), (4,)),  # marked point
        (2, (-2, 2), ()),  # -2 is a pole for k=2
        (2, (2,), (1,)),  # pole order below k
        (1, (1,), (1, 1, 1, 1, 1)),  # negative genus
        (0, (1,), ()),
    ],
)
def test_malformed(k, zeros, poles):
    with pytest.raises(MalformedStratum):
        Stratum(k, zeros, poles)


def test_canonical_and_render():
    s = Stratum(1, (1, 3, 1), (2, 1, 2))
    assert s.canonical() == Stratum(1, (3, 1, 1), (1, 2, 2))
    assert str(s.canonical()) == "H^1(3,1^2,-1,-2^2)"
    assert s.orders == (1, 3, 1, -2, -1, -2)


def test_require_conical():
    with pytest.raises(UnsupportedStratum):
        Stratum(1, (), (1, 1)).require_conical()


def test_nonemptiness_pins():
    assert is_nonempty(Stratum(1, (1,), (1,))) is Nonemptiness.EMPTY
    assert is_nonempty(Stratum(2, (2,), (2,))) is Nonemptiness.NONEMPTY
    assert is_nonempty(Stratum(2, (1, -1))) is Nonemptiness.EMPTY
    assert is_nonempty(Stratum(2, (1, 3))) is Nonemptiness.EMPTY
    assert is_nonempty(Stratum(2, (4,))) is Nonemptiness.NONEMPTY
    assert is_nonempty(Stratum(3, (4, -2, -2), (3, 3))) is Nonemptiness.NONEMPTY
    assert is_nonempty(Stratum(3, (6,))) is Nonemptiness.UNKNOWN
    assert is_nonempty(Stratum(1, (2,))) is Nonemptiness.NONEMPTY


def test_abelian_nonempty_iff_pole_sum_at_least_two():
    for s in iter_strata(1, 6, genera=(0, 1, 2), max_singularities=6):
        status = is_nonempty(s)
        assert status is not Nonemptiness.UNKNOWN
        assert (status is Nonemptiness.NONEMPTY) == (sum(s.poles) >= 2)


def test_quadratic_never_unknown():
    for s in iter_strata(2, 6, genera=(0, 1), max_singularities=6, min_poles=0):
        assert is_nonempty(s) is not Nonemptiness.UNKNOWN


def test_iter_strata_unique_and_canonical():
    seen = set()
    for s in iter_strata(2, 8, genera=(0, 1), max_singularities=7):
        assert s == s.canonical()
        assert s.n >= 1 and s.p >= 1 and s.n + s.p <= 7 and sum(s.poles) <= 8
        assert s.pattern_key() not in seen
        seen.add(s.pattern_key())
    assert seen


def test_iter_strata_complete_small_range():
    # brute force over all order tuples in a box
    import itertools

    expected = set()
    for n in range(1, 4):
        for zeros in itertools.combinations_with_replacement(range(1, 9), n):
            for p in range(1, 4):
                for poles in itertools.combinations_with_replacement(range(1, 7), p):
                    if sum(poles) > 6 or (sum(zeros) - sum(poles)) != -2:
                        continue
                    expected.add(Stratum(1, zeros, poles).pattern_key())
    got = {s.pattern_key() for s in iter_strata(1, 6, max_singularities=6) if s.n < 4 and s.p < 4}
    assert got == expected


@given(
    st.integers(1, 4),
    st.lists(st.integers(-3, 12), min_size=1, max_size=6),
    st.lists(st.integers(1, 12), max_size=5),
)
def test_genus_total_on_valid_inputs(k, zeros, poles):
    try:
        s = Stratum(k, zeros, poles)
    except MalformedStratum:
        valid = (
            all(a != 0 and a > -k for a in zeros)
            and all(b >= k for b in poles)
            and (sum(zeros) - sum(poles)) % (2 * k) == 0
            and (sum(zeros) - sum(poles)) // (2 * k) + 1 >= 0
        )
        assert not valid
        return
    assert sum(s.zeros) - sum(s.poles) == k * (2 * s.genus - 2)
    assert s.genus >= 0
