import itertools
import random

import pytest

from polestrata.errors import MalformedInput
from polestrata.multigraph import Multigraph, canonical_form, multigraphs_with_degrees


def _degrees(matrix):
    return [sum(row) + row[i] for i, row in enumerate(matrix)]


def _connected(matrix):
    return Multigraph.from_matrix(matrix).is_connected()


def _brute_force_graphs(degrees, connected):
    """Every symmetric matrix with the right degrees (diagonal counts loops)."""
    size = len(degrees)
    cells = [(i, j) for i in range(size) for j in range(i, size)]
    ranges = [range((degrees[i] if i != j else degrees[i] // 2) + 1) for i, j in cells]
    found = []
    for values in itertools.product(*ranges):
        m = [[0] * size for _ in range(size)]
        for (i, j), x in zip(cells, values):
            m[i][j] = m[j][i] = x
        if _degrees(m) == list(degrees) and (not connected or _connected(m)):
            found.append(m)
    return found


def _isomorphic(a, ca, b, cb):
    size = len(a)
    for perm in itertools.permutations(range(size)):
        if all(ca[perm[i]] == cb[i] for i in range(size)) and all(
            a[perm[i]][perm[j]] == b[i][j] for i in range(size) for j in range(size)
        ):
            return True
    return False


@pytest.mark.parametrize(
    "degrees", [[2, 2, 2, 2], [3, 3], [1, 3, 2], [4], [2, 2], [1, 1, 2], [3, 1, 1, 1], [0, 2]]
)
@pytest.mark.parametrize("connected", [True, False])
def test_degree_enumeration_matches_brute_force(degrees, connected):
    got = sorted(map(str, multigraphs_with_degrees(degrees, connected=connected)))
    want = sorted(map(str, _brute_force_graphs(degrees, connected)))
    assert got == want


def test_cycle_has_one_class():
    graphs = list(multigraphs_with_degrees([2, 2, 2, 2]))
    assert len(graphs) == 3
    codes = {canonical_form(g, [0] * 4)[0] for g in graphs}
    assert len(codes) == 1


def test_canonical_form_invariant_under_relabelling():
    rng = random.Random(7)
    for _ in range(200):
        size = rng.randint(1, 6)
        edges = [tuple(sorted((rng.randrange(size), rng.randrange(size)))) for _ in range(rng.randint(0, 8))]
        g = Multigraph(size, tuple(edges))
        colors = [rng.randint(0, 2) for _ in range(size)]
        perm = list(range(size))
        rng.shuffle(perm)
        h = g.relabel(perm)
        h_colors = [colors[perm[new]] for new in range(size)]
        assert canonical_form(g.matrix(), colors)[0] == canonical_form(h.matrix(), h_colors)[0]


def test_canonical_form_separates_non_isomorphic():
    rng = random.Random(11)
    graphs = []
    for _ in range(150):
        size = rng.randint(3, 5)
        edges = [tuple(sorted((rng.randrange(size), rng.randrange(size)))) for _ in range(rng.randint(2, 6))]
        colors = [rng.randint(0, 1) for _ in range(size)]
        graphs.append((Multigraph(size, tuple(edges)).matrix(), colors))
    for (a, ca), (b, cb) in itertools.combinations(graphs[:60], 2):
        if len(a) != len(b):
            continue
        same = canonical_form(a, ca)[0] == canonical_form(b, cb)[0]
        assert same == _isomorphic(a, ca, b, cb)


def test_canonical_order_reproduces_code():
    g = Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (1, 1)))
    (_, code), order = canonical_form(g.matrix(), [0, 0, 1, 0])
    h = g.relabel(order).matrix()
    assert tuple(h[i][j] for i in range(4) for j in range(i, 4)) == code


def test_bridges():
    path = Multigraph(3, ((0, 1), (1, 2)))
    assert path.bridges() == [0, 1]
    parallel = Multigraph(2, ((0, 1), (0, 1)))
    assert parallel.bridges() == []
    loop_tail = Multigraph(3, ((0, 0), (0, 1), (1, 2), (1, 2)))
    assert loop_tail.bridges() == [1]
    assert Multigraph(1, ((0, 0),)).bridges() == []


def test_bridges_match_removal_oracle():
    rng = random.Random(3)
    for _ in range(300):
        size = rng.randint(1, 6)
        edges = tuple(
            tuple(sorted((rng.randrange(size), rng.randrange(size)))) for _ in range(rng.randint(0, 8))
        )
        g = Multigraph(size, edges)
        expected = []
        for idx, (i, j) in enumerate(g.edges):
            if i != j and j not in g.component_of(i, removed_edge=idx):
                expected.append(idx)
        assert g.bridges() == expected


def test_valency_counts_loops_twice():
    g = Multigraph(2, ((0, 0), (0, 1)))
    assert g.valencies() == (3, 1)
    assert sum(g.valencies()) == 2 * g.edge_count


def test_malformed():
    with pytest.raises(MalformedInput):
        Multigraph(0)
    with pytest.raises(MalformedInput):
        Multigraph(2, ((0, 2),))
    with pytest.raises(MalformedInput):
        Multigraph(2, ((0, 1, 1),))
