import random

from sympy.utilities.iterables import multiset_partitions as sympy_partitions

from polestrata.partitions import multiset_partitions


def _normal(partition):
    return tuple(sorted(tuple(sorted(block)) for block in partition))


def test_matches_sympy_oracle():
    rng = random.Random(0)
    for _ in range(150):
        items = [rng.choice([-2, -1, 1, 2, 3]) for _ in range(rng.randint(1, 7))]
        blocks = rng.randint(1, len(items))
        ours = [_normal(p) for p in multiset_partitions(items, blocks)]
        assert len(ours) == len(set(ours)), "duplicate partition"
        theirs = {_normal(p) for p in sympy_partitions(sorted(items), blocks)}
        assert set(ours) == theirs


def test_accept_and_required_filters():
    rng = random.Random(1)
    for _ in range(100):
        items = [rng.choice([-3, -1, 1, 2, 4]) for _ in range(rng.randint(2, 7))]
        blocks = rng.randint(1, len(items))
        accept = lambda b: sum(b) % 2 == 0  # noqa: E731
        required = lambda v: v > 0  # noqa: E731
        ours = {
            _normal(p) for p in multiset_partitions(items, blocks, accept=accept, required=required)
        }
        theirs = {
            _normal(p)
            for p in sympy_partitions(sorted(items), blocks)
            if all(accept(tuple(b)) and any(required(v) for v in b) for b in p)
        }
        assert ours == theirs


def test_degenerate_block_counts():
    assert list(multiset_partitions([1, 2], 3)) == []
    assert list(multiset_partitions([1, 2], 0)) == []
    assert list(multiset_partitions([1, 1], 2)) == [[(1,), (1,)]]
