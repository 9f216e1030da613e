import pytest
from hypothesis import given, settings, strategies as st

from marypart.digits import digit_product, dominated_list, to_base_m
from marypart.partitions import (
    CapExceeded,
    MaryPartition,
    PartitionTriple,
    count_bm,
    count_triple,
    enumerate_all,
    enumerate_nonsimple,
    enumerate_simple,
    is_simple,
    nops,
    value,
)
from oracles import brute_partitions, brute_simple

# 8, 4+4, 4+2+2, 4+2+1+1, 4+1+1+1+1, 2+2+2+2, 2+2+2+1+1, 2+2+1+1+1+1, 2+1*6, 1*8
PARTITIONS_OF_8 = {
    (0, 0, 0, 1), (0, 0, 2), (0, 2, 1), (2, 1, 1), (4, 0, 1),
    (0, 4), (2, 3), (4, 2), (6, 1), (8,),
}

SIMPLE_60 = [
    (0, 2, 0, 2), (3, 1, 0, 2), (6, 0, 0, 2), (27, 2, 0, 1), (30, 1, 0, 1),
    (33, 0, 0, 1), (54, 2), (57, 1), (60,),
]


def P(m, *mults):
    return MaryPartition(m, mults)


def test_canonical_form():
    assert P(2, 2, 1, 1, 0).mults == (2, 1, 1)
    assert P(3).mults == ()
    with pytest.raises(ValueError):
        P(3, 1, -1)
    assert P(3, 0, 5, 5, 0).padded(4) == [0, 5, 5, 0]


def test_value_examples():
    assert value(P(3, 6, 0, 6, 0)) == 60
    assert value(P(4)) == 0
    assert value(P(2, 2, 1, 1, 0)) == 8


def test_nops_examples():
    assert nops(P(2, 2, 1, 1, 0)) == 4
    assert nops(P(2, 8, 0, 0, 0)) == 8
    assert nops(P(3, 0, 5, 5, 0)) == 10


def test_enumerate_8():
    got = [p.mults for p in enumerate_all(8, 2)]
    assert len(got) == 10
    assert set(got) == PARTITIONS_OF_8


def test_enumerate_order():
    got = [p.mults for p in enumerate_all(8, 2)]
    assert got[0] == (0, 0, 0, 1) and got[-1] == (8,)
    assert [p.mults for p in enumerate_all(0, 3)] == [()]
    for n in range(1, 5):
        assert [p.mults for p in enumerate_all(n, 5)] == [(n,)]


def test_enumerate_60():
    assert sum(1 for _ in enumerate_all(60, 3)) == 117


def test_simple_examples():
    assert [p.mults for p in enumerate_simple(60, 3)] == SIMPLE_60
    assert {p.mults for p in enumerate_simple(8, 2)} == {(0, 0, 0, 1), (8,)}
    assert [p.mults for p in enumerate_simple(0, 4)] == [()]


def test_is_simple_examples():
    assert is_simple(P(3, 0, 2, 0, 2), 60)
    assert not is_simple(P(3, 6, 0, 6, 0), 60)
    assert is_simple(P(3, 60, 0, 0, 0), 60)
    with pytest.raises(ValueError):
        is_simple(P(3, 1, 1), 60)


def test_count_examples():
    assert count_bm(8, 2) == 10
    assert count_bm(60, 3) == 117
    assert all(count_bm(0, m) == 1 for m in range(2, 9))
    assert all(count_bm(n, m) == 1 for m in range(2, 9) for n in range(m))


def test_count_is_exact_for_large_n():
    # b_2(n) overflows 64 bits below n = 10^5
    big = count_bm(10**5, 2)
    assert big > 2**64
    assert big == count_bm(10**5 + 1, 2)


def test_triple_examples():
    assert count_triple(60, 3) == PartitionTriple(117, 9, 108)
    assert count_triple(8, 2) == PartitionTriple(10, 2, 8)
    assert count_triple(0, 5) == PartitionTriple(1, 1, 0)
    with pytest.raises(ValueError):
        PartitionTriple(3, 1, 1)


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_all(60, 3, cap=116))
    assert sum(1 for _ in enumerate_all(60, 3, cap=117)) == 117


def test_cap_from_env(monkeypatch):
    monkeypatch.setenv("MARY_CAP", "50")
    with pytest.raises(CapExceeded):
        next(enumerate_all(60, 3))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_enumeration_matches_brute_force(m):
    limit = 64 if m == 2 else 120
    for n in range(limit + 1):
        got = [p.mults for p in enumerate_all(n, m)]
        assert len(got) == len(set(got))
        assert set(got) == brute_partitions(n, m)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_enumeration_count_matches_dp(m):
    for n in range(201):
        seen = set()
        for p in enumerate_all(n, m):
            assert value(p) == n
            seen.add(p)
        assert len(seen) == count_bm(n, m)


@pytest.mark.parametrize("m", range(2, 8))
def test_stability(m):
    for base_n in range(0, 3001, m):
        for r in range(1, m):
            assert count_bm(base_n + r, m) == count_bm(base_n, m)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_simple_enumeration(m):
    limit = 64 if m == 2 else 150
    for n in range(limit + 1):
        simple = [p.mults for p in enumerate_simple(n, m)]
        assert len(simple) == digit_product(n, m, start=1)
        assert set(simple) == brute_simple(n, m)
        filtered = [p.mults for p in enumerate_all(n, m) if is_simple(p, n)]
        assert simple == filtered
        nonsimple = {p.mults for p in enumerate_nonsimple(n, m)}
        assert nonsimple == set(p.mults for p in enumerate_all(n, m)) - set(simple)


@given(st.integers(0, 3000), st.integers(2, 7))
@settings(max_examples=200)
def test_simple_bijection_with_dominated(n, m):
    d = to_base_m(n, m)
    images = set()
    for p in enumerate_simple(n, m):
        digits = [d[0]] + [p[i] for i in range(1, len(d))]
        images.add(sum(x * m**i for i, x in enumerate(digits)))
    target = {a for a in dominated_list(n, m) if a % m == n % m}
    assert images == target
    assert len(images) == digit_product(n, m, start=1)
