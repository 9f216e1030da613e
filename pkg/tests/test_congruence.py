import pytest

from marypart.congruence import (
    VerificationOutcome,
    afs_residue,
    digit_criterion,
    n_mc_members,
    verify_afs,
    verify_digit_criterion,
    verify_equidistribution_S,
    verify_nmc_congruence,
    verify_nonsimple,
)
from marypart.partitions import enumerate_nonsimple
from oracles import brute_partitions, digits_of


def test_afs_residue_examples():
    assert afs_residue(60, 3) == 0
    assert afs_residue(8, 2) == 0
    assert all(afs_residue(n, m) == 1 for m in range(2, 8) for n in range(m))


def test_verify_afs_examples():
    out = verify_afs(60, 3)
    assert out.holds and out.info["residue"] == 117 % 3 == 0
    four = verify_afs(4, 2)  # b_2(8) = 10 against (0+1)(0+1)(1+1)
    assert four.holds and four.info["residue_mn"] == 0 and four.info["predicted_mn"] == 0
    assert verify_afs(0, 5).holds


@pytest.mark.parametrize("m", range(2, 8))
def test_afs_small_grid(m):
    assert all(verify_afs(n, m).holds for n in range(600))


def test_digit_criterion_examples():
    assert digit_criterion(60, 3)
    assert digit_criterion(8, 2)
    assert not digit_criterion(4, 3)
    assert not digit_criterion(2, 3)


def test_verify_digit_criterion_examples():
    out = verify_digit_criterion(60, 3)
    assert out.holds and out.info["counts"] == [39, 39, 39]
    out = verify_digit_criterion(4, 3)
    assert out.holds and not out.info["predicted"] and out.info["counts"] == [0, 1, 1]
    out = verify_digit_criterion(8, 2)
    assert out.holds and out.info["counts"] == [5, 5]


def test_verify_equidistribution_S_examples():
    out = verify_equidistribution_S(60, 3)
    assert out.holds and out.info["counts"] == [3, 3, 3]
    out = verify_equidistribution_S(4, 3)
    assert out.holds and out.info["counts"] == [0, 1, 1]
    assert verify_equidistribution_S(0, 4).holds


def test_equidistribution_S_falls_back_above_cap():
    out = verify_equidistribution_S(60, 3, cap=10)
    assert out.holds and out.info["route"] == "digit_criterion"


def test_nmc_examples():
    assert {p.mults for p in n_mc_members(8, 2, 0)} == {p.mults for p in enumerate_nonsimple(8, 2)}
    assert len(n_mc_members(8, 2, 0)) == 8
    assert {p.mults for p in n_mc_members(8, 2, 1)} == {(0, 4), (2, 3), (4, 2), (6, 1)}
    assert n_mc_members(2, 3, 1) == [] and n_mc_members(1, 2, 4) == []
    with pytest.raises(ValueError):
        n_mc_members(8, 2, -1)


def test_verify_nmc_examples():
    out = verify_nmc_congruence(8, 2, 1)
    assert out.holds and out.info["nmc_count"] == 4 and out.info["smc_count"] == 6
    out = verify_nmc_congruence(60, 3, 0)
    assert out.holds and out.info["nmc_count"] == 108
    assert verify_nmc_congruence(2, 3, 2).holds


def brute_nmc(n, m, c):
    d = digits_of(n, m) + [0] * (c + 2)
    out = set()
    for p in brute_partitions(n, m):
        q = list(p) + [0] * (c + 2)
        if any(q[j] > d[j] and all(q[j + i] == d[j + i] for i in range(1, c + 1))
               for j in range(1, len(p))):
            out.add(p)
    return out


@pytest.mark.parametrize("m, c", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
def test_nmc_matches_brute_force(m, c):
    for n in range(0, 60):
        assert {p.mults for p in n_mc_members(n, m, c)} == brute_nmc(n, m, c)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_nmc_monotone_in_c(m):
    for n in range(0, 120 if m > 2 else 70):
        sets = [{p.mults for p in n_mc_members(n, m, c)} for c in range(4)]
        assert all(sets[c + 1] <= sets[c] for c in range(3))


def test_nonsimple_outcome():
    out = verify_nonsimple(60, 3)
    assert out.holds and out.info["nonsimple"] == 108


def test_outcome_witness_record():
    with pytest.raises(ValueError):
        VerificationOutcome("afs", 1, 2, False)
    out = VerificationOutcome("nmc", 10**30, 2, False, c=1,
                              witness={"histogram": None, "members_sample": [[1, 2]]})
    assert out.witness_record() == {
        "claim": "nmc", "n": str(10**30), "m": 2, "c": 1,
        "histogram": None, "members_sample": [[1, 2]],
    }
