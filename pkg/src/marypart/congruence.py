"""Theorem-level claims about m-ary partitions, as checkable predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator

from .digits import digit_product, to_base_m
from .partitions import (
    CapExceeded,
    MaryPartition,
    count_bm,
    default_cap,
    enumerate_all,
    enumerate_simple,
    raw_partitions,
    _trim,
)
from .stratification import (
    ResidueHistogram,
    equidistribution_failures,
    is_equidistributed,
    nops_histogram,
    stratify,
)

SAMPLE_LIMIT = 100


@dataclass(frozen=True)
class VerificationOutcome:
    claim: str
    n: int
    m: int
    holds: bool
    c: int | None = None
    witness: dict[str, Any] | None = None
    info: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failed outcome needs a witness")

    def witness_record(self) -> dict[str, Any]:
        """JSON-ready failure record."""
        w = self.witness or {}
        return {
            "claim": self.claim,
            "n": str(self.n),
            "m": self.m,
            "c": self.c,
            "histogram": w.get("histogram"),
            "members_sample": w.get("members_sample", []),
        }


def _outcome(claim, n, m, holds, *, c=None, histogram: ResidueHistogram | None = None,
             members=(), **info) -> VerificationOutcome:
    witness = None
    if not holds:
        witness = {
            "histogram": list(histogram.counts) if histogram is not None else None,
            "members_sample": [list(p.mults) for p in list(members)[:SAMPLE_LIMIT]],
        }
    return VerificationOutcome(claim, n, m, holds, c, witness, info)


def afs_residue(n: int, m: int) -> int:
    """Predicted residue of ``b_m(n)`` mod m: product of ``(n_i + 1)`` over ``i >= 1``."""
    return digit_product(n, m, start=1) % m


def verify_afs(n: int, m: int) -> VerificationOutcome:
    """Check ``b_m(n)`` mod m against the digit product, in both the ``n`` and ``m*n`` forms."""
    got = count_bm(n, m) % m
    want = afs_residue(n, m)
    got_mn = count_bm(m * n, m) % m
    want_mn = digit_product(n, m, start=0) % m
    return _outcome(
        "afs", n, m, got == want and got_mn == want_mn,
        residue=got, predicted=want, residue_mn=got_mn, predicted_mn=want_mn,
    )


def verify_nonsimple(n: int, m: int, cap: int | None = None) -> VerificationOutcome:
    """Equidistribution of nops on the non-simple partitions, at every level of the decomposition."""
    s = stratify(n, m, cap)
    bad = equidistribution_failures(s)
    if not bad:
        return _outcome("equidist_N", n, m, True, nonsimple=len(s))
    level, key, h = bad[0]
    if level == "class":
        members = next(c.members for c in s.fibers[key[0]][key[1]] if c.tail == key[2])
    elif level == "stratum":
        members = [p for c in s.fibers[key[0]][key[1]] for p in c.members]
    elif level == "fiber":
        members = s.fiber_members(key[0])
    else:
        members = s.members()
    return _outcome(
        "equidist_N", n, m, False, histogram=h, members=members,
        level=level, key=list(key), failures=len(bad),
    )


def digit_criterion(n: int, m: int) -> bool:
    """True iff some base-m digit of ``n`` above the units digit equals ``m - 1``."""
    return (m - 1) in to_base_m(n, m).digits[1:]


def verify_digit_criterion(n: int, m: int, cap: int | None = None) -> VerificationOutcome:
    """Compare the digit criterion with the nops histogram of a full enumeration."""
    ps = list(enumerate_all(n, m, cap))
    h = nops_histogram(ps, m)
    predicted = digit_criterion(n, m)
    actual = is_equidistributed(h)
    return _outcome(
        "digit_criterion", n, m, predicted == actual, histogram=h, members=ps,
        predicted=predicted, equidistributed=actual, counts=list(h.counts),
    )


def verify_equidistribution_S(n: int, m: int, cap: int | None = None) -> VerificationOutcome:
    """Equidistribution on the simple partitions must match that on all partitions.

    The all-partitions side is enumerated when ``b_m(n)`` fits under ``cap``,
    otherwise it falls back to the digit criterion.
    """
    simple = list(enumerate_simple(n, m))
    hs = nops_histogram(simple, m)
    cap = default_cap() if cap is None else cap
    try:
        hp = nops_histogram(enumerate_all(n, m, cap), m)
        p_side, route = is_equidistributed(hp), "enumeration"
    except CapExceeded:
        p_side, route = digit_criterion(n, m), "digit_criterion"
    s_side = is_equidistributed(hs)
    return _outcome(
        "equidist_S", n, m, s_side == p_side, histogram=hs, members=simple,
        simple_equidistributed=s_side, all_equidistributed=p_side, route=route,
        counts=list(hs.counts),
    )


def iter_nmc(n: int, m: int, c: int, cap: int | None = None) -> Iterator[MaryPartition]:
    """Partitions with some ``j >= 1`` where ``l_j > n_j`` and the next ``c``
    multiplicities equal the digits of n (zero past the end)."""
    if c < 0:
        raise ValueError(f"c must be a natural number, got {c}")
    digits = to_base_m(n, m).digits
    width = len(digits)
    padded = digits + (0,) * c
    for mults in raw_partitions(n, m, cap):
        row = mults + (0,) * c
        for j in range(1, width):
            if row[j] > padded[j] and row[j + 1:j + c + 1] == padded[j + 1:j + c + 1]:
                yield MaryPartition._trusted(m, _trim(mults))
                break


def n_mc_members(n: int, m: int, c: int, cap: int | None = None) -> list[MaryPartition]:
    return list(iter_nmc(n, m, c, cap))


def verify_nmc_congruence(n: int, m: int, c: int, cap: int | None = None) -> VerificationOutcome:
    """Check ``|N_{m,c}(n)| = 0 (mod m**(c+1))``; also reports ``|S_{m,c}(n)|``."""
    members = n_mc_members(n, m, c, cap)
    size = len(members)
    modulus = m ** (c + 1)
    return _outcome(
        "nmc", n, m, size % modulus == 0, c=c, members=members,
        nmc_count=size, smc_count=count_bm(n, m) - size, modulus=modulus,
    )
