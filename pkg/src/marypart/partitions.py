"""m-ary partitions: representation, enumeration, counting, simple/non-simple split."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Iterator

from .digits import _check_base, digit_product, to_base_m

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    """Raised when an operation would materialize more partitions than allowed."""

    def __init__(self, n: int, m: int, count: int, cap: int):
        super().__init__(f"b_{m}({n}) = {count} partitions exceeds cap {cap}")
        self.n, self.m, self.count, self.cap = n, m, count, cap


def default_cap() -> int:
    env = os.environ.get("MARY_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class MaryPartition:
    """Multiplicity vector ``[l_0, l_1, ...]``: ``mults[i]`` parts equal to ``base**i``.

    Trailing zeros are trimmed on construction; the empty vector partitions 0.
    """

    base: int
    mults: tuple[int, ...]

    def __post_init__(self):
        _check_base(self.base)
        mults = list(self.mults)
        if any(x < 0 for x in mults):
            raise ValueError(f"negative multiplicity in {mults}")
        while mults and mults[-1] == 0:
            mults.pop()
        object.__setattr__(self, "mults", tuple(mults))

    @classmethod
    def _trusted(cls, base: int, mults: tuple[int, ...]) -> MaryPartition:
        # skips validation; ``mults`` must be nonnegative and trimmed
        p = object.__new__(cls)
        p.__dict__.update(base=base, mults=mults)
        return p

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.mults[i] if i < len(self.mults) else 0

    @property
    def value(self) -> int:
        return value(self)

    @property
    def nops(self) -> int:
        return sum(self.mults)

    def padded(self, length: int) -> list[int]:
        """Multiplicities as a list of at least ``length`` entries."""
        return list(self.mults) + [0] * (length - len(self.mults))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.mults)) + "]"


@dataclass(frozen=True)
class PartitionTriple:
    all: int
    simple: int
    nonsimple: int

    def __post_init__(self):
        if self.all != self.simple + self.nonsimple:
            raise ValueError(f"inconsistent counts {self}")


def value(p: MaryPartition) -> int:
    total = 0
    for x in reversed(p.mults):
        total = total * p.base + x
    return total


def nops(p: MaryPartition) -> int:
    return sum(p.mults)


# -- counting ---------------------------------------------------------------

_tables: dict[int, list[int]] = {}
_tables_lock = threading.Lock()


def _bm_table(limit: int, m: int) -> list[int]:
    # c(n, j) = c(n - m^j, j) + c(n, j - 1), c(., 0) = 1, rolled over j in place
    table = [1] * (limit + 1)
    p = m
    while p <= limit:
        for i in range(p, limit + 1):
            table[i] += table[i - p]
        p *= m
    return table


def count_bm(n: int, m: int) -> int:
    """Number of m-ary partitions of ``n`` (exact)."""
    _check_base(m)
    if n < 0:
        raise ValueError(f"n must be a natural number, got {n}")
    with _tables_lock:
        table = _tables.get(m)
        if table is None or len(table) <= n:
            size = max(n, 2 * (len(table) if table else 0), 1024)
            table = _tables[m] = _bm_table(size, m)
    return table[n]


def count_triple(n: int, m: int) -> PartitionTriple:
    total = count_bm(n, m)
    simple = digit_product(n, m, start=1)
    return PartitionTriple(total, simple, total - simple)


def check_cap(n: int, m: int, cap: int | None = None) -> int:
    """Return ``b_m(n)``, raising CapExceeded if it is above ``cap``."""
    cap = default_cap() if cap is None else cap
    count = count_bm(n, m)
    if count > cap:
        raise CapExceeded(n, m, count, cap)
    return count


# -- enumeration ------------------------------------------------------------

def _descend(rest: int, j: int, powers: list[int], suffix: tuple[int, ...]):
    p = powers[j]
    if j == 1:
        for l1 in range(rest // p, -1, -1):
            yield (rest - l1 * p, l1) + suffix
        return
    for lj in range(rest // p, -1, -1):
        yield from _descend(rest - lj * p, j - 1, powers, (lj,) + suffix)


def _trim(mults: tuple[int, ...]) -> tuple[int, ...]:
    if not mults or mults[-1]:
        return mults
    end = len(mults)
    while end and mults[end - 1] == 0:
        end -= 1
    return mults[:end]


def raw_partitions(n: int, m: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Multiplicity tuples of every m-ary partition of ``n``, padded to the
    digit length of ``n``, in ``enumerate_all`` order."""
    check_cap(n, m, cap)
    if n < m:
        yield (n,) if n else ()
        return
    powers = [1]
    while powers[-1] * m <= n:
        powers.append(powers[-1] * m)
    yield from _descend(n, len(powers) - 1, powers, ())


def enumerate_all(n: int, m: int, cap: int | None = None) -> Iterator[MaryPartition]:
    """Yield every m-ary partition of ``n`` once.

    Order: multiplicity of the largest power first, each taken from its
    largest feasible value down to 0; the multiplicity of 1 takes the rest.
    """
    _check_base(m)
    for mults in raw_partitions(n, m, cap):
        yield MaryPartition._trusted(m, _trim(mults))


def is_simple(p: MaryPartition, n: int) -> bool:
    """True iff ``l_i <= n_i`` for every ``i >= 1``."""
    if value(p) != n:
        raise ValueError(f"{p} is not a partition of {n}")
    digits = to_base_m(n, p.base).digits
    # a partition of n never uses a power above n's top digit
    return all(x <= d for x, d in zip(p.mults[1:], digits[1:]))


def enumerate_simple(n: int, m: int) -> Iterator[MaryPartition]:
    """Yield the simple m-ary partitions of ``n``, in ``enumerate_all`` order."""
    d = to_base_m(n, m)
    if n == 0:
        yield MaryPartition(m, ())
        return
    powers = [m**i for i in range(len(d))]

    def rec(i, rest, suffix):
        if i == 0:
            yield (rest,) + suffix
            return
        for li in range(d[i], -1, -1):
            yield from rec(i - 1, rest - li * powers[i], (li,) + suffix)

    for mults in rec(len(d) - 1, n, ()):
        yield MaryPartition._trusted(m, _trim(mults))


def enumerate_nonsimple(n: int, m: int, cap: int | None = None) -> Iterator[MaryPartition]:
    digits = to_base_m(n, m).digits
    for mults in raw_partitions(n, m, cap):
        if any(x > d for x, d in zip(mults[1:], digits[1:])):
            yield MaryPartition._trusted(m, _trim(mults))
