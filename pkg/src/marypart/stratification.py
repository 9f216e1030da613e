"""Decomposition of the non-simple m-ary partitions of n.

Three levels: fibers of the digit-min map ``f``, strata ``B(z)`` inside a
fiber (first index ``i >= 1`` where the partition leaves the fiber key), and
chain classes inside a stratum (partitions sharing all multiplicities above
``z``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .digits import BaseMDigits, _check_base, to_base_m
from .partitions import MaryPartition, _trim, raw_partitions, value


class InvariantError(AssertionError):
    """A structural property of the decomposition failed (a bug, not bad input)."""


@dataclass(frozen=True)
class ResidueHistogram:
    modulus: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.modulus:
            raise ValueError(f"need {self.modulus} counts, got {len(self.counts)}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: ResidueHistogram) -> ResidueHistogram:
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch")
        return ResidueHistogram(self.modulus, [a + b for a, b in zip(self.counts, other.counts)])


@dataclass(frozen=True)
class ChainClass:
    """One class of partitions with fiber key ``b``, stratum ``z`` and a shared tail.

    ``tail`` holds the multiplicities at indices ``z+1 .. k`` (``k`` the top
    digit index of n). Members are sorted by their multiplicity at ``z``.
    """

    b: int
    z: int
    tail: tuple[int, ...]
    r: int
    members: tuple[MaryPartition, ...]

    @property
    def modulus(self) -> int:
        return self.members[0].base

    def label(self) -> str:
        """Class pattern such as ``[*,*,5,0]``."""
        return "[" + ",".join(["*"] * (self.z + 1) + [str(x) for x in self.tail]) + "]"


@dataclass(frozen=True)
class Stratification:
    n: int
    m: int
    fibers: dict[int, dict[int, list[ChainClass]]] = field(default_factory=dict)

    def classes(self) -> Iterable[ChainClass]:
        for strata in self.fibers.values():
            for classes in strata.values():
                yield from classes

    def fiber_size(self, b: int) -> int:
        return sum(len(c.members) for cs in self.fibers[b].values() for c in cs)

    def fiber_members(self, b: int) -> list[MaryPartition]:
        return [p for cs in self.fibers[b].values() for c in cs for p in c.members]

    def members(self) -> list[MaryPartition]:
        return [p for c in self.classes() for p in c.members]

    def __len__(self) -> int:
        return sum(len(c.members) for c in self.classes())


def _digit_min(mults, d: BaseMDigits):
    return [min(x, d[i]) for i, x in enumerate(mults)]


def _from_list(xs, m: int) -> int:
    total = 0
    for x in reversed(xs):
        total = total * m + x
    return total


def _stratum(mults, d: BaseMDigits):
    for i in range(1, len(mults)):
        if mults[i] > d[i]:
            return i
    return None


def _require_nonsimple(p: MaryPartition, n: int) -> BaseMDigits:
    if value(p) != n:
        raise ValueError(f"{p} is not a partition of {n}")
    d = to_base_m(n, p.base)
    if _stratum(p.mults, d) is None:
        raise ValueError(f"{p} is simple; f is only defined on non-simple partitions")
    return d


def f_map(p: MaryPartition, n: int) -> int:
    """Fiber key of a non-simple partition: the number with digits ``min(n_i, l_i)``."""
    d = _require_nonsimple(p, n)
    return _from_list(_digit_min(p.mults, d), p.base)


def decompose(p: MaryPartition, n: int) -> tuple[tuple[int, ...], int]:
    """Split ``p`` as ``remainder + digits(f_map(p))`` componentwise.

    The remainder has one entry per digit position of ``n``.
    """
    d = _require_nonsimple(p, n)
    lo = _digit_min(p.mults, d)
    width = len(d)
    rem = tuple(p[i] - (lo[i] if i < len(lo) else 0) for i in range(width))
    return rem, _from_list(lo, p.base)


def stratify(n: int, m: int, cap: int | None = None) -> Stratification:
    """Group the non-simple partitions of ``n`` by (fiber, stratum, tail)."""
    _check_base(m)
    digits = to_base_m(n, m).digits
    width = len(digits)
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for mults in raw_partitions(n, m, cap):
        for z in range(1, width):
            if mults[z] > digits[z]:
                break
        else:
            continue
        b = 0
        for i in range(width - 1, -1, -1):
            x, d = mults[i], digits[i]
            b = b * m + (x if x < d else d)
        key = (b, z, mults[z + 1:])
        members = groups.get(key)
        if members is None:
            groups[key] = [mults]
        else:
            members.append(mults)

    fibers: dict[int, dict[int, list[ChainClass]]] = {}
    for key in sorted(groups):
        b, z, tail = key
        raw = groups[key]
        raw.sort(key=lambda q: q[z])
        if len(raw) % m:
            raise InvariantError(f"class (b={b}, z={z}, tail={tail}) has {len(raw)} members")
        members = tuple(MaryPartition._trusted(m, _trim(q)) for q in raw)
        cls = ChainClass(b, z, tail, len(raw) // m, members)
        fibers.setdefault(b, {}).setdefault(z, []).append(cls)
    return Stratification(n, m, fibers)


def chain_params(c: ChainClass, n: int) -> tuple[int, int]:
    """Return ``(r, max_u)``: the chain parameter and the largest multiplicity at ``z``.

    ``r`` comes from the class size; it is cross-checked against the value
    obtained by folding all units of one member into parts of size ``m**z``.
    """
    m = c.modulus
    size = len(c.members)
    if size % m:
        raise InvariantError(f"class size {size} not divisible by {m}")
    r = size // m
    bz = to_base_m(c.b, m)[c.z]
    max_u = bz + m * r

    probe = c.members[0]
    folded = probe[c.z] - bz + probe[0] // m**c.z
    if folded != m * r:
        raise InvariantError(f"fold route gives {folded}, class size route gives {m * r}")

    us = [p[c.z] for p in c.members]
    if us != list(range(bz + 1, max_u + 1)):
        raise InvariantError(f"multiplicities at z={c.z} are {us}, expected ({bz}, {max_u}]")
    return r, max_u


def nops_histogram(ps: Iterable[MaryPartition], m: int) -> ResidueHistogram:
    _check_base(m)
    counts = [0] * m
    for p in ps:
        counts[sum(p.mults) % m] += 1
    return ResidueHistogram(m, counts)


def is_equidistributed(h: ResidueHistogram) -> bool:
    return len(set(h.counts)) == 1


def equidistribution_failures(s: Stratification) -> list[tuple[str, tuple, ResidueHistogram]]:
    """Every level of ``s`` whose nops histogram is not flat.

    Entries are ``(level, key, histogram)`` with level one of ``class``,
    ``stratum``, ``fiber``, ``N``.
    """
    m = s.m
    bad = []
    overall = ResidueHistogram(m, [0] * m)
    for b, strata in s.fibers.items():
        fiber = ResidueHistogram(m, [0] * m)
        for z, classes in strata.items():
            stratum = ResidueHistogram(m, [0] * m)
            for c in classes:
                h = nops_histogram(c.members, m)
                if not is_equidistributed(h):
                    bad.append(("class", (b, z, c.tail), h))
                stratum += h
            if not is_equidistributed(stratum):
                bad.append(("stratum", (b, z), stratum))
            fiber += stratum
        if not is_equidistributed(fiber):
            bad.append(("fiber", (b,), fiber))
        overall += fiber
    if not is_equidistributed(overall):
        bad.append(("N", (), overall))
    return bad


def verify_equidistribution_N(n: int, m: int, cap: int | None = None) -> bool:
    """Check equidistribution of nops mod m on every class, stratum, fiber and on all of N."""
    return not equidistribution_failures(stratify(n, m, cap))
