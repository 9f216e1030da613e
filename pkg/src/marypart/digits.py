"""Base-m digit vectors and the digital dominance order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod


def _check_base(m: int) -> None:
    if m < 2:
        raise ValueError(f"base must be >= 2, got {m}")


@dataclass(frozen=True)
class BaseMDigits:
    """Digits of a natural number in base ``base``, least significant first.

    Zero is the empty digit vector. Indexing past the stored digits gives 0.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("leading (most significant) digit must be nonzero")

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.digits[i] if i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)

    @property
    def top(self) -> int:
        """Index of the most significant digit (-1 for zero)."""
        return len(self.digits) - 1

    @property
    def value(self) -> int:
        return from_digits(self)


@lru_cache(maxsize=4096)
def to_base_m(n: int, m: int) -> BaseMDigits:
    _check_base(m)
    if n < 0:
        raise ValueError(f"n must be a natural number, got {n}")
    digits = []
    while n:
        n, d = divmod(n, m)
        digits.append(d)
    return BaseMDigits(m, tuple(digits))


def from_digits(d: BaseMDigits) -> int:
    total = 0
    for digit in reversed(d.digits):
        total = total * d.base + digit
    return total


def dominates(a: int, b: int, m: int) -> bool:
    """True iff ``a`` is digitally dominated by ``b`` in base ``m``
    (every base-m digit of ``a`` is at most the matching digit of ``b``)."""
    _check_base(m)
    while a:
        if a % m > b % m:
            return False
        a //= m
        b //= m
    return True


def dominated_list(n: int, m: int) -> list[int]:
    """All naturals dominated by ``n`` in base ``m``, ascending."""
    d = to_base_m(n, m)
    powers = [m**i for i in range(len(d))]
    out = [
        sum(c * p for c, p in zip(choice, powers))
        for choice in product(*(range(x + 1) for x in d.digits))
    ]
    out.sort()
    return out


def digit_product(n: int, m: int, start: int = 0) -> int:
    """Product of ``(n_i + 1)`` over the base-m digits of ``n`` with ``i >= start``."""
    if start not in (0, 1):
        raise ValueError(f"start must be 0 or 1, got {start}")
    return prod(x + 1 for x in to_base_m(n, m).digits[start:])
