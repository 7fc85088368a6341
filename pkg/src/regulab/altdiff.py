"""Difference distribution tables of an S-box under XOR or under an
alternative operation induced by a regular elementary abelian subgroup.

Both operations are self-inverse, so the difference of two values is simply
their operation-sum, and entry (a, b) of the table counts the x with
S(x <> a) <> S(x) = b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permgroup import Perm
from .regular import CircOp


@dataclass(frozen=True)
class SBox:
    """A bijective substitution layer on the 2^n points."""

    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        size = 1 << self.n
        if len(self.table) != size or set(self.table) != set(range(size)):
            raise ValueError("S-box table is not a bijection of 0..2^n-1")

    @classmethod
    def identity(cls, n: int) -> "SBox":
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def from_perm(cls, p: Perm) -> "SBox":
        return cls(p.n, p.images)

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "SBox":
        size = len(values)
        n = size.bit_length() - 1
        if size != 1 << n:
            raise ValueError("S-box length must be a power of two")
        return cls(n, tuple(values))

    def __call__(self, x: int) -> int:
        return self.table[x]


def ddt(sbox: SBox, op: CircOp | None = None) -> list[list[int]]:
    """The difference distribution table; ``op=None`` means XOR.

    Entry (a, b) counts x with S(x <> a) <> S(x) = b.  Every row sums to 2^n,
    and every entry is even because x and x <> a contribute in pairs.
    """
    n = sbox.n
    if op is not None and op.n != n:
        raise ValueError("operation dimension mismatch")
    size = 1 << n
    if op is None:
        add = lambda u, v: u ^ v  # noqa: E731
    else:
        group = op.group
        add = group.circ_int
    table = [[0] * size for _ in range(size)]
    for a in range(size):
        row = table[a]
        for x in range(size):
            out = add(sbox.table[add(x, a)], sbox.table[x])
            row[out] += 1
    return table


def differential_uniformity(sbox: SBox, op: CircOp | None = None) -> int:
    """Max table entry over nonzero input differences; even and at least 2."""
    table = ddt(sbox, op)
    return max(max(row) for row in table[1:]) if sbox.n else 0
