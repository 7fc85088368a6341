"""Permutations of the 2^n points of F_2^n and finite permutation-group computations.

Points are identified with vectors through their integer value.  Permutations
act on the right and compose left-to-right: x*(a*b) = (x*a)*b.  Group
enumeration is plain breadth-first closure with a hard element budget; orders
needed here stay far below the scales where stabilizer chains would pay off.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .gf2core import ScaleError

Table = tuple[int, ...]

DEFAULT_BUDGET = 10_000
BUDGET_ENV_VAR = "REGULAB_BUDGET"

__all__ = [
    "Perm", "PermGroup", "ScaleError", "compose", "conjugate", "generate_closure",
    "full_symmetric_group", "is_regular_elementary_abelian", "centralizer_in",
    "normalizer_in", "normalizes", "enum_budget", "DEFAULT_BUDGET", "BUDGET_ENV_VAR",
]


def enum_budget(budget: int | None = None) -> int:
    """Effective closure budget; the REGULAB_BUDGET env var overrides the default."""
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


@dataclass(frozen=True)
class Perm:
    """A permutation of the 2^n points of F_2^n, as an image table."""

    n: int
    images: Table

    def __post_init__(self) -> None:
        size = 1 << self.n
        if len(self.images) != size or set(self.images) != set(range(size)):
            raise ValueError("image table is not a bijection of 0..2^n-1")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(n, tuple(range(1 << n)))

    @property
    def size(self) -> int:
        return 1 << self.n

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        """Right-action composition: x*(a*b) = (x*a)*b."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        o = other.images
        return Perm(self.n, tuple(o[x] for x in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.size
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(self.n, tuple(inv))

    def conj(self, g: "Perm") -> "Perm":
        """g^{-1} * self * g."""
        return conjugate(self, g)

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images))

    def is_involution(self) -> bool:
        return not self.is_identity() and all(self.images[y] == x for x, y in enumerate(self.images))

    def is_fixed_point_free(self) -> bool:
        return all(y != x for x, y in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [x for x, y in enumerate(self.images) if y == x]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its minimum point."""
        seen = [False] * self.size
        out = []
        for x in range(self.size):
            if seen[x]:
                continue
            cyc = [x]
            seen[x] = True
            y = self.images[x]
            while y != x:
                cyc.append(y)
                seen[y] = True
                y = self.images[y]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def is_even(self) -> bool:
        """Parity: even iff the number of points minus the number of cycles is even."""
        moved = sum(len(c) for c in self.cycles())
        ncycles = len(self.cycles())
        return (moved - ncycles) % 2 == 0

    def __str__(self) -> str:
        return self.cycle_string()


def compose(a: Perm, b: Perm) -> Perm:
    """x*(compose(a, b)) = (x*a)*b."""
    return a * b


def conjugate(h: Perm, g: Perm) -> Perm:
    """g^{-1} h g."""
    if h.n != g.n:
        raise ValueError(f"dimension mismatch: {h.n} != {g.n}")
    return Perm(h.n, _conj_table(h.images, g.images))


def _conj_table(h: Table, g: Table) -> Table:
    ginv = [0] * len(g)
    for x, y in enumerate(g):
        ginv[y] = x
    return tuple(g[h[ginv[x]]] for x in range(len(g)))


def _mul_table(a: Table, b: Table) -> Table:
    return tuple(b[x] for x in a)


class PermGroup:
    """A permutation group on the 2^n points, stored as generators plus an
    optional fully enumerated element set (raw image tables).

    Immutable once the element set is populated.  Elements iterate in
    lexicographic order of their image tables.
    """

    def __init__(self, n: int, generators: Sequence[Perm] = (),
                 tables: frozenset[Table] | None = None):
        self.n = n
        self.generators = tuple(generators)
        if any(g.n != n for g in self.generators):
            raise ValueError("generator dimension mismatch")
        self._tables = tables
        self._sorted: tuple[Table, ...] | None = None

    @classmethod
    def from_generators(cls, generators: Sequence[Perm]) -> "PermGroup":
        if not generators:
            raise ValueError("need at least one generator")
        return cls(generators[0].n, generators)

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[Perm | Table],
                      generators: Sequence[Perm] = ()) -> "PermGroup":
        tables = frozenset(e.images if isinstance(e, Perm) else tuple(e) for e in elements)
        return cls(n, generators, tables)

    @property
    def is_enumerated(self) -> bool:
        return self._tables is not None

    @property
    def tables(self) -> frozenset[Table]:
        if self._tables is None:
            raise ValueError("group is not enumerated; call ensure_enumerated() first")
        return self._tables

    def sorted_tables(self) -> tuple[Table, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.tables))
        return self._sorted

    @property
    def order(self) -> int:
        return len(self.tables)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[Perm]:
        return (Perm(self.n, t) for t in self.sorted_tables())

    def __contains__(self, p: Perm | Table) -> bool:
        t = p.images if isinstance(p, Perm) else tuple(p)
        return t in self.tables

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.n == other.n and self.tables == other.tables

    def __hash__(self) -> int:
        return hash((self.n, self.tables))

    def ensure_enumerated(self, budget: int | None = None) -> "PermGroup":
        if self._tables is None:
            closed = generate_closure(self.generators, budget)
            self._tables = closed._tables
        return self

    def gen_perms(self) -> tuple[Perm, ...]:
        """Generators if present, otherwise all elements (for enumerated groups)."""
        if self.generators:
            return self.generators
        return tuple(self)

    def __repr__(self) -> str:
        size = len(self._tables) if self._tables is not None else "?"
        return f"<PermGroup n={self.n} order={size} gens={len(self.generators)}>"


def generate_closure(gens: Sequence[Perm], budget: int | None = None) -> PermGroup:
    """Breadth-first closure of the generated group.

    Deterministic: the queue is seeded with the identity and explores products
    in first-seen order; the stored element set is order-free and iteration is
    lexicographic.  Raises ScaleError if the group would exceed the budget.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generator dimension mismatch")
    limit = enum_budget(budget)
    gen_tables = [g.images for g in gens]
    identity = tuple(range(1 << n))
    seen: set[Table] = {identity}
    queue: list[Table] = [identity]
    idx = 0
    while idx < len(queue):
        cur = queue[idx]
        idx += 1
        for gt in gen_tables:
            nxt = _mul_table(cur, gt)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise ScaleError(
                        f"closure exceeds the element budget of {limit}; "
                        f"raise it explicitly or via {BUDGET_ENV_VAR}"
                    )
                seen.add(nxt)
                queue.append(nxt)
    return PermGroup(n, tuple(gens), frozenset(seen))


SYM_ENUM_N = 3  # |Sym(2^3)| = 40320; anything larger is far out of desk scale


def full_symmetric_group(n: int) -> PermGroup:
    """The full symmetric group on the 2^n points.  Only n = 3 is enumerable."""
    if n != SYM_ENUM_N:
        raise ScaleError(f"full Sym(2^n) enumeration is supported only for n = {SYM_ENUM_N}")
    tables = frozenset(itertools.permutations(range(1 << n)))
    gens = (
        Perm(n, tuple([1, 0] + list(range(2, 1 << n)))),
        Perm(n, tuple(list(range(1, 1 << n)) + [0])),
    )
    return PermGroup(n, gens, tables)


def is_regular_elementary_abelian(group: PermGroup) -> bool:
    """True iff the group has order 2^n, acts transitively on the 2^n points,
    is abelian, and every non-identity element is a fixed-point-free involution.

    The abelian and closure checks are exhaustive over all element pairs.
    """
    if not group.is_enumerated:
        raise ValueError("group must be enumerated")
    n = group.n
    size = 1 << n
    tables = group.tables
    if len(tables) != size:
        return False
    if {t[0] for t in tables} != set(range(size)):
        return False
    identity = tuple(range(size))
    for t in tables:
        if t == identity:
            continue
        if any(t[t[x]] != x or t[x] == x for x in range(size)):
            return False
    elems = list(tables)
    for i, a in enumerate(elems):
        for b in elems[i:]:
            ab = _mul_table(a, b)
            if ab != _mul_table(b, a) or ab not in tables:
                return False
    return True


def centralizer_in(group: PermGroup, other: PermGroup) -> PermGroup:
    """{ g in group : g h = h g for all generators h of other }."""
    if not group.is_enumerated:
        raise ValueError("ambient group must be enumerated")
    if group.n != other.n:
        raise ValueError("dimension mismatch")
    hts = [h.images for h in other.gen_perms()]
    kept = [t for t in group.sorted_tables()
            if all(_mul_table(t, h) == _mul_table(h, t) for h in hts)]
    return PermGroup(group.n, (), frozenset(kept))


def normalizer_in(group: PermGroup, other: PermGroup) -> PermGroup:
    """{ g in group : other^g = other }.

    Conjugating the generators into the (enumerated) group suffices, since a
    conjugate of the whole group has the same order.
    """
    if not group.is_enumerated or not other.is_enumerated:
        raise ValueError("both groups must be enumerated")
    if group.n != other.n:
        raise ValueError("dimension mismatch")
    hts = [h.images for h in other.gen_perms()]
    member = other.tables
    kept = [t for t in group.sorted_tables()
            if all(_conj_table(h, t) in member for h in hts)]
    return PermGroup(group.n, (), frozenset(kept))


def normalizes(g: Perm, subgroup: PermGroup) -> bool:
    """True iff conjugation by g maps the (enumerated) subgroup onto itself."""
    hts = [h.images for h in subgroup.gen_perms()]
    member = subgroup.tables
    return all(_conj_table(h, g.images) in member for h in hts)
