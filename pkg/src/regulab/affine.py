"""Affine maps of V = F_2^n: (linear, translation) pairs, the augmented
(n+1)x(n+1) matrix embedding, and conversions to and from permutations.

Affinities act on the right, x -> x*L + v, matching the row-vector convention
used everywhere in this package.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from .gf2core import BitMatrix, BitVector
from .permgroup import Perm, PermGroup, ScaleError


@dataclass(frozen=True)
class Affinity:
    """An element of AGL(V): x -> x*linear + translation, with linear invertible."""

    linear: BitMatrix
    translation: BitVector

    def __post_init__(self) -> None:
        if not self.linear.is_square:
            raise ValueError("linear part must be square")
        if self.linear.nrows != self.translation.n:
            raise ValueError("linear part and translation dimension mismatch")
        if not self.linear.is_invertible():
            raise ValueError("linear part is singular")

    @property
    def n(self) -> int:
        return self.translation.n

    @classmethod
    def identity(cls, n: int) -> "Affinity":
        return cls(BitMatrix.identity(n), BitVector.zero(n))

    @classmethod
    def translation_by(cls, v: BitVector) -> "Affinity":
        return cls(BitMatrix.identity(v.n), v)

    @classmethod
    def linear_map(cls, m: BitMatrix) -> "Affinity":
        return cls(m, BitVector.zero(m.nrows))

    def apply(self, x: BitVector) -> BitVector:
        if x.n != self.n:
            raise ValueError(f"dimension mismatch: {x.n} != {self.n}")
        return self.linear.vec_mul(x) ^ self.translation

    def __mul__(self, other: "Affinity") -> "Affinity":
        """Right-action composition: x*(f*g) = (x*f)*g."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return Affinity(self.linear @ other.linear,
                        other.linear.vec_mul(self.translation) ^ other.translation)

    def inverse(self) -> "Affinity":
        inv = self.linear.inverse()
        return Affinity(inv, inv.vec_mul(self.translation))

    def conj(self, g: "Affinity") -> "Affinity":
        """g^{-1} * self * g."""
        return g.inverse() * self * g

    def is_translation(self) -> bool:
        return self.linear == BitMatrix.identity(self.n)

    def to_perm(self) -> Perm:
        n = self.n
        lin = [self.linear.vec_mul(BitVector(n, x)).bits for x in range(1 << n)]
        t = self.translation.bits
        return Perm(n, tuple(y ^ t for y in lin))

    def to_json(self) -> dict:
        return {
            "linear": [str(r) for r in self.linear.rows],
            "translation": str(self.translation),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Affinity":
        return cls(BitMatrix.from_string("/".join(data["linear"])),
                   BitVector.from_string(data["translation"]))

    def __str__(self) -> str:
        return f"{self.linear}+{self.translation}"


def compose_affinity(f: Affinity, g: Affinity) -> Affinity:
    """x*(compose_affinity(f, g)) = (x*f)*g; matches Perm composition."""
    return f * g


def perm_to_affinity(p: Perm) -> Affinity | None:
    """Recover (linear, translation) from a permutation, or None if not affine.

    The candidate linear part is read off the images of the basis vectors and
    then verified on ALL 2^n points: linearity on a basis plus bijectivity is
    not trusted on its own.
    """
    n = p.n
    c = p(0)
    rows = []
    for i in range(1, n + 1):
        rows.append(BitVector(n, p(BitVector.e(i, n).bits) ^ c))
    mat = BitMatrix(tuple(rows))
    if not mat.is_invertible():
        return None
    cand = Affinity(mat, BitVector(n, c))
    lin_tab = [mat.vec_mul(BitVector(n, x)).bits for x in range(1 << n)]
    if any(lin_tab[x] ^ c != p(x) for x in range(1 << n)):
        return None
    return cand


@dataclass(frozen=True)
class AugmentedMatrix:
    """The (n+1)x(n+1) matrix picture of an affinity, split at flag depth d.

    Layout (1-based blocks), with U the first n-d coordinates and W the last d:

        | 1  u  w |
        | 0  A  B |
        | 0  D  C |

    The first row carries the translation, the lower-right n x n block the
    linear part.  The split is taken against the canonical coordinate
    decomposition; other flags are handled by conjugating with the flag's
    change of basis first.
    """

    matrix: BitMatrix
    d: int

    def __post_init__(self) -> None:
        m = self.matrix
        if not m.is_square or m.nrows < 2:
            raise ValueError("augmented matrix must be square of size n+1 >= 2")
        n = m.nrows - 1
        if not 0 <= self.d <= n:
            raise ValueError(f"invalid split dimension {self.d}")
        if m.row(1).coord(1) != 1:
            raise ValueError("entry (1,1) must be 1")
        if any(m.row(i).coord(1) != 0 for i in range(2, n + 2)):
            raise ValueError("first column below (1,1) must be zero")
        if not BitMatrix(tuple(r.slice(2, n + 1) for r in m.rows[1:])).is_invertible():
            raise ValueError("lower-right linear block is singular")

    @property
    def n(self) -> int:
        return self.matrix.nrows - 1

    @property
    def u(self) -> BitVector:
        """U-part of the translation; undefined at d = n where U is trivial."""
        if self.d == self.n:
            raise ValueError("u-part is empty when d = n")
        return self.matrix.row(1).slice(2, self.n - self.d + 1)

    @property
    def w(self) -> BitVector:
        """W-part of the translation; undefined at d = 0 where W is trivial."""
        if self.d == 0:
            raise ValueError("w-part is empty when d = 0")
        return self.matrix.row(1).slice(self.n - self.d + 2, self.n + 1)

    def _block(self, r0: int, r1: int, c0: int, c1: int) -> BitMatrix:
        return BitMatrix(tuple(self.matrix.row(i).slice(c0, c1) for i in range(r0, r1 + 1)))

    @property
    def block_a(self) -> BitMatrix:
        k = self.n - self.d
        return self._block(2, k + 1, 2, k + 1)

    @property
    def block_b(self) -> BitMatrix:
        k = self.n - self.d
        return self._block(2, k + 1, k + 2, self.n + 1)

    @property
    def block_c(self) -> BitMatrix:
        k = self.n - self.d
        return self._block(k + 2, self.n + 1, k + 2, self.n + 1)

    @property
    def block_d(self) -> BitMatrix:
        k = self.n - self.d
        return self._block(k + 2, self.n + 1, 2, k + 1)

    def to_affinity(self) -> Affinity:
        n = self.n
        lin = BitMatrix(tuple(r.slice(2, n + 1) for r in self.matrix.rows[1:]))
        return Affinity(lin, self.matrix.row(1).slice(2, n + 1))

    def __str__(self) -> str:
        return str(self.matrix)


def embed_augmented(f: Affinity, d: int) -> AugmentedMatrix:
    """Embed an affinity as the (n+1)x(n+1) block matrix, split at depth d.

    The element centralizes the translations by the last d coordinates exactly
    when block C equals the identity.
    """
    n = f.n
    if not 0 <= d <= n:
        raise ValueError(f"invalid split dimension {d}")
    one = BitVector(1, 1)
    zero = BitVector(1, 0)
    rows = [one.concat(f.translation)]
    for r in f.linear.rows:
        rows.append(zero.concat(r))
    return AugmentedMatrix(BitMatrix(tuple(rows)), d)


def all_invertible_matrices(n: int) -> Iterator[BitMatrix]:
    """All of GL(n, 2) by extending independent row sequences; n <= 4."""
    if n > 4:
        raise ScaleError("GL(n, 2) enumeration is supported only for n <= 4")

    def extend(rows: list[int], span: set[int]) -> Iterator[BitMatrix]:
        if len(rows) == n:
            yield BitMatrix.from_ints(rows, n)
            return
        for v in range(1, 1 << n):
            if v not in span:
                new_span = span | {s ^ v for s in span}
                yield from extend(rows + [v], new_span)

    yield from extend([], {0})


def agl_order(n: int) -> int:
    """|AGL(n, 2)| = 2^n * prod_{j=0}^{n-1} (2^n - 2^j)."""
    out = 1 << n
    for j in range(n):
        out *= (1 << n) - (1 << j)
    return out


def agl_generators(n: int) -> list[Perm]:
    """Translations by basis vectors plus all elementary transvections 1 + E_{i,j}."""
    gens = [Affinity.translation_by(BitVector.e(i, n)).to_perm() for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                m = BitMatrix.identity(n) + BitMatrix.single(i, j, n)
                gens.append(Affinity.linear_map(m).to_perm())
    return gens


@functools.lru_cache(maxsize=None)
def agl_group(n: int) -> PermGroup:
    """The full affine group AGL(n, 2) as an enumerated permutation group.

    Built as a direct product of GL(n, 2) with the translations (n <= 4;
    |AGL(4, 2)| = 322560 is the largest desk-scale case).
    """
    if n > 4:
        raise ScaleError("AGL(n, 2) enumeration is supported only for n <= 4")
    size = 1 << n
    tables = set()
    for m in all_invertible_matrices(n):
        lin = tuple(m.vec_mul(BitVector(n, x)).bits for x in range(size))
        for v in range(size):
            tables.add(tuple(y ^ v for y in lin))
    assert len(tables) == agl_order(n)
    return PermGroup(n, tuple(agl_generators(n)), frozenset(tables))


def affine_subgroup_check(perms: Iterator[Perm] | list[Perm]) -> bool:
    """True iff every given permutation is affine."""
    return all(perm_to_affinity(p) is not None for p in perms)
