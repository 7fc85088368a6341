"""Exact linear algebra over GF(2): bit-packed vectors, matrices, subspaces, flags.

Vectors live in V = F_2^n.  Coordinates are 1-based and coordinate 1 is the
most significant bit of the integer encoding, so the bit string "101" has
coordinate 1 equal to 1 and integer value 5.  With this convention the chain
member V_i = <e_{n-i+1}, ..., e_n> of the canonical flag is exactly the set of
integers 0 .. 2^i - 1.

All types here are immutable values: safe to hash, share and compare.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

N_MAX = 16  # permutation tables of 2^16 points are the hard ceiling


class ScaleError(RuntimeError):
    """Raised when an operation would exceed desk-scale enumeration limits."""


def _check_dim(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= N_MAX:
        raise ValueError(f"dimension must be an integer in 1..{N_MAX}, got {n!r}")


@dataclass(frozen=True)
class BitVector:
    """An element of F_2^n packed into the low n bits of an int."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0b{self.bits:b} out of range for n={self.n}")

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def e(cls, i: int, n: int) -> "BitVector":
        """The i-th canonical basis vector (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"basis index {i} out of range 1..{n}")
        return cls(n, 1 << (n - i))

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse a big-endian bit string such as "101"."""
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"not a bit string: {s!r}")
        return cls(len(s), int(s, 2))

    def coord(self, i: int) -> int:
        """Coordinate i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"coordinate {i} out of range 1..{self.n}")
        return (self.bits >> (self.n - i)) & 1

    def slice(self, i: int, j: int) -> "BitVector":
        """The sub-vector of coordinates i..j inclusive, 1-based."""
        if not 1 <= i <= j <= self.n:
            raise ValueError(f"invalid slice {i}:{j} for n={self.n}")
        width = j - i + 1
        return BitVector(width, (self.bits >> (self.n - j)) & ((1 << width) - 1))

    def concat(self, other: "BitVector") -> "BitVector":
        """Concatenate coordinates: self supplies coordinates 1..n, other the rest."""
        return BitVector(self.n + other.n, (self.bits << other.n) | other.bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return BitVector(self.n, self.bits ^ other.bits)

    __add__ = __xor__  # addition in characteristic 2 is XOR

    def __int__(self) -> int:
        return self.bits

    def __index__(self) -> int:
        return self.bits

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"BitVector({str(self)!r})"


@dataclass(frozen=True)
class BitMatrix:
    """A matrix over F_2, stored as a tuple of BitVector rows.

    Row i is the image of e_i under the (right-action) linear map v -> v*M,
    which XORs together the rows selected by the coordinates of v.
    """

    rows: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        ncols = self.rows[0].n
        if any(r.n != ncols for r in self.rows):
            raise ValueError("rows have inconsistent widths")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.rows[0].n

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @classmethod
    def from_rows(cls, rows: Iterable[BitVector]) -> "BitMatrix":
        return cls(tuple(rows))

    @classmethod
    def from_ints(cls, ints: Iterable[int], ncols: int) -> "BitMatrix":
        return cls(tuple(BitVector(ncols, b) for b in ints))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(BitVector.e(i, n) for i in range(1, n + 1)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(tuple(BitVector.zero(ncols) for _ in range(nrows)))

    @classmethod
    def single(cls, i: int, j: int, nrows: int, ncols: int | None = None) -> "BitMatrix":
        """The matrix E_{i,j} with a single 1 in position (i, j), 1-based."""
        ncols = nrows if ncols is None else ncols
        rows = [BitVector.zero(ncols) for _ in range(nrows)]
        rows[i - 1] = BitVector.e(j, ncols)
        return cls(tuple(rows))

    @classmethod
    def from_string(cls, s: str) -> "BitMatrix":
        """Parse rows joined by '/', e.g. "110/011/001"."""
        return cls(tuple(BitVector.from_string(part) for part in s.split("/")))

    def row(self, i: int) -> BitVector:
        """Row i, 1-based."""
        if not 1 <= i <= self.nrows:
            raise ValueError(f"row {i} out of range 1..{self.nrows}")
        return self.rows[i - 1]

    def row_ints(self) -> tuple[int, ...]:
        return tuple(r.bits for r in self.rows)

    def vec_mul(self, v: BitVector) -> BitVector:
        """v*M for a row vector v (XOR of the rows selected by v)."""
        if v.n != self.nrows:
            raise ValueError(f"dimension mismatch: vector {v.n}, matrix rows {self.nrows}")
        acc = 0
        bits = v.bits
        for i in range(self.nrows):
            if (bits >> (self.nrows - 1 - i)) & 1:
                acc ^= self.rows[i].bits
        return BitVector(self.ncols, acc)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        """Matrix product; v*(A@B) = (v*A)*B."""
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        return BitMatrix(tuple(other.vec_mul(r) for r in self.rows))

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return BitMatrix(tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    __add__ = __xor__

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(1, self.ncols + 1):
            bits = 0
            for i in range(self.nrows):
                bits = (bits << 1) | self.rows[i].coord(j)
            cols.append(BitVector(self.nrows, bits))
        return BitMatrix(tuple(cols))

    def hconcat(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return BitMatrix(tuple(a.concat(b) for a, b in zip(self.rows, other.rows)))

    def rank(self) -> int:
        return len(_rref_ints([r.bits for r in self.rows]))

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.nrows

    def inverse(self) -> "BitMatrix":
        """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
        if not self.is_square:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        work = [(self.rows[i].bits << n) | (1 << (n - 1 - i)) for i in range(n)]
        reduced = _rref_ints(work)
        if len(reduced) != n or any((row >> n) != (1 << (n - 1 - i)) for i, row in enumerate(reduced)):
            raise ValueError("matrix is singular")
        return BitMatrix.from_ints([row & ((1 << n) - 1) for row in reduced], n)

    def left_kernel(self) -> "Subspace":
        """The subspace { v : v*M = 0 } of F_2^nrows."""
        m = self.nrows
        kernel = []
        echelon: list[tuple[int, int]] = []  # (row, combination) pairs, reduced
        for i in range(m):
            row, combo = self.rows[i].bits, 1 << (m - 1 - i)
            for erow, ecombo in echelon:
                if erow and row & (1 << (erow.bit_length() - 1)):
                    row ^= erow
                    combo ^= ecombo
            if row:
                echelon.append((row, combo))
                echelon.sort(key=lambda rc: -rc[0])
            else:
                kernel.append(combo)
        return rref_basis([BitVector(m, c) for c in kernel], n=m)

    def __str__(self) -> str:
        return "/".join(str(r) for r in self.rows)

    def __repr__(self) -> str:
        return f"BitMatrix({str(self)!r})"


def _rref_ints(vecs: Iterable[int]) -> list[int]:
    """Unique reduced row-echelon basis of the span, as bit ints (pivot order:
    most significant bit first, i.e. coordinate 1 first)."""
    rows: list[int] = []
    for v in vecs:
        for r in rows:
            if v & (1 << (r.bit_length() - 1)):
                v ^= r
        if v:
            rows.append(v)
            rows.sort(reverse=True)
    for i in range(len(rows)):
        pivot = 1 << (rows[i].bit_length() - 1)
        for j in range(len(rows)):
            if j != i and rows[j] & pivot:
                rows[j] ^= rows[i]
    rows.sort(reverse=True)
    return rows


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_2^n in unique reduced row-echelon form.

    Equality is structural equality of the canonical basis, so two Subspace
    values are equal exactly when they span the same set of vectors.
    """

    n: int
    basis: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        ints = [v.bits for v in self.basis]
        if any(v.n != self.n for v in self.basis):
            raise ValueError("basis vectors have wrong dimension")
        if _rref_ints(ints) != ints:
            raise ValueError("basis is not in canonical reduced row-echelon form")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(BitVector.e(i, n) for i in range(1, n + 1)))

    @classmethod
    def from_string(cls, s: str, n: int | None = None) -> "Subspace":
        """Parse RREF rows joined by ',' ("" denotes the zero subspace)."""
        if s == "":
            if n is None:
                raise ValueError("the zero subspace needs an explicit dimension")
            return cls.zero(n)
        vs = [BitVector.from_string(part) for part in s.split(",")]
        if n is not None and vs[0].n != n:
            raise ValueError(f"expected dimension {n}, got {vs[0].n}")
        return rref_basis(vs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise ValueError(f"dimension mismatch: {v.n} != {self.n}")
        return self.reduce(v).is_zero

    def __contains__(self, v: BitVector) -> bool:
        return self.contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def reduce(self, v: BitVector) -> BitVector:
        """The canonical coset representative of v modulo this subspace."""
        bits = v.bits
        for r in self.basis:
            if bits & (1 << (r.bits.bit_length() - 1)):
                bits ^= r.bits
        return BitVector(self.n, bits)

    def vectors(self) -> Iterator[BitVector]:
        """All 2^dim elements, in the counter order of basis combinations."""
        for mask in range(1 << self.dim):
            acc = 0
            for i in range(self.dim):
                if (mask >> i) & 1:
                    acc ^= self.basis[i].bits
            yield BitVector(self.n, acc)

    def intersection(self, other: "Subspace") -> "Subspace":
        """A cap B via the Zassenhaus double-width elimination."""
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        n = self.n
        work = [v.bits << n for v in other.basis]
        work += [(v.bits << n) | v.bits for v in self.basis]
        rows: list[int] = []
        for v in work:
            for r in rows:
                if v & (1 << (r.bit_length() - 1)):
                    v ^= r
            if v:
                rows.append(v)
                rows.sort(reverse=True)
        low = (1 << n) - 1
        inter = [row & low for row in rows if (row >> n) == 0]
        return rref_basis([BitVector(n, b) for b in inter], n=n)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} != {other.n}")
        return rref_basis(list(self.basis) + list(other.basis), n=self.n)

    def __or__(self, other: "Subspace") -> "Subspace":
        return self.sum(other)

    def to_string(self) -> str:
        return ",".join(str(v) for v in self.basis)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Subspace({self.to_string()!r}, n={self.n})"


def rref_basis(vectors: Iterable[BitVector], n: int | None = None) -> Subspace:
    """The span of the given vectors as a canonical Subspace."""
    vectors = list(vectors)
    if not vectors:
        if n is None:
            raise ValueError("empty input needs an explicit dimension")
        return Subspace.zero(n)
    dim = vectors[0].n
    if n is not None and dim != n:
        raise ValueError(f"expected dimension {n}, got {dim}")
    if any(v.n != dim for v in vectors):
        raise ValueError("input vectors have mismatched dimensions")
    return Subspace(dim, tuple(BitVector(dim, b) for b in _rref_ints([v.bits for v in vectors])))


def complete_to_basis(s: Subspace) -> list[BitVector]:
    """Deterministic vectors extending a basis of s to a basis of F_2^n.

    Returns n - dim(s) vectors, chosen greedily by minimal integer value.
    """
    chosen: list[BitVector] = []
    span = s
    v = 1
    while span.dim < s.n:
        cand = BitVector(s.n, v)
        if not span.contains(cand):
            chosen.append(cand)
            span = span.sum(rref_basis([cand]))
        v += 1
    return chosen


@dataclass(frozen=True)
class Flag:
    """A maximal chain of subspaces {0} = V_0 < V_1 < ... < V_n = V."""

    n: int
    chain: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if len(self.chain) != self.n + 1:
            raise ValueError(f"flag needs {self.n + 1} members, got {len(self.chain)}")
        for i, sub in enumerate(self.chain):
            if sub.n != self.n or sub.dim != i:
                raise ValueError(f"flag member {i} has wrong dimension")
            if i and not sub.contains_subspace(self.chain[i - 1]):
                raise ValueError(f"flag member {i} does not contain member {i - 1}")

    @classmethod
    def canonical(cls, n: int) -> "Flag":
        """The flag with V_i = <e_{n-i+1}, ..., e_n>."""
        return complete_flag([BitVector.e(i, n) for i in range(1, n + 1)])

    def subspace(self, i: int) -> Subspace:
        """V_i (0 <= i <= n)."""
        return self.chain[i]

    def to_string(self) -> str:
        """Members of dimension 1..n-1 joined by '<' (V_0 and V_n are implied)."""
        return "<".join(self.chain[i].to_string() for i in range(1, self.n))

    @classmethod
    def from_string(cls, s: str, n: int) -> "Flag":
        parts = s.split("<") if s else []
        if len(parts) != n - 1:
            raise ValueError(f"expected {n - 1} flag members, got {len(parts)}")
        chain = [Subspace.zero(n)]
        chain += [Subspace.from_string(p, n) for p in parts]
        chain.append(Subspace.full(n))
        return cls(n, tuple(chain))

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Flag({self.to_string()!r}, n={self.n})"


def complete_flag(basis_order: Iterable[BitVector]) -> Flag:
    """The flag with V_i spanned by the LAST i vectors of the given basis.

    With the canonical basis order e_1..e_n this yields the canonical flag
    V_i = <e_{n-i+1}, ..., e_n>.
    """
    basis = list(basis_order)
    if not basis:
        raise ValueError("empty basis")
    n = basis[0].n
    if len(basis) != n or rref_basis(basis).dim != n:
        raise ValueError("input is not an ordered basis of the full space")
    chain = [Subspace.zero(n)]
    for i in range(1, n + 1):
        chain.append(rref_basis(basis[n - i:], n=n))
    return Flag(n, tuple(chain))


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for j in range(k):
        num *= (1 << (n - j)) - 1
        den *= (1 << (k - j)) - 1
    return num // den


def all_subspaces(n: int, d: int) -> Iterator[Subspace]:
    """All d-dimensional subspaces of F_2^n, in a fixed deterministic order.

    Enumerates canonical RREF matrices directly: pivot coordinate sets in
    lexicographic order, then free entries in row-major counter order.
    """
    _check_dim(n)
    if not 0 <= d <= n:
        raise ValueError(f"invalid dimension {d} for n={n}")
    if d == 0:
        yield Subspace.zero(n)
        return
    for pivots in itertools.combinations(range(1, n + 1), d):
        pivot_set = set(pivots)
        free_cells = [
            (i, j)
            for i in range(d)
            for j in range(pivots[i] + 1, n + 1)
            if j not in pivot_set
        ]
        for mask in range(1 << len(free_cells)):
            rows = [1 << (n - p) for p in pivots]
            for cell_idx, (i, j) in enumerate(free_cells):
                if (mask >> cell_idx) & 1:
                    rows[i] |= 1 << (n - j)
            yield Subspace(n, tuple(BitVector(n, b) for b in sorted(rows, reverse=True)))


def count_flags(n: int) -> int:
    """Number of maximal flags of F_2^n: prod_{j=0}^{n-1} (2^{n-j} - 1)."""
    out = 1
    for j in range(n):
        out *= (1 << (n - j)) - 1
    return out


FLAG_ENUM_N_MAX = 5  # 9765 flags at n=5; n=6 has 615195 and is out of desk scale


def all_flags(n: int) -> tuple[Flag, ...]:
    """All maximal flags, built by extending chains one dimension at a time."""
    _check_dim(n)
    if n > FLAG_ENUM_N_MAX:
        raise ScaleError(f"flag enumeration supported for n <= {FLAG_ENUM_N_MAX}")
    results: list[Flag] = []

    def extend(chain: list[Subspace]) -> None:
        top = chain[-1]
        if top.dim == n:
            results.append(Flag(n, tuple(chain)))
            return
        seen = set()
        for bits in range(1, 1 << n):
            v = BitVector(n, bits)
            if top.contains(v):
                continue
            nxt = top.sum(rref_basis([v]))
            if nxt.basis not in seen:
                seen.add(nxt.basis)
                extend(chain + [nxt])

    extend([Subspace.zero(n)])
    return tuple(results)
