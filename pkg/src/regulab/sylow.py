"""Sylow 2-subgroups of AGL(V) via maximal flags.

A Sylow 2-subgroup is the conjugation stabilizer of the translation chain of a
maximal flag; for the canonical flag V_i = <e_{n-i+1}, ..., e_n> it is the set
of affinities with upper unitriangular linear part.  Each Sylow subgroup
contains exactly one second-maximal-intersection regular subgroup as a normal
subgroup (T_Sigma), and its normalizer in the full symmetric group is twice as
large, generated on top by an explicit quadratic involution that swaps T and
T_Sigma by conjugation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

from .affine import Affinity, perm_to_affinity
from .gf2core import (
    BitMatrix,
    BitVector,
    Flag,
    Subspace,
    all_flags,
    count_flags,
    rref_basis,
)
from .permgroup import Perm, PermGroup, ScaleError, _conj_table, generate_closure
from .regular import RegularGroup, build_Tb, _check_group_dim


def unitriangular_generators(n: int) -> list[BitMatrix]:
    """The matrices 1_n + E_{i,i+1}; they generate the upper unitriangular group."""
    return [BitMatrix.identity(n) + BitMatrix.single(i, i + 1, n) for i in range(1, n)]


@dataclass(frozen=True)
class SylowAGL:
    """A Sylow 2-subgroup of AGL(V), determined by its invariant maximal flag.

    ``basis_change`` is the matrix L whose rows are a flag-adapted basis
    (e_i * L spans the flag from the bottom up); the subgroup is the conjugate
    of the canonical one by L.  Membership needs no enumeration: an affinity
    belongs exactly when its linear part stabilizes every flag member.
    """

    n: int
    flag: Flag
    basis_change: BitMatrix

    def __post_init__(self) -> None:
        _check_group_dim(self.n)
        if self.flag.n != self.n or self.basis_change.nrows != self.n:
            raise ValueError("flag or basis change has wrong dimension")
        for i in range(1, self.n + 1):
            expect = rref_basis(self.basis_change.rows[self.n - i:], n=self.n)
            if expect != self.flag.subspace(i):
                raise ValueError("basis change is not adapted to the flag")

    @property
    def order(self) -> int:
        return 1 << (self.n * (self.n + 1) // 2)

    @property
    def is_canonical(self) -> bool:
        return self.basis_change == BitMatrix.identity(self.n)

    def contains_affinity(self, f: Affinity) -> bool:
        if f.n != self.n:
            return False
        for i in range(1, self.n):
            sub = self.flag.subspace(i)
            if any(not sub.contains(f.linear.vec_mul(v)) for v in sub.basis):
                return False
        return True

    def contains_perm(self, p: Perm) -> bool:
        f = perm_to_affinity(p)
        return f is not None and self.contains_affinity(f)

    @functools.cached_property
    def _generator_cache(self) -> tuple[tuple[Affinity, ...], tuple[Perm, ...]]:
        n = self.n
        gens = [Affinity.translation_by(BitVector.e(i, n)) for i in range(1, n + 1)]
        l_inv = self.basis_change.inverse()
        for u in unitriangular_generators(n):
            gens.append(Affinity.linear_map(l_inv @ u @ self.basis_change))
        return tuple(gens), tuple(g.to_perm() for g in gens)

    def generators(self) -> list[Affinity]:
        """n translations plus the n-1 conjugated unitriangular elementaries."""
        return list(self._generator_cache[0])

    def generator_perms(self) -> list[Perm]:
        return list(self._generator_cache[1])

    def as_permgroup(self, budget: int | None = None) -> PermGroup:
        return generate_closure(self.generator_perms(), budget)

    def __repr__(self) -> str:
        return f"<SylowAGL n={self.n} flag={self.flag.to_string()!r}>"


def canonical_sylow(n: int) -> SylowAGL:
    """The Sylow 2-subgroup of the canonical flag: unitriangular linear parts."""
    _check_group_dim(n)
    return SylowAGL(n, Flag.canonical(n), BitMatrix.identity(n))


def sylow_from_flag(flag: Flag) -> SylowAGL:
    """The conjugation stabilizer of the translation chain of the given flag.

    The adapted basis is chosen deterministically: the vector extending
    V_{k-1} to V_k is the minimal integer in the difference.
    """
    n = flag.n
    rows: list[BitVector] = [None] * n  # type: ignore[list-item]
    for k in range(1, n + 1):
        prev, cur = flag.subspace(k - 1), flag.subspace(k)
        pick = None
        for v in cur.vectors():
            if not prev.contains(v) and (pick is None or v.bits < pick.bits):
                pick = v
        rows[n - k] = pick
    return SylowAGL(n, flag, BitMatrix(tuple(rows)))


def _basis_change_affinity(s: SylowAGL) -> Affinity:
    return Affinity.linear_map(s.basis_change)


def t_sigma(s: SylowAGL) -> RegularGroup:
    """The unique second-maximal regular subgroup normal in the Sylow subgroup.

    For the canonical subgroup this is the group with defect e_n over
    W = <e_3, ..., e_n>; in general the flag-adapted conjugate of it.
    """
    base = build_Tb(s.n, BitVector.e(s.n, s.n))
    if s.is_canonical:
        return base
    return base.conjugated_by(_basis_change_affinity(s))


def count_sylows(n: int) -> int:
    """Number of Sylow 2-subgroups of AGL(V): prod_{j=0}^{n-1} (2^{n-j} - 1)."""
    return count_flags(n)


def count_s_n(n: int) -> int:
    """Number of Sylow 2-subgroups containing a fixed second-maximal group as a
    normal subgroup: 3 * prod_{j=3}^{n-1} (2^{n-j} - 1)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    out = 3
    for j in range(3, n):
        out *= (1 << (n - j)) - 1
    return out


@dataclass(frozen=True)
class BMapFamily:
    """The free data of a flag-normalized regular subgroup at depth d.

    ``matrices[i]`` is the (n-d) x d block attached to the basis direction
    e_{i+1} of the complement U.  The linear map u -> B_u extends by XOR.
    Constraints: row i of B(e_i) is zero, and row i of B(e_j) equals row j of
    B(e_i); the strictly-upper pair rows are the free entries.
    """

    d: int
    matrices: tuple[BitMatrix, ...]

    def __post_init__(self) -> None:
        k = len(self.matrices)
        for i, m in enumerate(self.matrices, start=1):
            if m.nrows != k or m.ncols != self.d:
                raise ValueError("blocks must be (n-d) x d")
            if not m.row(i).is_zero:
                raise ValueError(f"row {i} of B(e_{i}) must be zero")
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                if self.matrices[j - 1].row(i) != self.matrices[i - 1].row(j):
                    raise ValueError("row symmetry violated between blocks")

    @property
    def u_dim(self) -> int:
        return len(self.matrices)

    def b_of(self, u_bits: int) -> BitMatrix:
        """B_u for u given as an integer over the U-coordinates (MSB = first)."""
        k = self.u_dim
        out = BitMatrix.zero(k, self.d)
        for i in range(k):
            if (u_bits >> (k - 1 - i)) & 1:
                out = out + self.matrices[i]
        return out

    @classmethod
    def enumerate_all(cls, n: int, d: int) -> Iterator["BMapFamily"]:
        """All families for the given split, in lexicographic order of the free
        pair rows r_{ij} (i < j, row-major)."""
        k = n - d
        pairs = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
        bits = d * len(pairs)
        if bits > 16:
            raise ScaleError("flag-normalized family enumeration exceeds desk scale")
        for mask in range(1 << bits):
            values: dict[tuple[int, int], int] = {}
            for idx, (i, j) in enumerate(pairs):
                chunk = (mask >> (idx * d)) & ((1 << d) - 1)
                values[(i, j)] = chunk
                values[(j, i)] = chunk
            mats = []
            for i in range(1, k + 1):
                mrows = [BitVector(d, values.get((i, row_idx), 0)) for row_idx in range(1, k + 1)]
                mats.append(BitMatrix(tuple(mrows)))
            yield cls(d, tuple(mats))


def count_flag_normalized(n: int, d: int) -> int:
    """2^{d * C(n-d, 2)}."""
    k = n - d
    return 1 << (d * (k * (k - 1) // 2))


def enumerate_flag_normalized(n: int, d: int) -> tuple[RegularGroup, ...]:
    """All regular elementary abelian subgroups of the canonical Sylow subgroup
    that contain the translations by V_d and are normalized by T.

    Realized as the block-matrix groups { x -> (x_U + u, x_U B_u + x_W + w) }
    over all valid B-map families; the zero family yields T itself.  The value
    d = n - 1 is rejected: the intersection with T can never be a hyperplane.
    """
    _check_group_dim(n)
    if not 1 <= d <= n:
        raise ValueError(f"split dimension must be in 1..{n}, got {d}")
    if d == n - 1:
        raise ValueError(
            "d = n-1 is rejected: no regular elementary abelian subgroup other "
            "than T meets T in a hyperplane, so the family is just {T}"
        )
    k = n - d
    out = []
    for family in BMapFamily.enumerate_all(n, d):
        affs = []
        for u_bits in range(1 << k):
            linear_rows = []
            if k:
                b_u = family.b_of(u_bits)
                for i in range(1, k + 1):
                    linear_rows.append(BitVector.e(i, n) ^ BitVector.zero(k).concat(b_u.row(i)))
            for i in range(k + 1, n + 1):
                linear_rows.append(BitVector.e(i, n))
            linear = BitMatrix(tuple(linear_rows))
            for w_bits in range(1 << d):
                translation = BitVector(n, (u_bits << d) | w_bits)
                affs.append(Affinity(linear, translation))
        out.append(RegularGroup.from_affinities(n, affs, check=True))
    if len(out) != count_flag_normalized(n, d):
        raise AssertionError("family count does not match the closed form")
    return tuple(out)


def outer_normalizer_element(s: SylowAGL) -> Perm:
    """A permutation outside AGL(V) that normalizes the Sylow subgroup and
    swaps T and T_Sigma by conjugation; its square is the identity.

    For the canonical subgroup the element is the quadratic involution
    x -> x + x^(1) x^(2) e_n (the conjugator from T to T_Sigma induced by
    matching the e_i labels); for a general flag, its adapted conjugate.  The
    normalization property is verified on the generators before returning.
    """
    n = s.n
    en = 1  # e_n has integer value 1
    table = []
    for x in range(1 << n):
        top = (x >> (n - 1)) & 1, (x >> (n - 2)) & 1
        table.append(x ^ (en if top[0] and top[1] else 0))
    g = Perm(n, tuple(table))
    if not s.is_canonical:
        g = g.conj(_basis_change_affinity(s).to_perm())
    for gen in s.generator_perms():
        if not s.contains_perm(gen.conj(g)):
            raise AssertionError("constructed element fails to normalize the Sylow subgroup")
    return g


def is_normal_in_sylow(group: RegularGroup, s: SylowAGL) -> bool:
    """Generator-level normality check of a regular subgroup inside a Sylow
    subgroup (normality under generators implies normality under the group)."""
    member = group.elements
    gen_tables = [group.tau_table(v) for v in group.generator_labels()]
    for sg in s.generator_perms():
        for t in gen_tables:
            if _conj_table(t, sg.images) not in member:
                return False
    return True


NORMAL_SCAN_N_MAX = 4


def normal_regular_subgroups(s: SylowAGL) -> tuple[RegularGroup, ...]:
    """All elementary abelian regular subgroups normal in the Sylow subgroup.

    Candidates are complete: any such subgroup intersects T in a flag member
    sigma_{V_d} (the intersection support is invariant under the stabilizer
    action, and the flag members are the only invariant subspaces), is
    normalized by T, and therefore appears in the depth-d block enumeration.
    The scan confirms that exactly T and T_Sigma survive.
    """
    n = s.n
    if n > NORMAL_SCAN_N_MAX:
        raise ScaleError(f"normality scan is supported for n <= {NORMAL_SCAN_N_MAX}")
    move = None if s.is_canonical else _basis_change_affinity(s)
    candidates: dict[tuple, RegularGroup] = {}
    for d in list(range(1, n - 1)) + [n]:
        for g in enumerate_flag_normalized(n, d):
            if move is not None:
                g = g.conjugated_by(move)
            candidates.setdefault(g._tables, g)
    found = [g for _, g in sorted(candidates.items()) if is_normal_in_sylow(g, s)]
    return tuple(found)


@functools.lru_cache(maxsize=None)
def all_sylows(n: int) -> tuple[SylowAGL, ...]:
    """One Sylow subgroup per maximal flag, in flag enumeration order."""
    return tuple(sylow_from_flag(f) for f in all_flags(n))


def invariant_flag_of(s: SylowAGL) -> Flag:
    """Recover the invariant flag from the generators' linear parts alone.

    Climbs the fixed-space chain: V_{i+1}/V_i is the joint fixed space of the
    induced action, which for a full flag stabilizer grows by one dimension at
    each step.  Used to certify the flag <-> Sylow bijection.
    """
    n = s.n
    parts = [g.linear for g in s.generators() if not g.is_translation()]
    chain = [Subspace.zero(n)]
    while chain[-1].dim < n:
        cur = chain[-1]
        blocks = []
        for p in parts:
            delta = p + BitMatrix.identity(n)
            blocks.append(_quotient_map(delta, cur))
        stacked = blocks[0]
        for b in blocks[1:]:
            stacked = stacked.hconcat(b)
        nxt = stacked.left_kernel()
        if nxt.dim != cur.dim + 1:
            raise AssertionError("fixed-space chain does not grow by one dimension")
        chain.append(nxt)
    return Flag(n, tuple(chain))


def _quotient_map(m: BitMatrix, sub: Subspace) -> BitMatrix:
    """Matrix of v -> (v*m mod sub) in the non-pivot coordinates of the quotient."""
    n = m.ncols
    pivots = {r.bits.bit_length() - 1 for r in sub.basis}
    free = [pos for pos in range(n - 1, -1, -1) if pos not in pivots]
    width = max(len(free), 1)
    rows = []
    for r in m.rows:
        red = sub.reduce(BitVector(n, r.bits)).bits
        bits = 0
        for pos in free:
            bits = (bits << 1) | ((red >> pos) & 1)
        rows.append(BitVector(width, bits))
    return BitMatrix(tuple(rows))
