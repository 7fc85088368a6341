"""Regular elementary abelian subgroups of Sym(F_2^n) with large intersection
with the translation group T, and the alternative operations they induce.

A regular elementary abelian group G is tabulated by its labelling v -> tau_v,
where tau_v is the unique element sending 0 to v.  The induced operation is
circ(u, v) = u * tau_v, making (V, circ) an elementary abelian 2-group with
identity 0.  The weak keys of circ are the vectors k with k circ x = k + x for
every x; they form the subspace supporting the intersection of G with T.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from .affine import Affinity, perm_to_affinity
from .gf2core import (
    BitMatrix,
    BitVector,
    Subspace,
    all_subspaces,
    complete_to_basis,
    rref_basis,
)
from .permgroup import Perm, PermGroup, ScaleError, _mul_table

REGULAR_N_MIN = 3  # the n = 2 geometry degenerates; everything here assumes n > 2
REGULAR_N_MAX = 8


class IsomorphismError(ValueError):
    """Raised when a label map does not induce a group isomorphism."""


def _check_group_dim(n: int) -> None:
    if not REGULAR_N_MIN <= n <= REGULAR_N_MAX:
        raise ValueError(f"n must be in {REGULAR_N_MIN}..{REGULAR_N_MAX}, got {n}")


def sigma(v: BitVector) -> Affinity:
    """The translation x -> x + v."""
    return Affinity.translation_by(v)


def _xor_table(n: int, v: int) -> tuple[int, ...]:
    return tuple(x ^ v for x in range(1 << n))


class RegularGroup:
    """An elementary abelian regular subgroup, stored as the full label table.

    ``tau(v)`` is the element sending 0 to v (an Affinity view is kept for the
    elements that are affine).  Immutable after construction; equality and
    hashing go through the canonical label table.
    """

    __slots__ = ("n", "_tables", "_affs", "_support", "_elements", "_gen_labels")

    def __init__(self, n: int, tables: tuple[tuple[int, ...], ...],
                 affinities: tuple[Affinity | None, ...]):
        self.n = n
        self._tables = tables
        self._affs = affinities
        self._support: Subspace | None = None
        self._elements: frozenset[tuple[int, ...]] | None = None
        self._gen_labels: tuple[int, ...] | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_perms(cls, n: int, perms: Iterable[Perm], check: bool = True) -> "RegularGroup":
        """Label a set of 2^n permutations by their images of 0.

        Always verifies regularity and that every non-identity element is a
        fixed-point-free involution; ``check=True`` additionally verifies
        commutativity and closure over all element pairs.
        """
        _check_group_dim(n)
        size = 1 << n
        by_label: list[tuple[int, ...] | None] = [None] * size
        affs: list[Affinity | None] = [None] * size
        count = 0
        for p in perms:
            t = p.images if isinstance(p, Perm) else tuple(p)
            if len(t) != size:
                raise ValueError("permutation has the wrong degree")
            label = t[0]
            if by_label[label] is not None:
                raise ValueError("two elements send 0 to the same point: not regular")
            by_label[label] = t
            count += 1
        if count != size or any(t is None for t in by_label):
            raise ValueError(f"expected {size} elements, got {count}")
        tables = tuple(by_label)  # type: ignore[arg-type]
        group = cls(n, tables, tuple(affs))
        group._validate(full=check)
        group._affs = tuple(perm_to_affinity(Perm(n, t)) for t in tables)
        return group

    @classmethod
    def from_affinities(cls, n: int, affs: Iterable[Affinity], check: bool = True) -> "RegularGroup":
        _check_group_dim(n)
        size = 1 << n
        by_label: list[Affinity | None] = [None] * size
        for f in affs:
            label = f.apply(BitVector.zero(n)).bits
            if by_label[label] is not None:
                raise ValueError("two elements send 0 to the same point: not regular")
            by_label[label] = f
        if any(f is None for f in by_label):
            raise ValueError(f"expected {size} distinct labels")
        tables = tuple(f.to_perm().images for f in by_label)  # type: ignore[union-attr]
        group = cls(n, tables, tuple(by_label))
        group._validate(full=check)
        return group

    def _validate(self, full: bool) -> None:
        size = 1 << self.n
        identity = tuple(range(size))
        if self._tables[0] != identity:
            raise ValueError("the element labelled 0 is not the identity")
        for v, t in enumerate(self._tables):
            if t[0] != v:
                raise ValueError("label table is inconsistent")
            if v and any(t[t[x]] != x or t[x] == x for x in range(size)):
                raise ValueError("a non-identity element is not a fixed-point-free involution")
        if full:
            universe = frozenset(self._tables)
            for i in range(size):
                a = self._tables[i]
                for j in range(i + 1, size):
                    b = self._tables[j]
                    ab = _mul_table(a, b)
                    if ab != _mul_table(b, a):
                        raise ValueError("the element set is not abelian")
                    if ab not in universe:
                        raise ValueError("the element set is not closed under composition")

    # -- basic queries -----------------------------------------------------

    @property
    def size(self) -> int:
        return 1 << self.n

    def tau(self, v: BitVector | int) -> Perm:
        """The unique element sending 0 to v."""
        return Perm(self.n, self._tables[int(v)])

    def tau_table(self, v: int) -> tuple[int, ...]:
        return self._tables[v]

    def tau_affinity(self, v: BitVector | int) -> Affinity | None:
        """Affinity view of tau(v), or None when that element is not affine."""
        return self._affs[int(v)]

    @property
    def is_affine(self) -> bool:
        return all(f is not None for f in self._affs)

    @property
    def elements(self) -> frozenset[tuple[int, ...]]:
        if self._elements is None:
            self._elements = frozenset(self._tables)
        return self._elements

    def perms(self) -> list[Perm]:
        return [Perm(self.n, t) for t in self._tables]

    def as_permgroup(self) -> PermGroup:
        gens = [Perm(self.n, self._tables[v]) for v in self.generator_labels()]
        return PermGroup(self.n, tuple(gens), self.elements)

    # -- the induced operation ---------------------------------------------

    def circ(self, u: BitVector | int, v: BitVector | int) -> BitVector:
        """u circ v = u * tau_v."""
        return BitVector(self.n, self._tables[int(v)][int(u)])

    def circ_int(self, u: int, v: int) -> int:
        return self._tables[v][u]

    def circ_op(self) -> "CircOp":
        return CircOp(self)

    @property
    def support(self) -> Subspace:
        """The subspace W with sigma_W = T intersect G (tau_w = sigma_w exactly on W)."""
        if self._support is None:
            n = self.n
            members = [BitVector(n, v) for v in range(self.size)
                       if self._tables[v] == _xor_table(n, v)]
            self._support = rref_basis(members, n=n)
        return self._support

    @property
    def b(self) -> BitVector | None:
        """The defect vector: the unique nonzero value of x*tau + x + 0*tau over
        non-translation elements.  Defined exactly when dim(support) = n - 2."""
        if self.support.dim != self.n - 2:
            return None
        for v in range(1, self.size):
            t = self._tables[v]
            if t == _xor_table(self.n, v):
                continue
            for x in range(self.size):
                diff = t[x] ^ x ^ v
                if diff:
                    return BitVector(self.n, diff)
        return None  # unreachable for a valid second-maximal group

    def generator_labels(self) -> tuple[int, ...]:
        """A greedy circ-independent set of labels generating the group."""
        if self._gen_labels is None:
            span = {0}
            gens: list[int] = []
            v = 1
            while len(span) < self.size:
                if v not in span:
                    gens.append(v)
                    span |= {self.circ_int(s, v) for s in span}
                v += 1
            self._gen_labels = tuple(gens)
        return self._gen_labels

    # -- transforms ----------------------------------------------------------

    def conjugated_by(self, g: "Affinity | Perm") -> "RegularGroup":
        """The conjugate group G^g = g^{-1} G g, relabelled by images of 0.

        Conjugation preserves being elementary abelian regular, so only the
        cheap structural validation is re-run.
        """
        if isinstance(g, Affinity):
            ginv = g.inverse()
            affs = [ginv * f * g for f in self._affs] if self.is_affine else None
            if affs is not None:
                size = 1 << self.n
                by_label: list[Affinity] = [None] * size  # type: ignore[list-item]
                for f in affs:
                    by_label[f.apply(BitVector.zero(self.n)).bits] = f
                tables = tuple(f.to_perm().images for f in by_label)
                group = RegularGroup(self.n, tables, tuple(by_label))
                group._validate(full=False)
                return group
            gp = g.to_perm()
        else:
            gp = g
        gt = gp.images
        ginv_t = gp.inverse().images
        size = 1 << self.n
        new_tables: list[tuple[int, ...] | None] = [None] * size
        for t in self._tables:
            ct = tuple(gt[t[ginv_t[x]]] for x in range(size))
            new_tables[ct[0]] = ct
        tables = tuple(new_tables)  # type: ignore[arg-type]
        group = RegularGroup(self.n, tables,
                             tuple(perm_to_affinity(Perm(self.n, t)) for t in tables))
        group._validate(full=False)
        return group

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        b = self.b
        tau: list = []
        for v in range(self.size):
            f = self._affs[v]
            tau.append(f.to_json() if f is not None else list(self._tables[v]))
        return {
            "n": self.n,
            "W": self.support.to_string(),
            "b": str(b) if b is not None else None,
            "tau": tau,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RegularGroup":
        n = data["n"]
        perms = []
        for rec in data["tau"]:
            if isinstance(rec, dict):
                perms.append(Affinity.from_json(rec).to_perm())
            else:
                perms.append(Perm(n, tuple(rec)))
        return cls.from_perms(n, perms, check=True)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegularGroup):
            return NotImplemented
        return self.n == other.n and self._tables == other._tables

    def __hash__(self) -> int:
        return hash((self.n, self._tables))

    def __repr__(self) -> str:
        return f"<RegularGroup n={self.n} dim(W)={self.support.dim}>"


@dataclass(frozen=True)
class CircOp:
    """The operation u circ v = u * tau_v induced by a regular group."""

    group: RegularGroup

    @property
    def n(self) -> int:
        return self.group.n

    def __call__(self, u: BitVector | int, v: BitVector | int) -> BitVector:
        return self.group.circ(u, v)


@dataclass(frozen=True)
class WeakKeySpace:
    """The subspace of keys on which circ-addition agrees with XOR."""

    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def __contains__(self, v: BitVector) -> bool:
        return self.space.contains(v)


@functools.lru_cache(maxsize=None)
def translation_group(n: int) -> RegularGroup:
    """T: the group of all translations, labelled by tau_v = sigma_v."""
    _check_group_dim(n)
    affs = [sigma(BitVector(n, v)) for v in range(1 << n)]
    return RegularGroup.from_affinities(n, affs, check=False)


def circ(u: BitVector, v: BitVector, group: RegularGroup) -> BitVector:
    """u circ v = u * tau_v in the given group."""
    if u.n != group.n or v.n != group.n:
        raise ValueError("dimension mismatch")
    return group.circ(u, v)


def weak_keys(group: RegularGroup) -> WeakKeySpace:
    """{ k : k circ x = k + x for all x }, computed by exhaustive scan.

    The result always coincides with the support of the intersection with T.
    """
    n = group.n
    size = 1 << n
    keys = []
    for k in range(size):
        if all(group.circ_int(k, x) == (k ^ x) for x in range(size)):
            keys.append(BitVector(n, k))
    space = rref_basis(keys, n=n)
    if space != group.support:
        raise AssertionError("weak-key scan disagrees with the intersection support")
    return WeakKeySpace(space)


def intersection_with_T(group: RegularGroup) -> Subspace:
    """The subspace W with sigma_W = T intersect G, by elementwise comparison."""
    return group.support


def canonical_w(n: int) -> Subspace:
    """The canonical second-maximal support <e_3, ..., e_n>."""
    return rref_basis([BitVector.e(i, n) for i in range(3, n + 1)], n=n)


def build_Tb(n: int, b: BitVector) -> RegularGroup:
    """The canonical group T_b for b in <e_3,...,e_n> \\ {0}.

    Generated by pi_b : x -> x + x^(2) b + e_1,  eps_b : x -> x + x^(1) b + e_2,
    and the translations by e_3..e_n; its intersection with T is supported on
    W = <e_3, ..., e_n> and the three non-translation cosets move every W-coset.
    """
    _check_group_dim(n)
    if b.n != n:
        raise ValueError("dimension mismatch")
    if b.is_zero or b.coord(1) or b.coord(2):
        raise ValueError("b must be a nonzero vector of <e_3, ..., e_n>")
    ident = BitMatrix.identity(n)
    pi = Affinity(_add_to_row(ident, 2, b), BitVector.e(1, n))
    eps = Affinity(_add_to_row(ident, 1, b), BitVector.e(2, n))
    affs = []
    for alpha in (0, 1):
        for beta in (0, 1):
            head = Affinity.identity(n)
            if alpha:
                head = head * pi
            if beta:
                head = head * eps
            for w in canonical_w(n).vectors():
                affs.append(head * sigma(w))
    return RegularGroup.from_affinities(n, affs, check=True)


def _add_to_row(m: BitMatrix, i: int, b: BitVector) -> BitMatrix:
    """Copy of m with b XORed into row i (1-based)."""
    rows = list(m.rows)
    rows[i - 1] = rows[i - 1] ^ b
    return BitMatrix(tuple(rows))


def build_with_support(n: int, w: Subspace, b: BitVector) -> RegularGroup:
    """The unique second-maximal group with intersection support w and defect b.

    Only dim(w) = n - 2 is possible: no elementary abelian regular subgroup
    other than T meets T in a hyperplane, and smaller supports are not covered
    by this parametrization.
    """
    _check_group_dim(n)
    if w.n != n:
        raise ValueError("dimension mismatch")
    if w.dim == n - 1:
        raise ValueError(
            "dim(W) = n-1 is impossible: a regular elementary abelian subgroup "
            "meeting T in a hyperplane would equal T"
        )
    if w.dim != n - 2:
        raise ValueError(f"support must have dimension n-2 = {n - 2}, got {w.dim}")
    if b.is_zero or not w.contains(b):
        raise ValueError("b must be a nonzero vector of the support")
    change = _support_change_of_basis(n, w)
    b_bar = change.inverse().vec_mul(b)
    return build_Tb(n, b_bar).conjugated_by(Affinity.linear_map(change))


def _support_change_of_basis(n: int, w: Subspace) -> BitMatrix:
    """A deterministic L in GL(V) with <e_3, ..., e_n> * L = w."""
    extension = complete_to_basis(w)
    rows = list(extension) + list(w.basis)
    return BitMatrix(tuple(rows))


def count_second_maximal(n: int) -> int:
    """t_n = (2^{n-2} - 1)(2^{n-1} - 1)(2^n - 1) / 3."""
    return ((1 << (n - 2)) - 1) * ((1 << (n - 1)) - 1) * ((1 << n) - 1) // 3


SECOND_MAXIMAL_N_MAX = 5


@functools.lru_cache(maxsize=None)
def enumerate_second_maximal(n: int) -> tuple[RegularGroup, ...]:
    """All t_n regular elementary abelian subgroups whose intersection with T
    has dimension n - 2, as change-of-basis conjugates of the canonical groups.

    Deterministic order: supports W in canonical enumeration order, then the
    canonical defect parameter in integer order.  Deduplicated by the
    classifying pair (W, b); the construction never collides.
    """
    _check_group_dim(n)
    if n > SECOND_MAXIMAL_N_MAX:
        raise ScaleError(f"second-maximal enumeration is supported for n <= {SECOND_MAXIMAL_N_MAX}")
    w_bar = canonical_w(n)
    canonical = {bb.bits: build_Tb(n, bb) for bb in w_bar.vectors() if not bb.is_zero}
    out: list[RegularGroup] = []
    seen: set[tuple[str, int]] = set()
    for w in all_subspaces(n, n - 2):
        if w == w_bar:
            groups = [canonical[k] for k in sorted(canonical)]
        else:
            change = Affinity.linear_map(_support_change_of_basis(n, w))
            groups = [canonical[k].conjugated_by(change) for k in sorted(canonical)]
        for g in groups:
            key = (g.support.to_string(), g.b.bits)  # type: ignore[union-attr]
            if key in seen:
                raise AssertionError("duplicate (W, b) classification key")
            seen.add(key)
            out.append(g)
    if len(out) != count_second_maximal(n):
        raise AssertionError("enumeration does not match the closed-form count")
    return tuple(out)


def dixon_conjugator(h: RegularGroup, k: RegularGroup, zeta: BitMatrix) -> Perm:
    """The conjugating permutation g with H^g = K built from a label map.

    ``zeta`` sends the label basis e_1..e_n of H to labels of K: the group
    isomorphism maps the H-element labelled e_i to the K-element labelled
    e_i * zeta and extends multiplicatively.  The permutation is defined by
    (0*h) g = 0*(h zeta), with base point 0.  Raises IsomorphismError when the
    image elements fail to generate K (the map is then not an isomorphism).
    """
    if h.n != k.n:
        raise ValueError("dimension mismatch")
    n = h.n
    if not (zeta.is_square and zeta.nrows == n and zeta.is_invertible()):
        raise IsomorphismError("label map must be an invertible n x n matrix")
    size = 1 << n

    h_basis = [h.tau_table(BitVector.e(i, n).bits) for i in range(1, n + 1)]
    k_basis = [k.tau_table(zeta.vec_mul(BitVector.e(i, n)).bits) for i in range(1, n + 1)]

    def subset_labels(basis: list[tuple[int, ...]]) -> list[int]:
        # label(product over the subset), indexed by exponent mask c;
        # c's bit i-1 (LSB-first) selects basis element i
        prods: list[tuple[int, ...]] = [tuple(range(size))] * size
        for c in range(1, size):
            low = c & (-c)
            prods[c] = _mul_table(prods[c ^ low], basis[low.bit_length() - 1])
        return [t[0] for t in prods]

    h_labels = subset_labels(h_basis)
    if len(set(h_labels)) != size:
        raise IsomorphismError("the e_i-labelled elements do not form a basis of H")
    k_labels = subset_labels(k_basis)
    if len(set(k_labels)) != size:
        raise IsomorphismError("the image elements do not generate K: not an isomorphism")

    images = [0] * size
    for c in range(size):
        images[h_labels[c]] = k_labels[c]
    return Perm(n, tuple(images))
