"""Bit-packed GF(2) linear algebra: vectors, RREF subspaces, flags."""

import random

import pytest

from regulab.affine import all_invertible_matrices
from regulab.gf2core import (
    BitMatrix,
    BitVector,
    Flag,
    all_flags,
    all_subspaces,
    complete_flag,
    count_flags,
    gaussian_binomial,
    rref_basis,
    Subspace,
)


def bv(s):
    return BitVector.from_string(s)


def e(i, n):
    return BitVector.e(i, n)


class TestBitVector:
    def test_string_roundtrip_and_coords(self):
        v = bv("101")
        assert str(v) == "101"
        assert [v.coord(i) for i in (1, 2, 3)] == [1, 0, 1]
        assert int(v) == 5

    def test_basis_vectors(self):
        assert e(1, 3).bits == 4
        assert e(3, 3).bits == 1
        assert str(e(2, 4)) == "0100"

    def test_xor_and_dimension_mismatch(self):
        assert bv("101") ^ bv("011") == bv("110")
        assert bv("101") + bv("101") == BitVector.zero(3)
        with pytest.raises(ValueError):
            bv("101") ^ bv("01")

    def test_slice(self):
        v = bv("10110")
        assert v.slice(3, 5) == bv("110")
        assert v.slice(1, 2) == bv("10")
        assert v.slice(2, 2) == bv("0")
        with pytest.raises(ValueError):
            v.slice(4, 2)

    def test_concat(self):
        assert bv("10").concat(bv("110")) == bv("10110")

    def test_out_of_range_bits(self):
        with pytest.raises(ValueError):
            BitVector(3, 8)
        with pytest.raises(ValueError):
            BitVector(0, 0)


class TestRref:
    def test_duplicate_vector(self):
        s = rref_basis([e(3, 3), e(3, 3)])
        assert s.dim == 1 and s.basis == (e(3, 3),)

    def test_empty_span(self):
        s = rref_basis([], n=3)
        assert s.dim == 0 and s == Subspace.zero(3)

    def test_hand_reduction(self):
        # {e1+e2, e2} reduces to the canonical basis [e1, e2]
        s = rref_basis([bv("110"), bv("010")])
        assert s.basis == (bv("100"), bv("010"))

    def test_rref_uniqueness_exhaustive(self):
        # same span (checked by exhaustive membership) iff same canonical form
        rng = random.Random(7)
        n = 4
        for _ in range(200):
            a = [BitVector(n, rng.randrange(1 << n)) for _ in range(rng.randrange(1, 4))]
            b = [BitVector(n, rng.randrange(1 << n)) for _ in range(rng.randrange(1, 4))]
            sa, sb = rref_basis(a, n=n), rref_basis(b, n=n)
            span_a = {v.bits for v in sa.vectors()}
            span_b = {v.bits for v in sb.vectors()}
            assert (sa == sb) == (span_a == span_b)

    def test_mismatched_dimensions(self):
        with pytest.raises(ValueError):
            rref_basis([bv("10"), bv("100")])


class TestSubspace:
    def test_contains(self):
        s = rref_basis([e(3, 3)])
        assert BitVector.zero(3) in s
        assert e(1, 3) not in s
        t = rref_basis([bv("110"), bv("001")])
        assert bv("111") in t

    def test_contains_dimension_mismatch(self):
        with pytest.raises(ValueError):
            rref_basis([e(3, 3)]).contains(bv("0001"))

    def test_intersection_examples(self):
        a = rref_basis([e(1, 3), e(2, 3)])
        assert a & a == a
        assert (rref_basis([e(1, 3)]) & rref_basis([e(2, 3)])).dim == 0
        b = rref_basis([e(2, 3), e(3, 3)])
        assert a & b == rref_basis([e(2, 3)])

    def test_dimension_formula(self):
        rng = random.Random(11)
        n = 4
        for _ in range(150):
            a = rref_basis([BitVector(n, rng.randrange(1 << n)) for _ in range(3)], n=n)
            b = rref_basis([BitVector(n, rng.randrange(1 << n)) for _ in range(3)], n=n)
            assert (a & b).dim + (a | b).dim == a.dim + b.dim

    def test_string_roundtrip(self):
        s = rref_basis([bv("0110"), bv("0001")])
        assert Subspace.from_string(s.to_string(), 4) == s
        assert Subspace.from_string("", 4) == Subspace.zero(4)

    def test_non_canonical_basis_rejected(self):
        with pytest.raises(ValueError):
            Subspace(3, (bv("110"), bv("010")))


class TestFlag:
    def test_canonical_flag(self):
        f = complete_flag([e(i, 3) for i in (1, 2, 3)])
        assert f.subspace(1) == rref_basis([e(3, 3)])
        assert f.subspace(2) == rref_basis([e(2, 3), e(3, 3)])
        assert f.subspace(3) == Subspace.full(3)
        assert f == Flag.canonical(3)

    def test_reversed_basis(self):
        f = complete_flag([e(3, 3), e(2, 3), e(1, 3)])
        assert f.subspace(1) == rref_basis([e(1, 3)])
        assert f.subspace(2) == rref_basis([e(1, 3), e(2, 3)])

    def test_not_a_basis(self):
        with pytest.raises(ValueError):
            complete_flag([e(1, 3), e(1, 3), e(2, 3)])

    def test_flag_count_n3_against_ordered_basis_oracle(self):
        # independent oracle: run over all ordered bases of F_2^3 and dedupe
        seen = set()
        for m in all_invertible_matrices(3):
            seen.add(complete_flag(list(m.rows)))
        assert len(seen) == 21
        assert set(all_flags(3)) == seen
        assert count_flags(3) == 21

    def test_string_roundtrip(self):
        for f in all_flags(3)[:5]:
            assert Flag.from_string(f.to_string(), 3) == f


class TestBitMatrix:
    def test_identity_inverse(self):
        m = BitMatrix.identity(4)
        assert m.inverse() == m

    def test_transvection_self_inverse(self):
        m = BitMatrix.identity(4) + BitMatrix.single(1, 2, 4)
        assert m.inverse() == m
        assert m @ m == BitMatrix.identity(4)

    def test_random_inverse_property(self):
        rng = random.Random(3)
        n = 4
        done = 0
        while done < 50:
            m = BitMatrix(tuple(BitVector(n, rng.randrange(1, 1 << n)) for _ in range(n)))
            if not m.is_invertible():
                continue
            assert m @ m.inverse() == BitMatrix.identity(n)
            done += 1

    def test_singular_raises(self):
        m = BitMatrix.from_string("10/10")
        assert not m.is_invertible()
        with pytest.raises(ValueError):
            m.inverse()

    def test_vec_mul(self):
        m = BitMatrix.from_string("110/011/001")
        assert m.vec_mul(bv("100")) == bv("110")
        assert m.vec_mul(bv("101")) == bv("111")

    def test_left_kernel(self):
        m = BitMatrix.from_string("10/01/11")
        k = m.left_kernel()
        assert k.dim == 1
        assert all(m.vec_mul(v).is_zero for v in k.vectors())

    def test_string_roundtrip(self):
        m = BitMatrix.from_string("1011/0101/0010/1001")
        assert BitMatrix.from_string(str(m)) == m


class TestEnumeration:
    @pytest.mark.parametrize("n,d", [(3, 0), (3, 1), (3, 2), (3, 3), (4, 2), (5, 3)])
    def test_subspace_counts_match_gaussian_binomial(self, n, d):
        subs = list(all_subspaces(n, d))
        assert len(subs) == gaussian_binomial(n, d)
        assert len(set(subs)) == len(subs)
        assert all(s.dim == d for s in subs)

    def test_flag_count_n4(self):
        assert len(all_flags(4)) == count_flags(4) == 315
