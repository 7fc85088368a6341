"""Affinities, the augmented matrix embedding, and permutation round trips."""

import random

import pytest

from regulab.affine import (
    Affinity,
    AugmentedMatrix,
    agl_group,
    agl_order,
    compose_affinity,
    embed_augmented,
    perm_to_affinity,
)
from regulab.gf2core import BitMatrix, BitVector
from regulab.permgroup import Perm, compose
from regulab.regular import build_Tb, sigma


def bv(s):
    return BitVector.from_string(s)


def canonical_pi_eps(n, b):
    tb = build_Tb(n, b)
    return tb.tau_affinity(BitVector.e(1, n).bits), tb.tau_affinity(BitVector.e(2, n).bits)


def random_affinity(n, rng):
    while True:
        rows = tuple(BitVector(n, rng.randrange(1, 1 << n)) for _ in range(n))
        m = BitMatrix(rows)
        if m.is_invertible():
            return Affinity(m, BitVector(n, rng.randrange(1 << n)))


class TestApply:
    def test_identity(self):
        f = Affinity.identity(3)
        assert all(f.apply(BitVector(3, x)) == BitVector(3, x) for x in range(8))

    def test_translation(self):
        f = sigma(bv("101"))
        assert f.apply(bv("011")) == bv("110")

    def test_pi_b_on_e2(self):
        # x + x^(2) b + e_1 at x = e_2 gives e_1 + e_2 + b = 111
        pi, _ = canonical_pi_eps(3, bv("001"))
        assert pi.apply(bv("010")) == bv("111")

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            Affinity.identity(3).apply(bv("0100"))


class TestToPerm:
    def test_identity(self):
        assert Affinity.identity(3).to_perm() == Perm.identity(3)

    def test_translation_pairs_points(self):
        p = sigma(BitVector.e(1, 3)).to_perm()
        assert all(p(x) == x ^ 4 for x in range(8))

    def test_pi_b_fixed_point_free_involution(self):
        pi, _ = canonical_pi_eps(3, bv("001"))
        p = pi.to_perm()
        assert p.is_involution() and p.is_fixed_point_free()


class TestPermToAffinity:
    def test_round_trip_random(self):
        rng = random.Random(23)
        for n in (3, 4):
            for _ in range(30):
                f = random_affinity(n, rng)
                assert perm_to_affinity(f.to_perm()) == f

    def test_three_cycle_not_affine(self):
        p = Perm(3, (1, 2, 0, 3, 4, 5, 6, 7))
        assert perm_to_affinity(p) is None

    def test_every_tb_element_affine(self):
        tb = build_Tb(3, bv("001"))
        for v in range(8):
            assert perm_to_affinity(tb.tau(v)) is not None


class TestCompose:
    def test_inverse(self):
        rng = random.Random(29)
        f = random_affinity(4, rng)
        assert f * f.inverse() == Affinity.identity(4)

    def test_translations_add(self):
        u, v = bv("100"), bv("011")
        assert sigma(u) * sigma(v) == sigma(u ^ v)

    def test_pi_eps_commute(self):
        pi, eps = canonical_pi_eps(3, bv("001"))
        assert compose_affinity(pi, eps) == compose_affinity(eps, pi)

    def test_functor_property(self):
        rng = random.Random(31)
        for _ in range(25):
            f, g = random_affinity(3, rng), random_affinity(3, rng)
            assert (f * g).to_perm() == compose(f.to_perm(), g.to_perm())


class TestAugmented:
    def test_translation_in_w_blocks(self):
        # sigma_z for z in W at split d: both diagonal blocks are identities
        z = bv("0011")
        m = embed_augmented(sigma(z), 2)
        assert m.block_a == BitMatrix.identity(2)
        assert m.block_c == BitMatrix.identity(2)
        assert m.block_b == BitMatrix.zero(2, 2)
        assert m.w == bv("11")
        assert m.u == bv("00")

    def test_identity_matrix(self):
        m = embed_augmented(Affinity.identity(3), 1)
        assert m.matrix == BitMatrix.identity(4)

    def test_pi_b_block_structure(self):
        pi, _ = canonical_pi_eps(3, bv("001"))
        m = embed_augmented(pi, 1)
        assert m.block_c == BitMatrix.identity(1)
        # the n-2 block column carries b in the second row
        assert m.block_b == BitMatrix.from_string("0/1")
        assert m.u == bv("10")

    def test_round_trip(self):
        rng = random.Random(37)
        f = random_affinity(4, rng)
        assert embed_augmented(f, 2).to_affinity() == f

    def test_first_row_carries_translation(self):
        f = sigma(bv("101"))
        m = embed_augmented(f, 0)
        assert m.matrix.row(1) == bv("1101")

    def test_invalid_split(self):
        with pytest.raises(ValueError):
            embed_augmented(Affinity.identity(3), 4)

    def test_validation(self):
        bad = BitMatrix.from_string("0101/0100/0010/0001")
        with pytest.raises(ValueError):
            AugmentedMatrix(bad, 1)


class TestAglGroup:
    def test_orders(self):
        assert agl_order(3) == 1344
        assert agl_order(4) == 322560
        assert agl_group(3).order == 1344

    def test_membership(self):
        agl = agl_group(3)
        assert sigma(bv("010")).to_perm() in agl
        assert Perm(3, (1, 2, 0, 3, 4, 5, 6, 7)) not in agl

    def test_singular_linear_part_rejected(self):
        with pytest.raises(ValueError):
            Affinity(BitMatrix.from_string("10/10"), BitVector.zero(2))
