"""Permutations and group computations: closure, centralizers, normalizers."""

import random

import pytest

from regulab.affine import Affinity, agl_generators, agl_group
from regulab.gf2core import BitVector, rref_basis
from regulab.permgroup import (
    Perm,
    PermGroup,
    ScaleError,
    centralizer_in,
    compose,
    conjugate,
    full_symmetric_group,
    generate_closure,
    is_regular_elementary_abelian,
    normalizer_in,
)
from regulab.regular import build_Tb, sigma, translation_group
from regulab.sylow import canonical_sylow


def sigma_perm(v_bits, n):
    return Perm(n, tuple(x ^ v_bits for x in range(1 << n)))


class TestPerm:
    def test_identity_compose(self):
        g = Perm(3, (1, 0, 3, 2, 5, 4, 7, 6))
        assert compose(Perm.identity(3), g) == g
        assert compose(g, Perm.identity(3)) == g

    def test_translations_are_involutions(self):
        for v in range(8):
            s = sigma_perm(v, 3)
            assert compose(s, s) == Perm.identity(3)

    def test_translation_composition_is_xor(self):
        a, b = sigma_perm(4, 3), sigma_perm(2, 3)
        prod = compose(a, b)
        assert all(prod(x) == x ^ 6 for x in range(8))
        assert prod == sigma_perm(6, 3)

    def test_right_action_order(self):
        a = Perm(3, (1, 2, 3, 4, 5, 6, 7, 0))
        b = sigma_perm(1, 3)
        ab = a * b
        assert all(ab(x) == b(a(x)) for x in range(8))

    def test_invalid_table(self):
        with pytest.raises(ValueError):
            Perm(3, (0, 0, 1, 2, 3, 4, 5, 6))

    def test_inverse(self):
        rng = random.Random(5)
        imgs = list(range(8))
        rng.shuffle(imgs)
        g = Perm(3, tuple(imgs))
        assert g * g.inverse() == Perm.identity(3)

    def test_cycles_and_parity(self):
        s = sigma_perm(1, 3)
        assert s.cycle_string() == "(0 1)(2 3)(4 5)(6 7)"
        assert s.is_even()
        transposition = Perm(3, (1, 0, 2, 3, 4, 5, 6, 7))
        assert not transposition.is_even()


class TestConjugate:
    def test_conjugate_by_identity(self):
        g = sigma_perm(3, 3)
        assert conjugate(g, Perm.identity(3)) == g

    def test_translations_commute(self):
        assert conjugate(sigma_perm(5, 3), sigma_perm(2, 3)) == sigma_perm(5, 3)

    def test_translation_conjugation_identity(self):
        # x * (g^-1 sigma_v g) = ((x g^-1) + v) g, evaluated pointwise
        rng = random.Random(19)
        for _ in range(20):
            imgs = list(range(8))
            rng.shuffle(imgs)
            g = Perm(3, tuple(imgs))
            ginv = g.inverse()
            for v in range(8):
                conj = conjugate(sigma_perm(v, 3), g)
                assert all(conj(x) == g(ginv(x) ^ v) for x in range(8))


class TestClosure:
    def test_translation_closure(self):
        for n in (3, 4):
            gens = [sigma_perm(1 << k, n) for k in range(n)]
            group = generate_closure(gens)
            assert group.order == 1 << n

    def test_tb_closure_order_8(self):
        tb = build_Tb(3, BitVector.e(3, 3))
        gens = [tb.tau(v) for v in tb.generator_labels()]
        group = generate_closure(gens)
        assert group.order == 8
        ident = Perm.identity(3)
        for p in group:
            assert p == ident or (p.is_involution() and p.is_fixed_point_free())

    def test_canonical_sylow_order(self):
        group = canonical_sylow(3).as_permgroup()
        assert group.order == 64

    def test_agl_closure_cross_check(self):
        group = generate_closure(agl_generators(3))
        assert group.order == 1344
        assert group.tables == agl_group(3).tables

    def test_budget_guard(self):
        gens = list(full_symmetric_group(3).generators)
        with pytest.raises(ScaleError):
            generate_closure(gens, budget=100)

    def test_budget_env_override(self, monkeypatch):
        monkeypatch.setenv("REGULAB_BUDGET", "10")
        gens = [sigma_perm(1 << k, 4) for k in range(4)]
        with pytest.raises(ScaleError):
            generate_closure(gens)

    def test_closure_idempotence(self):
        tb = build_Tb(3, BitVector.e(3, 3))
        group = generate_closure([tb.tau(v) for v in tb.generator_labels()])
        again = generate_closure(list(group))
        assert again.tables == group.tables


class TestRegularityPredicate:
    def test_translation_group_is_regular_ea(self):
        assert is_regular_elementary_abelian(translation_group(3).as_permgroup())

    def test_tb_is_regular_ea(self):
        tb = build_Tb(4, BitVector.from_string("0011"))
        assert is_regular_elementary_abelian(tb.as_permgroup())

    def test_sylow_is_not(self):
        assert not is_regular_elementary_abelian(canonical_sylow(3).as_permgroup())

    def test_requires_enumeration(self):
        group = PermGroup.from_generators([sigma_perm(1, 3)])
        with pytest.raises(ValueError):
            is_regular_elementary_abelian(group)


class TestCentralizerNormalizer:
    def test_t_self_centralizing(self):
        t = translation_group(3).as_permgroup()
        cent = centralizer_in(t, t)
        assert cent.tables == t.tables

    def test_centralizer_orders_in_sym8(self):
        sym = full_symmetric_group(3)
        w2 = rref_basis([BitVector.e(2, 3), BitVector.e(3, 3)])
        gens2 = PermGroup.from_generators([sigma(v).to_perm() for v in w2.basis])
        assert centralizer_in(sym, gens2).order == 32  # 2^(2n-1) at n = 3
        w1 = rref_basis([BitVector.e(3, 3)])
        gens1 = PermGroup.from_generators([sigma(v).to_perm() for v in w1.basis])
        assert centralizer_in(sym, gens1).order == 384  # 4! * 2^4

    def test_normalizer_of_t_is_agl(self):
        agl = agl_group(3)
        t = translation_group(3).as_permgroup()
        assert normalizer_in(agl, t).tables == agl.tables

    def test_normalizer_of_sylow_in_sym_has_order_128(self):
        sym = full_symmetric_group(3)
        sg = canonical_sylow(3).as_permgroup()
        assert normalizer_in(sym, sg).order == 128

    def test_sylow_self_normalizing_in_agl(self):
        sg = canonical_sylow(3).as_permgroup()
        norm = normalizer_in(agl_group(3), sg)
        assert norm.tables == sg.tables

    def test_lagrange(self):
        agl = agl_group(3)
        t = translation_group(3).as_permgroup()
        sg = canonical_sylow(3).as_permgroup()
        for sub in (t, sg):
            assert agl.order % sub.order == 0


class TestParity:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_translations_and_unitriangular_gens_even(self, n):
        from regulab.sylow import unitriangular_generators

        for i in range(n):
            assert sigma_perm(1 << i, n).is_even()
        for u in unitriangular_generators(n):
            assert Affinity.linear_map(u).to_perm().is_even()


class TestFullSym:
    def test_order_and_guard(self):
        assert full_symmetric_group(3).order == 40320
        with pytest.raises(ScaleError):
            full_symmetric_group(4)
