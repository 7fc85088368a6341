"""Regular elementary abelian subgroups, circ operations, weak keys, Dixon."""

import itertools
import random

import pytest

from regulab.affine import Affinity, perm_to_affinity
from regulab.gf2core import BitMatrix, BitVector, Subspace, all_subspaces, rref_basis
from regulab.oracle import brute_enumerate_regular_ea
from regulab.permgroup import Perm, full_symmetric_group, is_regular_elementary_abelian
from regulab.regular import (
    IsomorphismError,
    RegularGroup,
    build_Tb,
    build_with_support,
    canonical_w,
    circ,
    count_second_maximal,
    dixon_conjugator,
    enumerate_second_maximal,
    intersection_with_T,
    sigma,
    translation_group,
    weak_keys,
)


def bv(s):
    return BitVector.from_string(s)


def e(i, n):
    return BitVector.e(i, n)


class TestTranslationGroup:
    def test_support_is_everything(self):
        t = translation_group(3)
        assert t.support == Subspace.full(3)

    def test_circ_is_xor(self):
        t = translation_group(3)
        assert all(t.circ_int(u, v) == u ^ v for u in range(8) for v in range(8))

    def test_is_regular_ea(self):
        assert is_regular_elementary_abelian(translation_group(4).as_permgroup())

    def test_sigma_closure(self):
        from regulab.permgroup import generate_closure

        group = generate_closure([sigma(e(i, 4)).to_perm() for i in range(1, 5)])
        assert group.order == 16

    def test_n_out_of_range(self):
        with pytest.raises(ValueError):
            translation_group(2)


class TestBuildTb:
    def test_pi_formula_n3(self):
        # pi: x -> x + x^(2) b + e_1 for b = e_3
        tb = build_Tb(3, bv("001"))
        pi = tb.tau(bv("100").bits)
        for x in range(8):
            x2 = (x >> 1) & 1
            assert pi(x) == x ^ (x2 * 1) ^ 4

    def test_group_order_and_structure(self):
        tb = build_Tb(3, bv("001"))
        assert len(tb.elements) == 8
        assert is_regular_elementary_abelian(tb.as_permgroup())

    def test_support_and_b(self):
        for n, b in ((3, "001"), (4, "0011"), (5, "00101")):
            tb = build_Tb(n, bv(b))
            assert tb.support == canonical_w(n)
            assert tb.b == bv(b)

    def test_count_over_all_b_n4(self):
        groups = {build_Tb(4, BitVector(4, k)) for k in range(1, 4)}
        assert len(groups) == 3 == (1 << 2) - 1

    def test_distinct_b_distinct_groups(self):
        a = build_Tb(4, bv("0001"))
        b = build_Tb(4, bv("0010"))
        assert a != b and a.elements != b.elements

    def test_invalid_b(self):
        with pytest.raises(ValueError):
            build_Tb(3, BitVector.zero(3))
        with pytest.raises(ValueError):
            build_Tb(3, bv("100"))  # outside <e_3..e_n>


class TestCirc:
    def test_identity_element(self):
        tb = build_Tb(3, bv("001"))
        assert all(tb.circ_int(0, v) == v for v in range(8))

    def test_weak_key_agreement(self):
        tb = build_Tb(4, bv("0010"))
        for k in (bv("0010"), bv("0001"), bv("0011")):
            for x in range(16):
                assert circ(k, BitVector(4, x), tb) == k ^ BitVector(4, x)

    def test_circ_e1_e2_hits_b(self):
        tb = build_Tb(3, bv("001"))
        assert circ(e(1, 3), e(2, 3), tb) == bv("111")

    def test_axioms_exhaustive_n3(self):
        for g in enumerate_second_maximal(3):
            for x, y, z in itertools.product(range(8), repeat=3):
                assert g.circ_int(g.circ_int(x, y), z) == g.circ_int(x, g.circ_int(y, z))
            for x, y in itertools.product(range(8), repeat=2):
                assert g.circ_int(x, y) == g.circ_int(y, x)
            assert all(g.circ_int(x, x) == 0 for x in range(8))

    def test_dimension_mismatch(self):
        tb = build_Tb(3, bv("001"))
        with pytest.raises(ValueError):
            circ(bv("0001"), bv("0010"), tb)


class TestWeakKeys:
    def test_translation_group_all_weak(self):
        wk = weak_keys(translation_group(3))
        assert wk.space == Subspace.full(3) and wk.dim == 3

    def test_tb_weak_keys(self):
        for n in (3, 4):
            tb = build_Tb(n, e(n, n))
            assert weak_keys(tb).space == canonical_w(n)

    def test_no_group_has_hyperplane_support_n3(self):
        # every EA regular subgroup of Sym(2^3), by exhaustive oracle search
        sym = full_symmetric_group(3)
        all_groups = brute_enumerate_regular_ea(sym)
        assert len(all_groups) == 30  # |Sym(8)| / |AGL(3,2)| conjugates of T
        dims = {}
        for g in all_groups:
            members = [BitVector(3, t[0]) for t in g.tables
                       if t == tuple(x ^ t[0] for x in range(8))]
            dims.setdefault(rref_basis(members, n=3).dim, 0)
            dims[rref_basis(members, n=3).dim] += 1
        assert dims == {3: 1, 1: 7, 0: 22}
        assert 2 not in dims

    def test_matches_intersection_for_random_conjugates(self):
        rng = random.Random(41)
        for n in (3, 4):
            t = translation_group(n)
            for _ in range(50):
                imgs = list(range(1 << n))
                rng.shuffle(imgs)
                conj = t.conjugated_by(Perm(n, tuple(imgs)))
                assert weak_keys(conj).space == intersection_with_T(conj)


class TestBuildWithSupport:
    def test_hyperplane_rejected(self):
        w = rref_basis([e(1, 4), e(2, 4), e(3, 4)])
        with pytest.raises(ValueError, match="n-1"):
            build_with_support(4, w, e(1, 4))

    def test_matches_requested_parameters(self):
        for w in list(all_subspaces(4, 2))[:6]:
            for b in w.vectors():
                if b.is_zero:
                    continue
                g = build_with_support(4, w, b)
                assert g.support == w and g.b == b

    def test_b_outside_support_rejected(self):
        w = rref_basis([e(3, 4), e(4, 4)])
        with pytest.raises(ValueError):
            build_with_support(4, w, e(1, 4))


class TestEnumerateSecondMaximal:
    def test_counts(self):
        assert len(enumerate_second_maximal(3)) == count_second_maximal(3) == 7
        assert len(enumerate_second_maximal(4)) == count_second_maximal(4) == 105

    def test_n4_factorization(self):
        by_support = {}
        for g in enumerate_second_maximal(4):
            by_support.setdefault(g.support, []).append(g)
        assert len(by_support) == 35  # (n-2)-dimensional subspaces of F_2^4
        assert all(len(v) == 3 for v in by_support.values())

    def test_all_elements_affine(self):
        for n in (3, 4):
            for g in enumerate_second_maximal(n):
                assert g.is_affine
                assert all(perm_to_affinity(g.tau(v)) is not None for v in range(1 << n))

    def test_t_normalizes_every_group(self):
        for g in enumerate_second_maximal(3):
            member = g.elements
            for i in range(1, 4):
                s = sigma(e(i, 3)).to_perm()
                assert all(g.tau(v).conj(s).images in member for v in range(8))

    def test_groups_are_distinct(self):
        groups = enumerate_second_maximal(3)
        assert len({g.elements for g in groups}) == 7


class TestDixon:
    def test_identity_case(self):
        t = translation_group(3)
        g = dixon_conjugator(t, t, BitMatrix.identity(3))
        assert g == Perm.identity(3)

    def test_t_to_tb(self):
        t = translation_group(3)
        tb = build_Tb(3, bv("001"))
        g = dixon_conjugator(t, tb, BitMatrix.identity(3))
        assert {t.tau(v).conj(g).images for v in range(8)} == tb.elements

    def test_conjugation_labelling_identity(self):
        # (sigma_v)^g lands on the element labelled (0 g^-1 + v) g
        t = translation_group(4)
        tb = build_Tb(4, bv("0010"))
        g = dixon_conjugator(t, tb, BitMatrix.identity(4))
        ginv = g.inverse()
        for v in range(16):
            assert t.tau(v).conj(g) == tb.tau(g(ginv(0) ^ v))

    def test_nontrivial_zeta(self):
        t = translation_group(4)
        tb = build_Tb(4, bv("0011"))
        zeta = BitMatrix.from_string("0100/1000/0010/0001")
        g = dixon_conjugator(t, tb, zeta)
        assert {t.tau(v).conj(g).images for v in range(16)} == tb.elements

    def test_between_two_tb_groups(self):
        a = build_Tb(4, bv("0001"))
        b = build_Tb(4, bv("0010"))
        g = dixon_conjugator(a, b, BitMatrix.identity(4))
        assert {a.tau(v).conj(g).images for v in range(16)} == b.elements

    def test_non_isomorphism_detected(self):
        # images pi, eps, pi*eps are dependent in T_b: not an isomorphism
        t = translation_group(3)
        tb = build_Tb(3, bv("001"))
        zeta = BitMatrix.from_string("100/010/111")
        with pytest.raises(IsomorphismError):
            dixon_conjugator(t, tb, zeta)

    def test_singular_zeta_rejected(self):
        t = translation_group(3)
        with pytest.raises(IsomorphismError):
            dixon_conjugator(t, t, BitMatrix.from_string("100/100/001"))


class TestRegularGroupType:
    def test_tau_zero_is_identity(self):
        tb = build_Tb(3, bv("001"))
        assert tb.tau(0) == Perm.identity(3)

    def test_tau_sends_zero_to_label(self):
        tb = build_Tb(4, bv("0001"))
        assert all(tb.tau(v)(0) == v for v in range(16))

    def test_from_perms_rejects_wrong_count(self):
        with pytest.raises(ValueError):
            RegularGroup.from_perms(3, [Perm.identity(3)])

    def test_from_perms_rejects_non_involution(self):
        cyc = Perm(3, (1, 2, 3, 4, 5, 6, 7, 0))
        perms = [Perm.identity(3)] + [
            Perm(3, tuple((x + k) % 8 for x in range(8))) for k in range(1, 8)]
        with pytest.raises(ValueError):
            RegularGroup.from_perms(3, perms)
        assert cyc  # the 8-cycle group is regular but not elementary abelian

    def test_from_perms_rejects_non_closed(self):
        # mix elements of two different regular groups
        a = build_Tb(3, bv("001"))
        t = translation_group(3)
        perms = [t.tau(v) for v in range(4)] + [a.tau(v) for v in range(4, 8)]
        with pytest.raises(ValueError):
            RegularGroup.from_perms(3, perms, check=True)

    def test_json_round_trip(self):
        tb = build_Tb(3, bv("001"))
        again = RegularGroup.from_json(tb.to_json())
        assert again == tb
        t = translation_group(3)
        rng = random.Random(47)
        imgs = list(range(8))
        rng.shuffle(imgs)
        conj = t.conjugated_by(Perm(3, tuple(imgs)))
        assert RegularGroup.from_json(conj.to_json()) == conj

    def test_generator_labels_span(self):
        for g in enumerate_second_maximal(3):
            labels = g.generator_labels()
            assert len(labels) == 3
            span = {0}
            for v in labels:
                span |= {g.circ_int(s, v) for s in span}
            assert len(span) == 8
