"""Named theorem checks behind the `verify` command.

Each check pits a structural computation against an independent count,
formula, or brute-force search and returns a VerificationReport.  Checks are
registered with the dimensions they support; everything is deterministic
(randomized checks use a fixed seed).
"""

from __future__ import annotations

import functools
import random
import time
from typing import Callable

from . import affine, altdiff, centralizer, gf2core, oracle, permgroup, regular, sylow
from .affine import agl_group, agl_order, perm_to_affinity
from .gf2core import BitMatrix, BitVector, Subspace, all_flags, all_subspaces
from .oracle import VerificationReport
from .permgroup import Perm, ScaleError, full_symmetric_group, normalizer_in
from .regular import (
    RegularGroup,
    build_with_support,
    count_second_maximal,
    dixon_conjugator,
    enumerate_second_maximal,
    translation_group,
    weak_keys,
)
from .sylow import (
    all_sylows,
    canonical_sylow,
    count_flag_normalized,
    count_s_n,
    count_sylows,
    enumerate_flag_normalized,
    invariant_flag_of,
    is_normal_in_sylow,
    outer_normalizer_element,
    t_sigma,
)

SEED = 20231115


@functools.lru_cache(maxsize=None)
def sylow_normality_scan(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For every Sylow subgroup, the indices of the second-maximal groups
    normal in it; and for every group, in how many Sylow subgroups it is
    normal.  Shared by several checks and by the acceptance suite."""
    groups = enumerate_second_maximal(n)
    per_sylow = []
    per_group = [0] * len(groups)
    for s in all_sylows(n):
        normals = [i for i, g in enumerate(groups) if is_normal_in_sylow(g, s)]
        if len(normals) != 1:
            per_sylow.append(-1)
            continue
        per_sylow.append(normals[0])
        per_group[normals[0]] += 1
    return tuple(per_sylow), tuple(per_group)


def check_second_maximal_count(n: int) -> VerificationReport:
    started = time.perf_counter()
    groups = enumerate_second_maximal(n)
    keys = {(g.support.to_string(), str(g.b)) for g in groups}
    observed = {"count": len(groups), "distinct_keys": len(keys)}
    claim = {"count": count_second_maximal(n), "distinct_keys": count_second_maximal(n)}
    return VerificationReport.evaluate("second-maximal-count", n, claim, observed, started)


def check_second_maximal_oracle_agreement(n: int) -> VerificationReport:
    started = time.perf_counter()
    structural = {g.elements for g in enumerate_second_maximal(n)}
    found = oracle.brute_enumerate_regular_ea(agl_group(n), n - 2)
    observed = {"oracle_count": len(found),
                "sets_equal": {g.tables for g in found} == structural}
    if n == 3:
        sym_found = oracle.brute_enumerate_regular_ea(full_symmetric_group(3), 1)
        observed["sym_ambient_equal"] = {g.tables for g in sym_found} == structural
    claim = {"oracle_count": count_second_maximal(n), "sets_equal": True}
    if n == 3:
        claim["sym_ambient_equal"] = True
    return VerificationReport.evaluate("second-maximal-oracle-agreement", n, claim, observed, started)


def check_no_maximal_intersection(n: int) -> VerificationReport:
    started = time.perf_counter()
    sym_hits = len(oracle.brute_enumerate_regular_ea(full_symmetric_group(3), n - 1))
    agl_hits = len(oracle.brute_enumerate_regular_ea(agl_group(n), n - 1))
    hyper = next(all_subspaces(n, n - 1))
    anyvec = hyper.basis[0]
    try:
        build_with_support(n, hyper, anyvec)
        rejected = False
    except ValueError:
        rejected = True
    try:
        enumerate_flag_normalized(n, n - 1)
        d_rejected = False
    except ValueError:
        d_rejected = True
    observed = {"sym_groups": sym_hits, "agl_groups": agl_hits,
                "build_rejected": rejected, "depth_rejected": d_rejected}
    claim = {"sym_groups": 0, "agl_groups": 0,
             "build_rejected": True, "depth_rejected": True}
    return VerificationReport.evaluate("no-maximal-intersection", n, claim, observed, started)


def check_second_maximal_affine(n: int) -> VerificationReport:
    started = time.perf_counter()
    groups = enumerate_second_maximal(n)
    all_affine = all(
        perm_to_affinity(Perm(n, g.tau_table(v))) is not None
        for g in groups for v in range(1 << n)
    )
    return VerificationReport.evaluate(
        "second-maximal-affine", n, {"all_affine": True}, {"all_affine": all_affine}, started)


def check_weak_keys_match(n: int) -> VerificationReport:
    started = time.perf_counter()
    groups = list(enumerate_second_maximal(n)) + [translation_group(n)]
    agree = all(weak_keys(g).space == g.support for g in groups)
    dims = {g.support.dim for g in enumerate_second_maximal(n)}
    observed = {"scan_equals_intersection": agree, "support_dims": sorted(dims)}
    claim = {"scan_equals_intersection": True, "support_dims": [n - 2]}
    return VerificationReport.evaluate("weak-keys-match", n, claim, observed, started)


def check_circ_axioms(n: int) -> VerificationReport:
    """(V, circ) is an elementary abelian 2-group: full associativity and
    commutativity scans at n <= 4, sampled triples at n = 5."""
    started = time.perf_counter()
    size = 1 << n
    rng = random.Random(SEED)
    groups = enumerate_second_maximal(n)
    per_group = max(1, 100_000 // len(groups))  # ~1e5 sampled triples in total at n = 5
    ok = True
    for g in groups:
        if n <= 4:
            triples = ((x, y, z) for x in range(size) for y in range(size) for z in range(size))
            pairs = ((x, y) for x in range(size) for y in range(size))
        else:
            triples = ((rng.randrange(size), rng.randrange(size), rng.randrange(size))
                       for _ in range(per_group))
            pairs = ((rng.randrange(size), rng.randrange(size)) for _ in range(per_group))
        for x, y, z in triples:
            if g.circ_int(g.circ_int(x, y), z) != g.circ_int(x, g.circ_int(y, z)):
                ok = False
                break
        ok = ok and all(g.circ_int(x, y) == g.circ_int(y, x) for x, y in pairs)
        ok = ok and all(g.circ_int(x, x) == 0 and g.circ_int(0, x) == x for x in range(size))
        if not ok:
            break
    return VerificationReport.evaluate(
        "circ-axioms", n, {"elementary_abelian": True}, {"elementary_abelian": ok}, started)


def _random_invertible(n: int, rng: random.Random) -> BitMatrix:
    while True:
        rows = [BitVector(n, rng.randrange(1, 1 << n)) for _ in range(n)]
        m = BitMatrix(tuple(rows))
        if m.is_invertible():
            return m


def dixon_random_triples(n: int, count: int, rng: random.Random) -> list[tuple]:
    """(H, K, zeta) triples with H = T and K drawn from {T} + second-maximal
    groups; zeta is resampled until it induces an isomorphism."""
    pool = [translation_group(n)] + list(enumerate_second_maximal(n))
    out = []
    while len(out) < count:
        k = pool[rng.randrange(len(pool))]
        zeta = _random_invertible(n, rng)
        try:
            g = dixon_conjugator(translation_group(n), k, zeta)
        except regular.IsomorphismError:
            continue
        out.append((translation_group(n), k, zeta, g))
    return out


def check_dixon_identity(n: int, count: int = 25) -> VerificationReport:
    """H^g = K elementwise and (sigma_v)^g = tau_{(0 g^{-1} + v) g} for all v."""
    started = time.perf_counter()
    rng = random.Random(SEED + n)
    ok_conj = ok_ident = True
    for h, k, _, g in dixon_random_triples(n, count, rng):
        ginv = g.inverse()
        zero_pre = ginv(0)
        for v in range(1 << n):
            conj = h.tau(v).conj(g)
            if conj.images not in k.elements:
                ok_conj = False
            if conj != k.tau(g(zero_pre ^ v)):
                ok_ident = False
        if not (ok_conj and ok_ident):
            break
    observed = {"conjugates_match": ok_conj, "labelling_identity": ok_ident}
    claim = {"conjugates_match": True, "labelling_identity": True}
    return VerificationReport.evaluate("dixon-identity", n, claim, observed, started)


def check_translation_normalizes(n: int) -> VerificationReport:
    """T normalizes every second-maximal conjugate of itself."""
    started = time.perf_counter()
    t = translation_group(n)
    ok = True
    for g in enumerate_second_maximal(n):
        member = g.elements
        for i in range(1, n + 1):
            sig = t.tau(BitVector.e(i, n).bits)
            if any(Perm(n, g.tau_table(v)).conj(sig).images not in member
                   for v in g.generator_labels()):
                ok = False
    return VerificationReport.evaluate(
        "translation-normalizes", n, {"normalized_by_T": True}, {"normalized_by_T": ok}, started)


def check_centralizer_orders(n: int) -> VerificationReport:
    """Generated wreath centralizers match 2^m! * 2^{2^m (n-m)}; the full
    symmetric case m = n stays behind the closure budget guard."""
    started = time.perf_counter()
    observed_orders = {}
    claim_orders = {}
    for m in range(n + 1):
        dim = n - m
        sub = next(all_subspaces(n, dim))
        desc = centralizer.centralizer_descriptor(sub, n)
        claim_orders[m] = desc.predicted_order if desc.predicted_order <= permgroup.enum_budget() else "guarded"
        try:
            group = centralizer.centralizer_group(sub, n)
            observed_orders[m] = group.order
        except ScaleError:
            observed_orders[m] = "guarded"
    return VerificationReport.evaluate(
        "centralizer-orders", n, claim_orders, observed_orders, started)


def check_centralizer_affine_maximal(n: int) -> VerificationReport:
    """For every maximal M <= T the centralizer is affine of order 2^{2n-1}."""
    started = time.perf_counter()
    records = centralizer.verify_maximal_centralizer_affine(n)
    observed = {
        "hyperplanes": len(records),
        "all_affine": all(rec["all_affine"] for rec in records),
        "orders_ok": all(rec["order"] == (1 << (2 * n - 1)) for rec in records),
    }
    claim = {"hyperplanes": (1 << n) - 1, "all_affine": True, "orders_ok": True}
    return VerificationReport.evaluate("centralizer-affine-maximal", n, claim, observed, started)


def check_centralizer_brute_match(n: int) -> VerificationReport:
    """Generated centralizers equal the ones filtered out of the fully
    enumerated Sym(2^3), for every support dimension that fits the budget."""
    started = time.perf_counter()
    sym = full_symmetric_group(3)
    ok = True
    for dim in (3, 2, 1):
        sub = next(all_subspaces(n, dim))
        sigma_group = permgroup.PermGroup.from_elements(
            n, [regular.sigma(v).to_perm() for v in sub.vectors()],
            generators=[regular.sigma(v).to_perm() for v in sub.basis])
        brute = permgroup.centralizer_in(sym, sigma_group)
        generated = centralizer.centralizer_group(sub, n)
        ok = ok and brute.tables == generated.tables
    return VerificationReport.evaluate(
        "centralizer-brute-match", n, {"sets_equal": True}, {"sets_equal": ok}, started)


def check_coset_involutions_affine(n: int) -> VerificationReport:
    """Every fixed-point-free involution centralizing sigma_W is affine when
    dim W = 1 at n = 3; with the fixes-none condition the same holds inside
    the generated centralizer for dim W = n - 2 at n = 4."""
    started = time.perf_counter()
    ok = True
    count = 0
    if n == 3:
        for sub in all_subspaces(3, 1):
            phis = oracle.enumerate_fpf_involutions_centralizing(sub, 3, "any")
            count += len(phis)
            ok = ok and all(perm_to_affinity(p) is not None for p in phis)
            ok = ok and any(p.images == tuple(x ^ sub.basis[0].bits for x in range(8)) for p in phis)
    else:
        for sub in list(all_subspaces(n, n - 2))[:3]:
            phis = oracle.enumerate_fpf_involutions_centralizing(sub, n, "fixes-none")
            count += len(phis)
            ok = ok and all(perm_to_affinity(p) is not None for p in phis)
    observed = {"all_affine": ok, "nonempty": count > 0}
    claim = {"all_affine": True, "nonempty": True}
    return VerificationReport.evaluate("coset-involutions-affine", n, claim, observed, started)


def check_unique_normal_tsigma(n: int) -> VerificationReport:
    """Every Sylow subgroup normalizes exactly one second-maximal group, equal
    to its T_Sigma."""
    started = time.perf_counter()
    per_sylow, _ = sylow_normality_scan(n)
    groups = enumerate_second_maximal(n)
    sylows = all_sylows(n)
    unique_ok = all(i >= 0 for i in per_sylow)
    tsigma_ok = all(groups[per_sylow[j]] == t_sigma(s) for j, s in enumerate(sylows))
    observed = {"sylows": len(sylows), "unique_normal": unique_ok, "equals_t_sigma": tsigma_ok}
    claim = {"sylows": count_sylows(n), "unique_normal": True, "equals_t_sigma": True}
    return VerificationReport.evaluate("unique-normal-tsigma", n, claim, observed, started)


def check_flag_sylow_bijection(n: int) -> VerificationReport:
    """Distinct flags give distinct Sylow subgroups: the invariant flag is
    recovered from each subgroup's generators alone."""
    started = time.perf_counter()
    flags = all_flags(n)
    ok = all(invariant_flag_of(s) == s.flag for s in all_sylows(n))
    observed = {"flags": len(flags), "recovered": ok}
    claim = {"flags": count_sylows(n), "recovered": True}
    return VerificationReport.evaluate("flag-sylow-bijection", n, claim, observed, started)


def check_sylow_count(n: int) -> VerificationReport:
    started = time.perf_counter()
    expected = {3: 21, 4: 315, 5: 9765}[n]
    observed = {"formula": count_sylows(n)}
    claim = {"formula": expected}
    if n <= 4:
        observed["flag_enumeration"] = len(all_flags(n))
        claim["flag_enumeration"] = expected
    return VerificationReport.evaluate("sylow-count", n, claim, observed, started)


def check_s_n_count(n: int) -> VerificationReport:
    started = time.perf_counter()
    expected = {3: 3, 4: 3, 5: 9}[n]
    observed = {"formula": count_s_n(n),
                "product_identity": count_s_n(n) * count_second_maximal(n) == count_sylows(n)}
    claim = {"formula": expected, "product_identity": True}
    if n <= 4:
        _, per_group = sylow_normality_scan(n)
        observed["direct_counts"] = sorted(set(per_group))
        claim["direct_counts"] = [expected]
    return VerificationReport.evaluate("s-n-count", n, claim, observed, started)


def check_flag_normalized_count(n: int) -> VerificationReport:
    """Depth-d block enumerations match 2^{d C(n-d,2)}; every member is inside
    the canonical Sylow subgroup, contains sigma_{V_d}, and is normalized by T;
    the normal ones are exactly T and T_Sigma."""
    started = time.perf_counter()
    s = canonical_sylow(n)
    t = translation_group(n)
    flag = s.flag
    counts = {}
    props_ok = True
    normal_sets = set()
    for d in list(range(1, n - 1)) + [n]:
        groups = enumerate_flag_normalized(n, d)
        counts[d] = len(groups)
        v_d = flag.subspace(d)
        for g in groups:
            props_ok = props_ok and g.support.contains_subspace(v_d)
            props_ok = props_ok and all(
                s.contains_perm(Perm(n, g.tau_table(v))) for v in g.generator_labels())
            member = g.elements
            props_ok = props_ok and all(
                Perm(n, g.tau_table(v)).conj(t.tau(BitVector.e(i, n).bits)).images in member
                for i in range(1, n + 1) for v in g.generator_labels())
            if is_normal_in_sylow(g, s):
                normal_sets.add(g.elements)
    expected_counts = {d: count_flag_normalized(n, d) for d in list(range(1, n - 1)) + [n]}
    t_sig = t_sigma(s)
    observed = {
        "counts": counts,
        "membership_and_normalization": props_ok,
        "normal_ones": sorted(normal_sets) == sorted({t.elements, t_sig.elements}),
    }
    claim = {"counts": expected_counts, "membership_and_normalization": True, "normal_ones": True}
    return VerificationReport.evaluate("flag-normalized-count", n, claim, observed, started)


def check_normal_regular_classification(n: int) -> VerificationReport:
    """normal_regular_subgroups(Sigma) is exactly {T, T_Sigma}, for the
    canonical Sylow subgroup and a non-canonical one."""
    started = time.perf_counter()
    t = translation_group(n)
    ok = True
    for s in (canonical_sylow(n), all_sylows(n)[-1]):
        found = sylow.normal_regular_subgroups(s)
        expect = {t.elements, t_sigma(s).elements}
        ok = ok and {g.elements for g in found} == expect and len(found) == 2
    return VerificationReport.evaluate(
        "normal-regular-classification", n, {"exactly_T_and_TSigma": True},
        {"exactly_T_and_TSigma": ok}, started)


def check_normalizer_index_2(n: int) -> VerificationReport:
    """|N_{Sym(V)}(Sigma)| = 2 |Sigma| at n = 3, with the outer coset swapping
    T and T_Sigma, squaring into Sigma, and lying outside AGL(V)."""
    started = time.perf_counter()
    s = canonical_sylow(3)
    sigma_group = s.as_permgroup()
    normalizer = oracle.brute_normalizer_sym(sigma_group, 3)
    outer = [t for t in normalizer.sorted_tables() if t not in sigma_group.tables]
    t_group = translation_group(3)
    t_sig = t_sigma(s)
    swap_ok = square_ok = nonaffine_ok = True
    for tab in outer:
        g = Perm(3, tab)
        swap_ok = swap_ok and t_group.conjugated_by(g) == t_sig
        square_ok = square_ok and (g * g).images in sigma_group.tables
        nonaffine_ok = nonaffine_ok and perm_to_affinity(g) is None
    constructed = outer_normalizer_element(s)
    observed = {
        "normalizer_order": normalizer.order,
        "outer_coset_size": len(outer),
        "outer_swaps_T_TSigma": swap_ok,
        "outer_squares_into_sigma": square_ok,
        "outer_not_affine": nonaffine_ok,
        "constructed_element_in_normalizer": constructed.images in normalizer.tables,
    }
    claim = {
        "normalizer_order": 128,
        "outer_coset_size": 64,
        "outer_swaps_T_TSigma": True,
        "outer_squares_into_sigma": True,
        "outer_not_affine": True,
        "constructed_element_in_normalizer": True,
    }
    return VerificationReport.evaluate("normalizer-index-2", n, claim, observed, started)


def check_outer_swap(n: int) -> VerificationReport:
    """The constructed outer element normalizes Sigma, swaps T and T_Sigma,
    squares to the identity, and is not affine (canonical and one conjugate)."""
    started = time.perf_counter()
    t = translation_group(n)
    ok = True
    for s in (canonical_sylow(n), all_sylows(n)[-1]):
        g = outer_normalizer_element(s)
        ok = ok and perm_to_affinity(g) is None
        ok = ok and (g * g).is_identity()
        t_sig = t_sigma(s)
        ok = ok and t.conjugated_by(g) == t_sig
        ok = ok and t_sig.conjugated_by(g) == t
        ok = ok and all(s.contains_perm(gen.conj(g)) for gen in s.generator_perms())
    return VerificationReport.evaluate(
        "outer-swap", n, {"all_properties": True}, {"all_properties": ok}, started)


def check_self_normalizing_agl(n: int) -> VerificationReport:
    started = time.perf_counter()
    s = canonical_sylow(3)
    sigma_group = s.as_permgroup()
    norm = normalizer_in(agl_group(3), sigma_group)
    observed = {"order": norm.order, "equals_sigma": norm.tables == sigma_group.tables}
    claim = {"order": 64, "equals_sigma": True}
    return VerificationReport.evaluate("self-normalizing-agl", n, claim, observed, started)


def check_agl_in_alt(n: int) -> VerificationReport:
    """Translations and unitriangular elementaries are even permutations."""
    started = time.perf_counter()
    gens = [affine.Affinity.translation_by(BitVector.e(i, n)).to_perm() for i in range(1, n + 1)]
    gens += [affine.Affinity.linear_map(u).to_perm() for u in sylow.unitriangular_generators(n)]
    ok = all(g.is_even() for g in gens)
    return VerificationReport.evaluate(
        "agl-in-alt", n, {"all_even": True}, {"all_even": ok}, started)


def check_divisibility_criterion(n: int) -> VerificationReport:
    """|T cap T^g| = 2^{n-2} iff the full 2-part of |AGL| divides
    |AGL cap AGL^g|, for sampled g outside AGL (n = 3, exact counting)."""
    started = time.perf_counter()
    agl = agl_group(3)
    two_part = 64
    t = translation_group(3)
    rng = random.Random(SEED)
    samples: list[Perm] = []
    for _, _, _, g in dixon_random_triples(3, 4, rng):
        if perm_to_affinity(g) is None:
            samples.append(g)
    sym_tables = sorted(full_symmetric_group(3).tables)
    while len(samples) < 8:
        tab = sym_tables[rng.randrange(len(sym_tables))]
        g = Perm(3, tab)
        if perm_to_affinity(g) is None:
            samples.append(g)
    equiv_ok = True
    seen_both = set()
    for g in samples:
        conj = t.conjugated_by(g)
        second_max = conj.support.dim == 1
        ginv = g.inverse()
        size = sum(1 for a in agl.tables if permgroup._conj_table(a, ginv.images) in agl.tables)
        divisible = size % two_part == 0
        equiv_ok = equiv_ok and (second_max == divisible)
        seen_both.add(second_max)
    observed = {"equivalence": equiv_ok, "both_cases_sampled": seen_both == {True, False}}
    claim = {"equivalence": True, "both_cases_sampled": True}
    return VerificationReport.evaluate("divisibility-criterion", n, claim, observed, started)


def check_transitive_conjugation(n: int) -> VerificationReport:
    """The AGL-conjugation orbit of the canonical T_Sigma covers all t_n
    second-maximal groups."""
    started = time.perf_counter()
    start = t_sigma(canonical_sylow(n))
    gens = [p.images for p in affine.agl_generators(n)]
    orbit = {start.elements}
    queue = [start.elements]
    while queue:
        cur = queue.pop()
        for g in gens:
            conj = frozenset(permgroup._conj_table(t, g) for t in cur)
            if conj not in orbit:
                orbit.add(conj)
                queue.append(conj)
    structural = {g.elements for g in enumerate_second_maximal(n)}
    observed = {"orbit_size": len(orbit), "covers_all": orbit == structural}
    claim = {"orbit_size": count_second_maximal(n), "covers_all": True}
    return VerificationReport.evaluate("transitive-conjugation", n, claim, observed, started)


def check_unique_normal_lattice(n: int) -> VerificationReport:
    return oracle.verify_unique_normal_subgroup_lemma(n)


def check_ddt_affine_uniformity(n: int) -> VerificationReport:
    """An XOR-affine S-box is maximally uniform under XOR, and its conjugate
    into the alternative frame is maximally uniform under circ."""
    started = time.perf_counter()
    rng = random.Random(SEED + n)
    group = enumerate_second_maximal(n)[0]
    zeta = _random_invertible(n, rng)
    g = dixon_conjugator(translation_group(n), group, zeta)
    aff = affine.Affinity(_random_invertible(n, rng), BitVector(n, rng.randrange(1 << n)))
    sbox_plain = altdiff.SBox.from_perm(aff.to_perm())
    sbox_conj = altdiff.SBox.from_perm(aff.to_perm().conj(g))
    size = 1 << n
    observed = {
        "xor_uniformity": altdiff.differential_uniformity(sbox_plain),
        "circ_uniformity": altdiff.differential_uniformity(sbox_conj, group.circ_op()),
        "row_sums_ok": all(sum(row) == size for row in altdiff.ddt(sbox_conj, group.circ_op())),
    }
    claim = {"xor_uniformity": size, "circ_uniformity": size, "row_sums_ok": True}
    return VerificationReport.evaluate("ddt-affine-uniformity", n, claim, observed, started)


CHECKS: dict[str, tuple[tuple[int, ...], Callable[[int], VerificationReport]]] = {
    "second-maximal-count": ((3, 4, 5), check_second_maximal_count),
    "second-maximal-oracle-agreement": ((3, 4), check_second_maximal_oracle_agreement),
    "no-maximal-intersection": ((3,), check_no_maximal_intersection),
    "second-maximal-affine": ((3, 4), check_second_maximal_affine),
    "weak-keys-match": ((3, 4), check_weak_keys_match),
    "circ-axioms": ((3, 4, 5), check_circ_axioms),
    "dixon-identity": ((3, 4, 5), check_dixon_identity),
    "translation-normalizes": ((3, 4), check_translation_normalizes),
    "centralizer-orders": ((3, 4), check_centralizer_orders),
    "centralizer-affine-maximal": ((3, 4), check_centralizer_affine_maximal),
    "centralizer-brute-match": ((3,), check_centralizer_brute_match),
    "coset-involutions-affine": ((3, 4), check_coset_involutions_affine),
    "unique-normal-tsigma": ((3, 4), check_unique_normal_tsigma),
    "flag-sylow-bijection": ((3, 4), check_flag_sylow_bijection),
    "sylow-count": ((3, 4, 5), check_sylow_count),
    "s-n-count": ((3, 4, 5), check_s_n_count),
    "flag-normalized-count": ((3, 4), check_flag_normalized_count),
    "normal-regular-classification": ((3, 4), check_normal_regular_classification),
    "normalizer-index-2": ((3,), check_normalizer_index_2),
    "outer-swap": ((3, 4), check_outer_swap),
    "self-normalizing-agl": ((3,), check_self_normalizing_agl),
    "agl-in-alt": ((3, 4, 5, 6), check_agl_in_alt),
    "divisibility-criterion": ((3,), check_divisibility_criterion),
    "transitive-conjugation": ((3, 4), check_transitive_conjugation),
    "unique-normal-lattice": ((3,), check_unique_normal_lattice),
    "ddt-affine-uniformity": ((3, 4), check_ddt_affine_uniformity),
}


def run_check(theorem_id: str, n: int) -> VerificationReport:
    if theorem_id not in CHECKS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(sorted(CHECKS))}")
    supported, fn = CHECKS[theorem_id]
    if n not in supported:
        raise ValueError(f"{theorem_id} supports n in {supported}, got {n}")
    return fn(n)


def run_all(n: int) -> list[VerificationReport]:
    """Every check that supports the given dimension, in registry order."""
    return [fn(n) for _, (supported, fn) in sorted(CHECKS.items()) if n in supported]
