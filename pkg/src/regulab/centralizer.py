"""Centralizers in Sym(V) of subgroups of the translation group T.

The centralizer of a subgroup M <= T of index 2^m is the wreath product
M wr Sym(2^m) acting imprimitively on the M-cosets: independent copies of M on
each coset (the base) extended by arbitrary permutations of the cosets (the
top).  Its order is 2^m! * 2^{2^m (n-m)}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .affine import perm_to_affinity
from .gf2core import Subspace
from .permgroup import Perm, PermGroup, generate_closure


@dataclass(frozen=True)
class WreathDescriptor:
    """Shape of the centralizer of sigma_M in Sym(V) for M = sigma_{base}."""

    base: Subspace
    top_degree: int
    predicted_order: int

    @property
    def m(self) -> int:
        return self.top_degree.bit_length() - 1


def centralizer_descriptor(m_subspace: Subspace, n: int) -> WreathDescriptor:
    """Descriptor for C_{Sym(V)}(sigma_M), M supported on the given subspace."""
    if m_subspace.n != n:
        raise ValueError(f"subspace lives in dimension {m_subspace.n}, not {n}")
    m = n - m_subspace.dim
    top = 1 << m
    order = math.factorial(top) * (1 << (top * (n - m)))
    return WreathDescriptor(m_subspace, top, order)


def _reduce_int(m_subspace: Subspace, x: int) -> int:
    """Canonical coset representative of the point x modulo M."""
    for r in m_subspace.basis:
        if x & (1 << (r.bits.bit_length() - 1)):
            x ^= r.bits
    return x


def _coset_reps(m_subspace: Subspace, n: int) -> list[int]:
    """Coset representatives of M in V, in increasing order (each is the
    canonical reduction, which is also the coset minimum)."""
    seen = set()
    out = []
    for x in range(1 << n):
        red = _reduce_int(m_subspace, x)
        if red not in seen:
            seen.add(red)
            out.append(red)
    return out


def centralizer_generators(m_subspace: Subspace, n: int) -> list[Perm]:
    """Concrete wreath generators of C_{Sym(V)}(sigma_M).

    Base: for every M-coset and every basis vector w of M, the permutation
    translating that coset alone by w.  Top: the swap of the first two cosets
    and the full cycle of all cosets, moving points by XOR with the difference
    of representatives.  Cosets are ordered by minimal representative.
    """
    if m_subspace.n != n:
        raise ValueError(f"subspace lives in dimension {m_subspace.n}, not {n}")
    size = 1 << n
    reps = _coset_reps(m_subspace, n)

    gens: list[Perm] = []
    for rep in reps:
        for w in m_subspace.basis:
            images = list(range(size))
            for x in range(size):
                if _reduce_int(m_subspace, x) == rep:
                    images[x] = x ^ w.bits
            gens.append(Perm(n, tuple(images)))

    def coset_perm(pi: dict[int, int]) -> Perm:
        images = []
        for x in range(size):
            rep = _reduce_int(m_subspace, x)
            images.append(x ^ rep ^ pi[rep])
        return Perm(n, tuple(images))

    if len(reps) > 1:
        swap = {r: r for r in reps}
        swap[reps[0]], swap[reps[1]] = reps[1], reps[0]
        gens.append(coset_perm(swap))
        cycle = {reps[i]: reps[(i + 1) % len(reps)] for i in range(len(reps))}
        gens.append(coset_perm(cycle))
    return gens


def centralizer_group(m_subspace: Subspace, n: int, budget: int | None = None) -> PermGroup:
    """The generated centralizer, fully enumerated (subject to the budget)."""
    return generate_closure(centralizer_generators(m_subspace, n), budget)


def verify_maximal_centralizer_affine(n: int, budget: int | None = None) -> list[dict]:
    """For every maximal M <= T: generate the centralizer and test that every
    element is affine.  Returns one status record per hyperplane."""
    from .gf2core import all_subspaces

    out = []
    for sub in all_subspaces(n, n - 1):
        group = centralizer_group(sub, n, budget)
        all_affine = all(perm_to_affinity(p) is not None for p in group)
        out.append({
            "subspace": sub.to_string(),
            "order": group.order,
            "expected_order": centralizer_descriptor(sub, n).predicted_order,
            "all_affine": all_affine,
        })
    return out
