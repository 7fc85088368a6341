"""regulab: regular elementary abelian subgroups of Sym(F_2^n), the
alternative operations they induce, their weak keys, and the Sylow 2-subgroup
structure of the affine group AGL(n, 2), with independent brute-force
verification of every counting theorem at desk scale (n = 3..5).
"""

from .gf2core import (
    BitMatrix,
    BitVector,
    Flag,
    Subspace,
    all_flags,
    all_subspaces,
    complete_flag,
    count_flags,
    gaussian_binomial,
    rref_basis,
)
from .permgroup import (
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
from .affine import (
    Affinity,
    AugmentedMatrix,
    agl_group,
    agl_order,
    compose_affinity,
    embed_augmented,
    perm_to_affinity,
)
from .regular import (
    CircOp,
    IsomorphismError,
    RegularGroup,
    WeakKeySpace,
    build_Tb,
    build_with_support,
    circ,
    count_second_maximal,
    dixon_conjugator,
    enumerate_second_maximal,
    intersection_with_T,
    sigma,
    translation_group,
    weak_keys,
)
from .sylow import (
    BMapFamily,
    SylowAGL,
    all_sylows,
    canonical_sylow,
    count_flag_normalized,
    count_s_n,
    count_sylows,
    enumerate_flag_normalized,
    is_normal_in_sylow,
    normal_regular_subgroups,
    outer_normalizer_element,
    sylow_from_flag,
    t_sigma,
)
from .centralizer import (
    WreathDescriptor,
    centralizer_descriptor,
    centralizer_generators,
    centralizer_group,
    verify_maximal_centralizer_affine,
)
from .oracle import (
    VerificationReport,
    brute_enumerate_regular_ea,
    brute_normalizer_sym,
    enumerate_fpf_involutions_centralizing,
    verify_unique_normal_subgroup_lemma,
)
from .altdiff import SBox, ddt, differential_uniformity

__version__ = "0.1.0"
