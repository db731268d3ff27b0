"""Finite-algebra engine for Schreier extensions of groups by loops."""

from .core import (
    LoopError,
    LoopTable,
    NoIdentityError,
    NotAGroupError,
    NotASubloopError,
    NotLatinError,
    NotNormalError,
    OrderTooLargeError,
    automorphisms,
    center,
    commutant,
    commutator_subgroup,
    factor_loop,
    find_isomorphism,
    inner_automorphism,
    inner_automorphisms,
    is_normal,
    is_subloop,
    left_transversals,
    loop_properties,
    middle_inner,
    nucleus,
    right_inner,
    subloop_closure,
    validate_loop,
)
from .extensions import (
    BadFamilyError,
    BadPsiError,
    InvalidDataError,
    SchreierData,
    bruck_extension,
    classify_schreier,
    group_conditions,
    psi_extension,
    schreier_divide,
    schreier_loop,
    trivial_data,
)
from .decomposition import (
    BadShiftError,
    DataPair,
    Decomposition,
    InvalidPairError,
    NotAnAutomorphismError,
    NotMiddleRightNuclearError,
    all_t_inner,
    canonical_pair,
    decompose,
    has_automorphism_free_decomposition,
    has_factor_free_decomposition,
    has_schreier_decomposition,
    outer_map,
    precompose_automorphism,
    schreier_data_from_pair,
    shift_transversal,
    t_factorization_check,
    t_is_homomorphism,
    t_restriction,
)
from .equivalence import (
    CarrierMismatchError,
    equivalence_oracle,
    equivalent,
    wide_equivalent,
)
from .gallery import (
    NotAHomomorphismError,
    NotRightBolError,
    enumerate_loops,
    example_bol,
    example_commutator,
    example_conjugation,
    named_group,
    right_inner_group,
)

__version__ = "0.1.0"
