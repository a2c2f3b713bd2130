from .extension import embed_in_L2, extend_isometry_to_L2, stabilised_hyperplane_vector
from .hyperplane import (
    Reduction,
    check_prime,
    compose,
    hyperplane_equivalence,
    index_bound,
    index_bound_refined,
    on_line_mod_p,
    reduce_vector_mod_p,
)
from .isometry import (
    Isometry,
    ReflectionWord,
    decompose_reflections,
    discriminant_action,
    in_gamma,
    in_Oplus,
    in_stable,
    lattice_digest,
    negation,
    orientation_sign,
    reflection,
    spinor_norm,
)
from .transvection import (
    HYPERBOLIC_MARKS,
    eichler_invariant,
    eichler_transvection,
    o2u_from_sl2_pair,
    random_primitive_vector,
    random_transvection,
    random_transvection_data,
    random_transvection_word,
    same_orbit_invariant,
    sl2_to_2u,
)

__all__ = [
    "Isometry",
    "ReflectionWord",
    "reflection",
    "decompose_reflections",
    "spinor_norm",
    "orientation_sign",
    "discriminant_action",
    "in_stable",
    "in_Oplus",
    "in_gamma",
    "negation",
    "lattice_digest",
    "HYPERBOLIC_MARKS",
    "eichler_transvection",
    "sl2_to_2u",
    "o2u_from_sl2_pair",
    "eichler_invariant",
    "same_orbit_invariant",
    "random_transvection",
    "random_transvection_data",
    "random_transvection_word",
    "random_primitive_vector",
    "embed_in_L2",
    "extend_isometry_to_L2",
    "stabilised_hyperplane_vector",
    "Reduction",
    "check_prime",
    "compose",
    "on_line_mod_p",
    "reduce_vector_mod_p",
    "hyperplane_equivalence",
    "index_bound",
    "index_bound_refined",
]
