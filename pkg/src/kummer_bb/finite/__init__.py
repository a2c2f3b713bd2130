from .class_number import (
    BinaryForm,
    class_number,
    class_number_by_reduction,
    class_number_from_conductor,
    fundamental_part,
    reduce_form,
    reduced_forms,
)
from .fp_space import (
    FpQuadraticSpace,
    Sign,
    brute_force_orthogonal_order,
    classify_fp_space,
    finite_orthogonal_order,
    square_class,
    standard_space,
)
from .module import (
    DiscElement,
    FiniteQuadraticModule,
    apply_map,
    automorphisms,
    b_value,
    element_order,
    elements_with,
    find_isomorphism,
    generated_subgroup,
    isotropic_elements,
    mod_one,
    mod_two,
    order_two_profile,
    q_value,
)

__all__ = [
    "FiniteQuadraticModule",
    "DiscElement",
    "mod_one",
    "mod_two",
    "element_order",
    "q_value",
    "b_value",
    "isotropic_elements",
    "order_two_profile",
    "elements_with",
    "find_isomorphism",
    "generated_subgroup",
    "automorphisms",
    "apply_map",
    "FpQuadraticSpace",
    "Sign",
    "square_class",
    "classify_fp_space",
    "finite_orthogonal_order",
    "standard_space",
    "brute_force_orthogonal_order",
    "BinaryForm",
    "reduced_forms",
    "class_number",
    "reduce_form",
    "class_number_by_reduction",
    "fundamental_part",
    "class_number_from_conductor",
]
