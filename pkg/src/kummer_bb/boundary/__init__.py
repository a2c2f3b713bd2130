from .graph import (
    BoundaryCurve,
    BoundaryGraph,
    CurveBound,
    OrbitLabel,
    build_boundary_graph,
    build_boundary_graph_L2,
    classify_rank2_L2,
    curve_count_bounds,
    families_on_curve,
    incidence,
)
from .groups import (
    CurveGroup,
    Row,
    coset_orbit,
    count_cusps,
    curve_group,
    gamma1_index_formula,
    random_gamma1,
)
from .normal_form import (
    NormalForm,
    adapted_basis,
    blocks,
    gauss_reduce,
    in_gamma1,
    lift_parabolic,
    project_to_E,
    rank2_normal_form,
    rank2_representatives,
    rank2_type,
)
from .points import (
    FAMILY_LABELS,
    BoundaryPoint,
    boundary_points,
    classify_isotropic_vector,
    family_divisor,
    lattice_prime,
)

__all__ = [
    "FAMILY_LABELS",
    "BoundaryPoint",
    "family_divisor",
    "lattice_prime",
    "classify_isotropic_vector",
    "boundary_points",
    "NormalForm",
    "rank2_type",
    "adapted_basis",
    "blocks",
    "gauss_reduce",
    "rank2_normal_form",
    "rank2_representatives",
    "in_gamma1",
    "lift_parabolic",
    "project_to_E",
    "CurveGroup",
    "Row",
    "coset_orbit",
    "count_cusps",
    "curve_group",
    "gamma1_index_formula",
    "random_gamma1",
    "BoundaryCurve",
    "BoundaryGraph",
    "CurveBound",
    "OrbitLabel",
    "incidence",
    "families_on_curve",
    "curve_count_bounds",
    "build_boundary_graph",
    "build_boundary_graph_L2",
    "classify_rank2_L2",
]
