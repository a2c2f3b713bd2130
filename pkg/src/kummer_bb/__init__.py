from .boundary import (
    BoundaryCurve,
    BoundaryGraph,
    BoundaryPoint,
    CurveGroup,
    NormalForm,
    boundary_points,
    build_boundary_graph,
    build_boundary_graph_L2,
    classify_isotropic_vector,
    classify_rank2_L2,
    curve_count_bounds,
    curve_group,
    incidence,
    lift_parabolic,
    rank2_normal_form,
    rank2_representatives,
    rank2_type,
)
from .config import Ambient, OracleOptions, OutputFormat, Presentation, RunConfig
from .errors import (
    BudgetExceededError,
    DegenerateError,
    InvalidArgumentError,
    InvariantViolationError,
    KummerBBError,
    MissingMarkError,
    NonIntegralError,
    NotIsotropicError,
    NotPrimitiveError,
    ReductionError,
)
from .finite import (
    DiscElement,
    FiniteQuadraticModule,
    class_number,
    classify_fp_space,
    finite_orthogonal_order,
    isotropic_elements,
)
from .isometry import (
    Isometry,
    eichler_transvection,
    extend_isometry_to_L2,
    hyperplane_equivalence,
    in_gamma,
    in_Oplus,
    in_stable,
    index_bound,
    reduce_vector_mod_p,
    spinor_norm,
)
from .lattice import (
    Lattice,
    LatticeVector,
    Sublattice,
    discriminant,
    divisor,
    h_group,
    make_L2d,
    make_M,
    split_polarisation_complement,
    star,
)
from .linalg import smith_normal_form

__all__ = [
    "Lattice",
    "LatticeVector",
    "Sublattice",
    "divisor",
    "discriminant",
    "star",
    "h_group",
    "make_L2d",
    "make_M",
    "split_polarisation_complement",
    "smith_normal_form",
    "FiniteQuadraticModule",
    "DiscElement",
    "isotropic_elements",
    "classify_fp_space",
    "finite_orthogonal_order",
    "class_number",
    "Isometry",
    "spinor_norm",
    "in_stable",
    "in_Oplus",
    "in_gamma",
    "eichler_transvection",
    "extend_isometry_to_L2",
    "reduce_vector_mod_p",
    "hyperplane_equivalence",
    "index_bound",
    "BoundaryPoint",
    "BoundaryCurve",
    "BoundaryGraph",
    "CurveGroup",
    "NormalForm",
    "classify_isotropic_vector",
    "boundary_points",
    "rank2_type",
    "rank2_normal_form",
    "rank2_representatives",
    "lift_parabolic",
    "curve_group",
    "incidence",
    "build_boundary_graph",
    "build_boundary_graph_L2",
    "curve_count_bounds",
    "classify_rank2_L2",
    "OracleOptions",
    "RunConfig",
    "OutputFormat",
    "Ambient",
    "Presentation",
    "KummerBBError",
    "DegenerateError",
    "NotPrimitiveError",
    "NotIsotropicError",
    "InvalidArgumentError",
    "MissingMarkError",
    "NonIntegralError",
    "BudgetExceededError",
    "ReductionError",
    "InvariantViolationError",
]
