from .discriminant import (
    Discriminant,
    DualVector,
    discriminant,
    discriminant_module,
    h_group,
    star,
)
from .lattice import (
    Lattice,
    LatticeVector,
    Marks,
    Sublattice,
    divisor,
    is_isotropic,
    is_primitive,
    is_totally_isotropic,
    orthogonal_complement,
    require_isotropic_plane,
    require_primitive,
)
from .named import (
    L2D_BASIS,
    M_BASIS,
    SplitComplement,
    direct_sum,
    make_A2,
    make_L2d,
    make_M,
    make_rank_one,
    make_U,
    rescale,
    split_polarisation_complement,
)

__all__ = [
    "Lattice",
    "LatticeVector",
    "Sublattice",
    "Marks",
    "divisor",
    "is_primitive",
    "is_isotropic",
    "is_totally_isotropic",
    "orthogonal_complement",
    "require_primitive",
    "require_isotropic_plane",
    "Discriminant",
    "DualVector",
    "discriminant",
    "discriminant_module",
    "star",
    "h_group",
    "L2D_BASIS",
    "M_BASIS",
    "make_U",
    "make_rank_one",
    "make_A2",
    "rescale",
    "direct_sum",
    "make_L2d",
    "make_M",
    "SplitComplement",
    "split_polarisation_complement",
]
