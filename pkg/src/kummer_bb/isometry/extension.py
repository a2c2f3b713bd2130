"""Extension of Γ_{2p²} to L₂ through L_{2p²} = T ⊕ ⟨k₁⟩ ↪ T ⊕ ⟨k⟩, k₁ ↦ p·k."""

from __future__ import annotations

import math

from sympy import ImmutableMatrix, diag

from ..errors import InvalidArgumentError, NonIntegralError
from ..lattice import Lattice, LatticeVector, make_L2d
from .isometry import Isometry


def _square_root_of_d(lattice: Lattice) -> int:
    norm = lattice.mark("v").norm
    d = -norm // 2
    p = math.isqrt(d)
    if norm >= 0 or p * p != d:
        raise InvalidArgumentError(f"{lattice.name or 'Lattice'} is not of the form L_(2p²)")
    return p


def _embedding(lattice: Lattice) -> ImmutableMatrix:
    p = _square_root_of_d(lattice)
    v_index = lattice.mark("v").coords.index(1)
    return ImmutableMatrix(diag(*[p if i == v_index else 1 for i in range(lattice.rank)]))


def stabilised_hyperplane_vector() -> LatticeVector:
    """k ∈ L₂, the ⟨−2⟩ generator; L_{2p²} embeds in L₂ as {x : (x, k) ≡ 0 mod p}."""
    return make_L2d(1).mark("v")


def embed_in_L2(v: LatticeVector) -> LatticeVector:
    j = _embedding(v.parent)
    image = j * ImmutableMatrix(v.coords)
    return make_L2d(1).vector(*(int(c) for c in image))


def extend_isometry_to_L2(g: Isometry) -> Isometry:
    """J·g·J⁻¹ on L₂; integral whenever g preserves v̲* up to L."""
    j = _embedding(g.parent)
    matrix = ImmutableMatrix(j * g.matrix * j.inv())
    if not all(x.is_integer for x in matrix):
        raise NonIntegralError("Extension to L₂ is not integral")
    return Isometry(matrix, make_L2d(1))
