from .forms import Diagonalization, diagonalize, signature
from .matrices import (
    FracRows,
    IntMatrix,
    IntRows,
    RatMatrix,
    block_diag,
    columns,
    det_exact,
    frac_rows,
    from_columns,
    identity,
    int_matrix,
    int_rows,
    is_integral,
    is_unimodular,
    rat_matrix,
    unimodular_inverse,
)
from .smith import (
    SmithForm,
    extend_to_basis,
    invariant_factors,
    is_saturated,
    kernel_basis,
    smith_normal_form,
)

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "IntRows",
    "FracRows",
    "int_matrix",
    "rat_matrix",
    "from_columns",
    "identity",
    "block_diag",
    "int_rows",
    "frac_rows",
    "columns",
    "is_integral",
    "det_exact",
    "is_unimodular",
    "unimodular_inverse",
    "SmithForm",
    "smith_normal_form",
    "invariant_factors",
    "kernel_basis",
    "is_saturated",
    "extend_to_basis",
    "Diagonalization",
    "diagonalize",
    "signature",
]
