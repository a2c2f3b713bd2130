"""Normal forms of rank 2 primitive totally isotropic sublattices E ⊂ L.

A basis v₁,…,v₆ of L is adapted to E when E = ⟨v₁,v₂⟩ and E^⊥ = ⟨v₁,…,v₄⟩.
The Gram matrix then has the block shape

    Q = [[0,  0, Aᵀ],
         [0,  B, C ],
         [A, Cᵀ, D ]]

with A_{ij} = (v_{4+i}, v_j), B the Gram of ⟨v₃,v₄⟩, C_{ij} = (v_{2+i}, v_{4+j})
and D the Gram of ⟨v₅,v₆⟩. ``rank2_normal_form`` moves any adapted basis to
A = [[0,a],[1,0]], B Gauss-reduced, C = 0 and D = diag(d, 0) with 0 ≤ d < 2a.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field, replace

from sympy import ImmutableMatrix

from ..config import logger
from ..errors import InvalidArgumentError, InvariantViolationError, ReductionError
from ..isometry import Isometry, in_gamma
from ..linalg import (
    IntMatrix,
    det_exact,
    extend_to_basis,
    int_matrix,
    int_rows,
    is_unimodular,
    smith_normal_form,
    unimodular_inverse,
)
from ..lattice import (
    Lattice,
    Sublattice,
    make_L2d,
    orthogonal_complement,
    require_isotropic_plane,
)

SWAP = int_matrix([[0, 1], [1, 0]])


@dataclass(frozen=True)
class NormalForm:
    """Blocks of Q in a normal basis; ``basis`` columns are v₁…v₆ in L coordinates."""

    a: int
    d: int
    A: IntMatrix
    B: IntMatrix
    C: IntMatrix
    D: IntMatrix
    basis: IntMatrix
    parent: Lattice = field(repr=False)
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def gram(self) -> IntMatrix:
        return ImmutableMatrix(self.basis.T * self.parent.gram * self.basis)

    @property
    def e(self) -> Sublattice:
        return Sublattice(ImmutableMatrix(self.basis[:, 0:2]), self.parent)

    def to_dict(self) -> dict[str, object]:
        def rows(m: IntMatrix) -> list[list[str]]:
            return [[str(x) for x in row] for row in int_rows(m)]

        return {"a": self.a, "d": self.d, "A": rows(self.A), "B": rows(self.B), "C": rows(self.C), "D": rows(self.D)}


def rank2_type(e: Sublattice) -> int:
    """Second Smith invariant of the pairing of E with L."""
    require_isotropic_plane(e, rank=2)
    invariants = smith_normal_form(ImmutableMatrix(e.basis.T * e.parent.gram)).invariants
    if invariants[0] != 1:
        raise InvariantViolationError("Pairing of E with L is not primitive", invariants)
    return invariants[1]


def adapted_basis(e: Sublattice) -> IntMatrix:
    """Unimodular P whose columns are a basis of E, then of E^⊥, then of L."""
    perp = orthogonal_complement(e)
    solution, params = perp.basis.gauss_jordan_solve(e.basis)
    if params.shape[0] or not all(x.is_integer for x in solution):
        raise InvariantViolationError("E is not contained in its orthogonal complement")
    inner = extend_to_basis(ImmutableMatrix(solution))
    perp_basis = ImmutableMatrix(perp.basis * inner)
    return extend_to_basis(perp_basis)


def blocks(q: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix, IntMatrix]:
    return (
        ImmutableMatrix(q[4:6, 0:2]),
        ImmutableMatrix(q[2:4, 2:4]),
        ImmutableMatrix(q[2:4, 4:6]),
        ImmutableMatrix(q[4:6, 4:6]),
    )


def gauss_reduce(b: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Reduce the negative definite binary Gram b.

    Returns (Rᵀ·b·R, R) with R ∈ GL₂(ℤ) and −Rᵀ·b·R = [[α, β], [β, γ]]
    satisfying |2β| ≤ α ≤ γ and β ≥ 0.
    """
    (b00, b01), (_, b11) = int_rows(b)
    a, h, c = -b00, -b01, -b11
    r = [[1, 0], [0, 1]]

    def apply(t: Sequence[Sequence[int]]) -> None:
        nonlocal a, h, c, r
        (t00, t01), (t10, t11) = t
        a, h, c = (
            a * t00 * t00 + 2 * h * t00 * t10 + c * t10 * t10,
            a * t00 * t01 + h * (t00 * t11 + t01 * t10) + c * t10 * t11,
            a * t01 * t01 + 2 * h * t01 * t11 + c * t11 * t11,
        )
        r = [
            [r[0][0] * t00 + r[0][1] * t10, r[0][0] * t01 + r[0][1] * t11],
            [r[1][0] * t00 + r[1][1] * t10, r[1][0] * t01 + r[1][1] * t11],
        ]

    if a <= 0 or a * c - h * h <= 0:
        raise InvalidArgumentError("B is not negative definite")
    while True:
        if 2 * abs(h) > a:
            # least t with 2(h − t·a) ≤ a
            t = -((a - 2 * h) // (2 * a))
            apply([[1, -t], [0, 1]])
            continue
        if c < a:
            apply([[0, -1], [1, 0]])
            continue
        break
    if h < 0:
        apply([[1, 0], [0, -1]])
    r_mat = int_matrix(r)
    return ImmutableMatrix(r_mat.T * b * r_mat), r_mat


# admissible −B for a = p
B_BRANCHES: tuple[tuple[int, int, int], ...] = ((2, 0, 6), (4, 2, 4))


def rank2_normal_form(e: Sublattice) -> NormalForm:
    require_isotropic_plane(e, rank=2)
    a = smith_normal_form(ImmutableMatrix(e.basis.T * e.parent.gram)).invariants[1]
    if not (a > 2 and a % 2 == 1):
        return _reduce(e, None)

    results: list[tuple[tuple[int, int, int], NormalForm | ReductionError]] = []
    for target in B_BRANCHES:
        try:
            results.append((target, _reduce(e, target)))
        except ReductionError as exc:
            logger.debug("B branch %s failed for a=%d: %s", target, a, exc)
            results.append((target, exc))
    found = [(t, nf) for t, nf in results if isinstance(nf, NormalForm)]
    if not found:
        raise ReductionError("No admissible B branch reduces", {"a": a})
    target, nf = found[0]
    notes = tuple(
        f"-B reduced to {target}; the branch -B = {t} "
        + ("also reduces" if isinstance(other, NormalForm) else "does not occur for this E")
        for t, other in results
        if t != target
    )
    return replace(nf, notes=notes)


def _reduce(e: Sublattice, target_b: tuple[int, int, int] | None) -> NormalForm:
    """Move an adapted basis of E to normal form, requiring −B = ``target_b`` when given."""
    lattice = e.parent
    g = lattice.gram
    p_mat = adapted_basis(e)

    def gram(p: IntMatrix) -> IntMatrix:
        return ImmutableMatrix(p.T * g * p)

    def put(p: IntMatrix, start: int, cols: IntMatrix) -> IntMatrix:
        m = p.as_mutable()
        m[:, start : start + 2] = cols
        return ImmutableMatrix(m)

    # A = [[0, a], [1, 0]]
    a_blk, _, _, _ = blocks(gram(p_mat))
    snf = smith_normal_form(a_blk)
    a = snf.invariants[1]
    x = ImmutableMatrix(snf.u.T * SWAP)
    p_mat = put(p_mat, 0, ImmutableMatrix(p_mat[:, 0:2] * snf.v))
    p_mat = put(p_mat, 4, ImmutableMatrix(p_mat[:, 4:6] * x))

    # B reduced
    _, b_blk, _, _ = blocks(gram(p_mat))
    reduced_b, r = gauss_reduce(b_blk)
    if target_b is not None:
        reduced = (-int(reduced_b[0, 0]), -int(reduced_b[0, 1]), -int(reduced_b[1, 1]))
        if reduced != target_b:
            raise ReductionError(
                "B does not reduce to the requested form", {"target": target_b, "reduced": reduced}
            )
    p_mat = put(p_mat, 2, ImmutableMatrix(p_mat[:, 2:4] * r))

    # C = 0: v₃₄ += E·S, v₅₆ += v₃₄·T
    _, b_blk, c_blk, _ = blocks(gram(p_mat))
    s_mat, t_mat = _clear_c(a, b_blk, c_blk)
    e_cols = ImmutableMatrix(p_mat[:, 0:2])
    v34 = ImmutableMatrix(p_mat[:, 2:4])
    v56 = ImmutableMatrix(p_mat[:, 4:6])
    p_mat = put(p_mat, 2, ImmutableMatrix(v34 + e_cols * s_mat))
    p_mat = put(p_mat, 4, ImmutableMatrix(v56 + v34 * t_mat))

    # D = diag(d, 0): v₅₆ += E·W
    _, _, _, d_blk = blocks(gram(p_mat))
    d00, d01, d11 = int(d_blk[0, 0]), int(d_blk[0, 1]), int(d_blk[1, 1])
    w = int_matrix([[-d01, -d11 // 2], [-(d00 // (2 * a)), 0]])
    p_mat = put(p_mat, 4, ImmutableMatrix(p_mat[:, 4:6] + p_mat[:, 0:2] * w))

    q = gram(p_mat)
    a_blk, b_blk, c_blk, d_blk = blocks(q)
    d = int(d_blk[0, 0])
    nf = NormalForm(a, d, a_blk, b_blk, c_blk, d_blk, p_mat, lattice)
    _check_shape(nf)
    logger.debug("Normal form: a=%d d=%d B=%s", a, d, int_rows(b_blk))
    return nf


def _clear_c(a: int, b: IntMatrix, c: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """S, T with C + B·T + Sᵀ·Aᵀ = 0 (or C reduced mod a when B is singular mod a)."""
    (b00, b01), (b10, b11) = int_rows(b)
    (c00, c01), (c10, c11) = int_rows(c)
    det = b00 * b11 - b01 * b10
    try:
        inv = pow(det, -1, a) if a > 1 else 0
        # t₁ = −adj(B)·c₁ / det(B) mod a
        t0 = -(b11 * c00 - b01 * c10) * inv % a if a > 1 else 0
        t1 = -(-b10 * c00 + b00 * c10) * inv % a if a > 1 else 0
    except ValueError:
        logger.debug("det B = %d is not invertible mod %d; reducing C mod a", det, a)
        t0 = t1 = 0
    r00 = c00 + b00 * t0 + b01 * t1
    r10 = c10 + b10 * t0 + b11 * t1
    r01, r11 = c01, c11
    # Sᵀ·Aᵀ = [[a·x₁₂, x₁₁], [a·x₂₂, x₂₁]] for Sᵀ = [[x₁₁, x₁₂], [x₂₁, x₂₂]]
    x12, x22 = -(r00 // a), -(r10 // a)
    x11, x21 = -r01, -r11
    s_transposed = int_matrix([[x11, x12], [x21, x22]])
    return ImmutableMatrix(s_transposed.T), int_matrix([[t0, 0], [t1, 0]])


def _check_shape(nf: NormalForm) -> None:
    a, d = nf.a, nf.d
    problems = []
    if nf.A != int_matrix([[0, a], [1, 0]]):
        problems.append("A")
    c = int_rows(nf.C)
    if c[0][1] or c[1][1] or not (0 <= c[0][0] < a and 0 <= c[1][0] < a):
        problems.append("C")
    if nf.D != int_matrix([[d, 0], [0, 0]]) or not 0 <= d < 2 * a or d % 2:
        problems.append("D")
    if not is_unimodular(nf.basis):
        problems.append("basis")
    if abs(det_exact(nf.gram)) != abs(nf.parent.det):
        problems.append("det")
    reduced = (-int(nf.B[0, 0]), -int(nf.B[0, 1]), -int(nf.B[1, 1]))
    p = _odd_part(a)
    if p > 1 and a == p and reduced not in ((2, 0, 6), (4, 2, 4)):
        problems.append("B")
    if p > 1 and a == 2 * p and reduced != (2, 1, 2):
        problems.append("B")
    if problems:
        raise ReductionError("Normal form has the wrong shape", problems)


def _odd_part(a: int) -> int:
    while a % 2 == 0 and a:
        a //= 2
    return a


# ── Representatives ─────────────────────────────────────────────────


def rank2_representatives(p: int) -> list[tuple[int, Sublattice]]:
    """E = ⟨e₁, x⟩ for one x of each divisor 1, 2, p, 2p in U ⊕ ⟨−6⟩ ⊕ ⟨−2p²⟩."""
    lattice = make_L2d(p * p)
    e1 = lattice.mark("e1")
    tails = (
        (1, (1, 0, 0, 0)),
        (2, (2, 2 * p * p, p, 1)),
        (p, (p, p, 0, 1)),
        (2 * p, (2 * p, 2 * p, p, 1)),
    )
    reps = []
    for a, tail in tails:
        e = Sublattice.spanned_by(e1, lattice.vector(0, 0, *tail))
        require_isotropic_plane(e, rank=2)
        if rank2_type(e) != a:
            raise InvariantViolationError("Representative has the wrong type", {"a": a})
        reps.append((a, e))
    return reps


# ── Parabolic lifts ─────────────────────────────────────────────────


def in_gamma1(u: Sequence[Sequence[int]], n: int) -> bool:
    """U ≡ [[1, 0], [*, 1]] mod n."""
    (alpha, beta), (_, delta) = u
    return (alpha - 1) % n == 0 and beta % n == 0 and (delta - 1) % n == 0


def lift_parabolic(
    u: Sequence[Sequence[int]],
    e: Sublattice,
    normal_form: NormalForm | None = None,
    *,
    verify: bool = True,
) -> Isometry:
    """g ∈ Γ stabilising E with π_E(g) = U, relative to the normal basis of E."""
    nf = normal_form or rank2_normal_form(e)
    a, d = nf.a, nf.d
    (alpha, beta), (gamma, delta) = ((int(x) for x in row) for row in u)
    if alpha * delta - beta * gamma != 1:
        raise InvalidArgumentError("U must have determinant 1")
    if not in_gamma1(((alpha, beta), (gamma, delta)), a):
        raise InvalidArgumentError(f"U is not in Gamma1({a})", ((alpha, beta), (gamma, delta)))

    r, s, t, uu = alpha, -beta // a, -a * gamma, delta
    # A·W + (A·W)ᵀ + Zᵀ·D·Z = D
    if d * (1 - r * r) % (2 * a):
        raise ReductionError("W-equation has no integral solution", {"a": a, "d": d, "r": r})
    w21 = d * (1 - r * r) // (2 * a)
    w12 = -d * s * s // 2
    w11 = -d * r * s
    u_mat = int_matrix([[alpha, beta], [gamma, delta]])
    w_mat = int_matrix([[w11, w12], [w21, 0]])
    uw = u_mat * w_mat
    local = int_matrix(
        [
            [alpha, beta, 0, 0, uw[0, 0], uw[0, 1]],
            [gamma, delta, 0, 0, uw[1, 0], uw[1, 1]],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, r, s],
            [0, 0, 0, 0, t, uu],
        ]
    )
    matrix = ImmutableMatrix(nf.basis * local * unimodular_inverse(nf.basis))
    g = Isometry(matrix, nf.parent)
    if project_to_E(g, nf) != u_mat:
        raise InvariantViolationError("Lift does not project to U")
    if verify and nf.parent.has_mark("v") and not in_gamma(g):
        raise InvariantViolationError("Lift is not in Gamma")
    return g


def project_to_E(g: Isometry, nf: NormalForm) -> IntMatrix:
    """π_E(g): the action of g on E in the normal basis of E."""
    g.require_integral()
    local = unimodular_inverse(nf.basis) * g.matrix * nf.basis
    if any(local[i, j] for i in range(2, 6) for j in range(2)):
        raise InvalidArgumentError("g does not stabilise E")
    return ImmutableMatrix(local[0:2, 0:2])
