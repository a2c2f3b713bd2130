"""Hyperplanes of L₂ ⊗ 𝔽_p: reduction to a standard line and equivalences.

A vector w with w² ≢ 0 mod p defines the nondegenerate hyperplane
Π_w = w^⊥ mod p. ``reduce_vector_mod_p`` moves the line of w to
(1, a, 0, 0, 0, 0) with integral isometries of L₂; ``hyperplane_equivalence``
combines two reductions with three transvections through e₂ and f₂.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import isprime, legendre_symbol, sqrt_mod

from ..config import logger
from ..errors import DegenerateError, InvalidArgumentError, InvariantViolationError
from ..finite import classify_fp_space, finite_orthogonal_order
from ..linalg import det_exact, int_matrix, smith_normal_form
from ..lattice import Lattice, LatticeVector, make_L2d
from .isometry import Isometry
from .transvection import eichler_transvection, o2u_from_sl2_pair

S = ((0, -1), (1, 0))
S_INV = ((0, 1), (-1, 0))
I2 = ((1, 0), (0, 1))


@dataclass(frozen=True)
class Reduction:
    """``composite`` maps w to scale·(1, a, 0, 0, 0, 0) mod p."""

    standard: tuple[int, ...]
    transcript: tuple[Isometry, ...]
    scale: int

    @property
    def a(self) -> int:
        return self.standard[1]

    def composite(self, lattice: Lattice) -> Isometry:
        return compose(self.transcript, lattice)


def compose(transcript: Sequence[Isometry], lattice: Lattice) -> Isometry:
    """T_m ∘ … ∘ T_1 for a transcript listed in application order."""
    g = Isometry.identity(lattice)
    for step in transcript:
        g = step @ g
    return g


def check_prime(p: int) -> None:
    if p <= 3 or not isprime(p):
        raise InvalidArgumentError("p must be a prime > 3", p)


def on_line_mod_p(x: Sequence[int], y: Sequence[int], p: int) -> bool:
    """x ≡ λ·y mod p for some λ ≢ 0."""
    if all(c % p == 0 for c in x) or all(c % p == 0 for c in y):
        return False
    return all((x[i] * y[j] - x[j] * y[i]) % p == 0 for i in range(len(x)) for j in range(i))


def reduce_vector_mod_p(w: LatticeVector, p: int) -> Reduction:
    check_prime(p)
    lattice = w.parent
    if w.norm % p == 0:
        raise DegenerateError("w is isotropic mod p; its hyperplane is degenerate", w.coords)
    state = [c % p for c in w.coords]
    transcript: list[Isometry] = []
    e2 = lattice.mark("e2")
    wbar = lattice.mark("w")
    vbar = lattice.mark("v")

    def push(g: Isometry) -> None:
        nonlocal state
        transcript.append(g)
        state = [int(c) % p for c in g.apply(state)]

    if _is_standard(state):
        return Reduction(tuple(state), (), 1)

    if state[3] == 0:
        if not any(state[:4]):
            push(eichler_transvection(e2, wbar if state[4] else vbar))
        if state[0]:
            push(o2u_from_sl2_pair(S, I2, lattice))
        elif state[1]:
            push(o2u_from_sl2_pair(I2, S_INV, lattice))
        elif state[2]:
            push(o2u_from_sl2_pair(S, S_INV, lattice))

    inv = pow(state[3], -1, p)
    m = -state[4] * inv % p
    if m:
        push(eichler_transvection(e2, m * wbar))
    n = -state[5] * inv % p
    if n:
        push(eichler_transvection(e2, n * vbar))

    block = int_matrix([[state[0], -state[2]], [state[3], state[1]]])
    snf = smith_normal_form(block)
    u, v = snf.u, snf.v
    if det_exact(u) == -1:
        u = int_matrix([[-u[0, 0], -u[0, 1]], [u[1, 0], u[1, 1]]])
    if det_exact(v) == -1:
        v = int_matrix([[-v[0, 0], v[0, 1]], [-v[1, 0], v[1, 1]]])
    a_mat = [[int(u[i, j]) for j in range(2)] for i in range(2)]
    v_inv = v.inv()
    b_mat = [[int(v_inv[i, j]) for j in range(2)] for i in range(2)]
    push(o2u_from_sl2_pair(a_mat, b_mat, lattice))

    if state[2] or state[3] or state[4] or state[5] or not state[0]:
        raise InvariantViolationError("Hyperplane reduction did not reach the 2U diagonal", state)
    scale = state[0]
    a = state[1] * pow(scale, -1, p) % p
    standard = (1, a, 0, 0, 0, 0)
    result = Reduction(standard, tuple(transcript), scale)
    _verify_reduction(w, p, result)
    logger.debug("Reduced %s mod %d to a=%d in %d steps", w.coords, p, a, len(transcript))
    return result


def _is_standard(state: Sequence[int]) -> bool:
    return state[0] == 1 and not any(state[2:])


def _verify_reduction(w: LatticeVector, p: int, reduction: Reduction) -> None:
    image = reduction.composite(w.parent).apply(w.coords)
    if not on_line_mod_p([int(c) for c in image], reduction.standard, p):
        raise InvariantViolationError("Reduction transcript does not reach the standard line")


def hyperplane_equivalence(u: LatticeVector, v: LatticeVector, p: int) -> Isometry:
    """Integral g ∈ O(L₂) with g·u ≡ λ·v mod p, hence g(Π_u) = Π_v."""
    check_prime(p)
    lattice = u.parent
    if (u.norm * v.norm) % p == 0:
        raise DegenerateError("Both vectors must be anisotropic mod p")
    if legendre_symbol(u.norm * v.norm % p, p) != 1:
        raise InvalidArgumentError("u² / v² is not a square mod p", (u.norm, v.norm))

    ru = reduce_vector_mod_p(u, p)
    rv = reduce_vector_mod_p(v, p)
    a, b = ru.a, rv.a
    mu = int(sqrt_mod(b * pow(a, -1, p) % p, p))
    u_hat = (mu, mu * a % p)
    v_hat = (1, b)
    r, s = _centered(u_hat[0] - v_hat[0], p), _centered(u_hat[1] - v_hat[1], p)

    middle = Isometry.identity(lattice)
    if r or s:
        q = r if s == 0 else s if r == 0 else math.gcd(r, s)
        e1, f1, e2, f2 = (lattice.mark(name) for name in ("e1", "f1", "e2", "f2"))
        u_prime = (q * pow(mu, -1, p) % p) * f1
        v_prime = (-q % p) * f1
        w = (r // q) * e1 + (s // q) * f1
        middle = (
            eichler_transvection(e2, v_prime)
            @ eichler_transvection(f2, w)
            @ eichler_transvection(e2, u_prime)
        )

    g = rv.composite(lattice).inverse() @ middle @ ru.composite(lattice)
    g.require_integral()
    image = [int(c) for c in g.apply(u.coords)]
    if not on_line_mod_p(image, v.coords, p):
        raise InvariantViolationError("Equivalence does not carry Π_u to Π_v")
    return g


def _centered(x: int, p: int) -> int:
    x %= p
    return x - p if x > p // 2 else x


# ── Index bounds ────────────────────────────────────────────────────


def index_bound(p: int) -> int:
    """|Γ₂ : Γ_{2p²}| ≤ 2(p⁵ + p²)."""
    check_prime(p)
    return 2 * (p**5 + p**2)


def index_bound_refined(p: int) -> int:
    """4·|O(L₂ ⊗ 𝔽_p)| / (2·|O(Π)|) = 2(p⁵ − ε·p²)."""
    check_prime(p)
    space = classify_fp_space(make_L2d(1).rows, p)
    whole = finite_orthogonal_order(6, p, space.epsilon)
    hyperplane = finite_orthogonal_order(5, p)
    return 4 * whole // (2 * hyperplane)
