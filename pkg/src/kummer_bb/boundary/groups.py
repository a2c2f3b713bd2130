"""Groups of the boundary curves: PSL₂(ℤ) and Γ₁(N) by coset enumeration."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from sympy import primefactors

from ..errors import InvalidArgumentError

S_GEN = ((0, -1), (1, 0))
T_GEN = ((1, 1), (0, 1))

Row = tuple[int, int]


@dataclass(frozen=True)
class CurveGroup:
    """Modular curve ℍ⁺/G with G = PSL₂(ℤ) (level 1) or Γ₁(level)."""

    level: int
    name: str
    index: int
    cusps: int

    @property
    def unicode_name(self) -> str:
        return "PSL₂(ℤ)" if self.level == 1 else f"Γ₁({self.level})"

    def to_dict(self) -> dict[str, object]:
        return {"name": self.name, "level": self.level, "index": self.index, "cusps": self.cusps}


def _act(x: Row, m: tuple[Row, Row], n: int) -> Row:
    return ((x[0] * m[0][0] + x[1] * m[1][0]) % n, (x[0] * m[0][1] + x[1] * m[1][1]) % n)


def coset_orbit(n: int) -> list[Row]:
    """Orbit of the row (1, 0) mod n under right multiplication by S and T.

    Γ₁(n) is the stabiliser of (1, 0), so the orbit enumerates Γ₁(n)\\SL₂(ℤ).
    """
    start = (1 % n, 0)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in (S_GEN, T_GEN):
            y = _act(x, g, n)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def count_cusps(n: int, orbit: list[Row]) -> int:
    """Orbits of ⟨−I, T⟩ acting on the right of the coset orbit."""
    remaining = set(orbit)
    cusps = 0
    while remaining:
        x = remaining.pop()
        cusps += 1
        queue = deque([x, ((-x[0]) % n, (-x[1]) % n)])
        while queue:
            y = queue.popleft()
            remaining.discard(y)
            for z in (_act(y, T_GEN, n), ((-y[0]) % n, (-y[1]) % n)):
                if z in remaining:
                    remaining.discard(z)
                    queue.append(z)
    return cusps


def curve_group(a: int) -> CurveGroup:
    if a < 1:
        raise InvalidArgumentError(f"Level must be positive, got {a}")
    orbit = coset_orbit(a)
    # −I ∈ Γ₁(a) only for a ≤ 2
    index = len(orbit) if a <= 2 else len(orbit) // 2
    name = "PSL2(Z)" if a == 1 else f"Gamma1({a})"
    return CurveGroup(a, name, index, count_cusps(a, orbit))


def gamma1_index_formula(n: int) -> int:
    """[PSL₂(ℤ) : ±Γ₁(n)] from n² ∏(1 − 1/ℓ²)."""
    total = n * n
    for ell in primefactors(n):
        total = total // (ell * ell) * (ell * ell - 1)
    return total if n <= 2 else total // 2


def random_gamma1(a: int, rng: np.random.Generator, bound: int = 10**4) -> tuple[Row, Row]:
    """Element [[α, β], [γ, δ]] of Γ₁(a) with entries bounded by ``bound``."""
    if bound < 2 * a:
        raise InvalidArgumentError("Bound too small for the level")
    while True:
        alpha = 1 + a * int(rng.integers(-(bound - 1) // a, (bound - 1) // a, endpoint=True))
        beta = a * int(rng.integers(-bound // a, bound // a, endpoint=True))
        if beta == 0:
            if alpha != 1 and not (a <= 2 and alpha == -1):
                continue
            gamma = int(rng.integers(-bound, bound, endpoint=True))
            return (alpha, 0), (gamma, alpha)
        if math.gcd(alpha, beta) != 1:
            continue
        delta = pow(alpha, -1, abs(beta)) if abs(beta) > 1 else 0
        gamma = (alpha * delta - 1) // beta
        if max(abs(alpha), abs(beta), abs(gamma), abs(delta)) <= bound:
            return (alpha, beta), (gamma, delta)
