"""Class numbers of positive definite binary quadratic forms.

Three independent routes to h(D) for D < 0:

* ``class_number``: count reduced forms directly (|b| ≤ a ≤ c).
* ``class_number_by_reduction``: reduce seeded random forms of discriminant D and
  count the distinct results.
* ``class_number_from_conductor``: h(D₀ f²) from h(D₀) and the conductor f.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from sympy import divisors, factorint, legendre_symbol

from ..config import logger
from ..errors import InvalidArgumentError


class BinaryForm(NamedTuple):
    """ax² + bxy + cy²."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        return b >= 0 or (abs(b) != a and a != c)


def check_discriminant(d: int) -> None:
    if d >= 0 or d % 4 not in (0, 1):
        raise InvalidArgumentError(
            f"Discriminant must be negative and ≡ 0, 1 mod 4, got {d}"
        )


def reduced_forms(d: int) -> list[BinaryForm]:
    """Primitive reduced forms of discriminant d, ordered by (a, b)."""
    check_discriminant(d)
    forms = []
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            form = BinaryForm(a, b, num // (4 * a))
            if form.is_reduced and form.is_primitive:
                forms.append(form)
        a += 1
    return forms


def class_number(d: int) -> int:
    return len(reduced_forms(d))


def normalize(form: BinaryForm) -> BinaryForm:
    """Translate so that -a < b ≤ a."""
    a, b, c = form
    r = (a - b) // (2 * a)
    return BinaryForm(a, b + 2 * r * a, a * r * r + b * r + c)


def reduce_form(form: BinaryForm) -> BinaryForm:
    """Reduced representative of a positive definite form's proper class."""
    if form.a <= 0 or form.discriminant >= 0:
        raise InvalidArgumentError(f"Form {form} is not positive definite")
    a, b, c = normalize(form)
    while not (a < c or (a == c and b >= 0)):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
    return BinaryForm(a, b, c)


def class_number_by_reduction(d: int, seed: int = 42, patience: int | None = None) -> int:
    """Count the distinct reductions of random primitive forms of discriminant d.

    A random form is (a, b, (b² − d)/4a) with b uniform in the sweep
    |b| ≤ 4√|d| + 4 and a a uniform divisor of (b² − d)/4. Sampling stops
    after ``patience`` draws (default 100 per middle coefficient) without a
    new class.
    """
    check_discriminant(d)
    rng = np.random.default_rng(seed)
    bound = 4 * math.isqrt(-d) + 4
    middles = [b for b in range(-bound, bound + 1) if (b - d) % 2 == 0]
    table = {b: [int(a) for a in divisors((b * b - d) // 4)] for b in middles}
    limit = patience if patience is not None else 100 * len(middles)
    if limit < 1:
        raise InvalidArgumentError(f"patience must be positive, got {limit}")

    classes: set[BinaryForm] = set()
    idle = draws = 0
    while idle < limit:
        b = middles[int(rng.integers(len(middles)))]
        choices = table[b]
        a = choices[int(rng.integers(len(choices)))]
        form = BinaryForm(a, b, (b * b - d) // (4 * a))
        draws += 1
        idle += 1
        if form.is_primitive:
            reduced = reduce_form(form)
            if reduced not in classes:
                classes.add(reduced)
                idle = 0
    logger.debug("h(%d) by reduction: %d classes after %d random forms", d, len(classes), draws)
    return len(classes)


def fundamental_part(d: int) -> tuple[int, int]:
    """(D₀, f) with d = D₀·f² and D₀ a fundamental discriminant."""
    check_discriminant(d)
    core = -1
    for prime, exp in factorint(-d).items():
        if exp % 2:
            core *= prime
    d0 = core if core % 4 == 1 else 4 * core
    f = math.isqrt(d // d0)
    return d0, f


def kronecker(d0: int, ell: int) -> int:
    """Kronecker symbol (d0 / ℓ) for a prime ℓ."""
    if ell == 2:
        if d0 % 2 == 0:
            return 0
        return 1 if d0 % 8 in (1, 7) else -1
    if d0 % ell == 0:
        return 0
    return int(legendre_symbol(d0 % ell, ell))


def class_number_from_conductor(d: int) -> int:
    """h(D₀f²) = h(D₀)·f·∏_{ℓ | f}(1 − (D₀/ℓ)/ℓ) / [O_K^* : O^*]."""
    d0, f = fundamental_part(d)
    if f == 1:
        return class_number(d0)
    units = {-3: 3, -4: 2}.get(d0, 1)
    value = Fraction(class_number(d0) * f, units)
    for ell in factorint(f):
        value *= 1 - Fraction(kronecker(d0, ell), ell)
    if value.denominator != 1:
        raise InvalidArgumentError(f"Non-integral class number for {d}")
    return int(value)
