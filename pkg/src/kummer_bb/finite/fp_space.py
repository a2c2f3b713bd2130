"""Nondegenerate quadratic spaces over 𝔽_p (p odd) and their orthogonal groups."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal, TypeAlias

import numpy as np
import numpy.typing as npt
from sympy import isprime, legendre_symbol

from ..config import OracleOptions
from ..errors import BudgetExceededError, DegenerateError, InvalidArgumentError
from ..linalg import det_exact, int_matrix
from ._parallel import ordered_map

Sign: TypeAlias = Literal[1, -1]


@dataclass(frozen=True)
class FpQuadraticSpace:
    """Gram matrix over 𝔽_p with its classifying invariants.

    ``delta`` is the square class of the determinant (+1 square, -1 not),
    ``epsilon`` is the square class of (-1)^m·det for even dimension 2m.
    """

    p: int
    gram: tuple[tuple[int, ...], ...]
    delta: Sign
    epsilon: Sign | None

    @property
    def dim(self) -> int:
        return len(self.gram)


def square_class(x: int, p: int) -> Sign:
    """Legendre symbol of a unit mod p, as ±1."""
    if x % p == 0:
        raise DegenerateError(f"{x} is not a unit mod {p}")
    return 1 if legendre_symbol(x % p, p) == 1 else -1


def classify_fp_space(gram: Sequence[Sequence[int]], p: int) -> FpQuadraticSpace:
    """Reduce a symmetric integer matrix mod p and classify it."""
    _check_odd_prime(p)
    rows = tuple(tuple(int(x) % p for x in row) for row in gram)
    n = len(rows)
    if any(len(row) != n for row in rows) or any(
        rows[i][j] != rows[j][i] for i in range(n) for j in range(n)
    ):
        raise InvalidArgumentError("Gram matrix must be square and symmetric")
    det = det_exact(int_matrix(rows, n)) % p if n else 1
    if det == 0:
        raise DegenerateError(f"Form is degenerate mod {p}", {"p": p})
    delta = square_class(det, p)
    epsilon: Sign | None = None
    if n % 2 == 0:
        epsilon = square_class((-1) ** (n // 2) * det, p)
    return FpQuadraticSpace(p=p, gram=rows, delta=delta, epsilon=epsilon)


def finite_orthogonal_order(dim: int, p: int, epsilon: Sign | None = None) -> int:
    """|O(V)| for a nondegenerate space of dimension ``dim`` over 𝔽_p.

    Odd dimension 2m+1: 2·p^{m²}·∏_{i=1}^{m}(p^{2i} − 1).
    Even dimension 2m:  2·p^{m(m−1)}·(p^m − ε)·∏_{i=1}^{m−1}(p^{2i} − 1).
    """
    _check_odd_prime(p)
    if dim < 1:
        raise InvalidArgumentError("Dimension must be positive")
    m, odd = divmod(dim, 2)
    if odd:
        if epsilon is not None:
            raise InvalidArgumentError("ε is only defined in even dimension")
        return 2 * p ** (m * m) * math.prod(p ** (2 * i) - 1 for i in range(1, m + 1))
    if epsilon not in (1, -1):
        raise InvalidArgumentError("Even dimension requires ε = ±1")
    return (
        2
        * p ** (m * (m - 1))
        * (p**m - epsilon)
        * math.prod(p ** (2 * i) - 1 for i in range(1, m))
    )


def standard_space(dim: int, p: int, epsilon: Sign | None = None) -> FpQuadraticSpace:
    """A diagonal model ⟨1,…,1,θ⟩ realising the requested invariant."""
    _check_odd_prime(p)
    diag = [1] * dim
    if dim % 2 == 0:
        target = epsilon if epsilon is not None else 1
        # ε of ⟨1,…,1⟩ is the class of (-1)^m; swap the last entry if needed
        if square_class((-1) ** (dim // 2), p) != target:
            diag[-1] = _non_square(p)
    gram = [[diag[i] if i == j else 0 for j in range(dim)] for i in range(dim)]
    return classify_fp_space(gram, p)


def brute_force_orthogonal_order(
    space: FpQuadraticSpace, options: OracleOptions | None = None
) -> int:
    """Exhaustive count of matrices g over 𝔽_p with gᵀ·G·g = G.

    Columns are chosen one at a time among all p^dim vectors, keeping only
    those whose norm and pairings with the earlier columns match G.
    """
    options = options or OracleOptions()
    p, n = space.p, space.dim
    size = p ** (n * n)
    if size > options.brute_force_budget:
        raise BudgetExceededError(size, options.brute_force_budget)

    gram = np.array(space.gram, dtype=np.int64)
    vectors = _all_vectors(n, p)
    pairing = (vectors @ gram) % p
    norms = np.einsum("ij,ij->i", pairing, vectors) % p

    first = np.flatnonzero(norms == gram[0, 0])

    def count_from(index: int) -> int:
        return _extend([index], vectors, pairing, norms, gram, p)

    return sum(ordered_map(count_from, [int(i) for i in first], options.threads))


def _extend(
    chosen: list[int],
    vectors: npt.NDArray[np.int64],
    pairing: npt.NDArray[np.int64],
    norms: npt.NDArray[np.int64],
    gram: npt.NDArray[np.int64],
    p: int,
) -> int:
    k = len(chosen)
    n = gram.shape[0]
    if k == n:
        return 1
    mask = norms == gram[k, k]
    for j, index in enumerate(chosen):
        mask &= (pairing @ vectors[index]) % p == gram[j, k]
    return sum(
        _extend([*chosen, int(i)], vectors, pairing, norms, gram, p)
        for i in np.flatnonzero(mask)
    )


def _all_vectors(n: int, p: int) -> npt.NDArray[np.int64]:
    grids = np.meshgrid(*([np.arange(p, dtype=np.int64)] * n), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _non_square(p: int) -> int:
    return next(x for x in range(2, p) if legendre_symbol(x, p) == -1)


def _check_odd_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise InvalidArgumentError(f"p must be an odd prime, got {p}")
