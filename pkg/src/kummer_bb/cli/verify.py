"""Seeded verification suites over every module, reported as pass/fail checks."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime, legendre_symbol

from ..boundary import (
    NormalForm,
    Row,
    boundary_points,
    build_boundary_graph,
    build_boundary_graph_L2,
    classify_isotropic_vector,
    classify_rank2_L2,
    curve_count_bounds,
    lift_parabolic,
    project_to_E,
    random_gamma1,
    rank2_normal_form,
    rank2_representatives,
)
from ..config import DEFAULT_SEED, OracleOptions, logger
from ..errors import InvalidArgumentError, KummerBBError
from ..finite import (
    DiscElement,
    Sign,
    automorphisms,
    brute_force_orthogonal_order,
    finite_orthogonal_order,
    isotropic_elements,
    standard_space,
)
from ..isometry import (
    Isometry,
    check_prime,
    eichler_invariant,
    eichler_transvection,
    extend_isometry_to_L2,
    hyperplane_equivalence,
    in_gamma,
    in_stable,
    index_bound,
    index_bound_refined,
    orientation_sign,
    random_primitive_vector,
    random_transvection_data,
    random_transvection_word,
    reduce_vector_mod_p,
    reflection,
    spinor_norm,
)
from ..lattice import Lattice, LatticeVector, Sublattice, discriminant_module, make_L2d
from ..linalg import int_matrix
from .models import CheckResult, VerifyReport

Outcome = tuple[bool, int] | tuple[bool, int, str | None]
Witness = tuple[LatticeVector, tuple[int, DiscElement]]


@dataclass(frozen=True)
class VerifyParams:
    p: int | None = None
    seed: int = DEFAULT_SEED
    dim: int = 3
    samples: int | None = None
    options: OracleOptions = field(default_factory=OracleOptions)

    def primes(self, default: Sequence[int]) -> tuple[int, ...]:
        return (self.p,) if self.p is not None else tuple(default)

    def n(self, default: int) -> int:
        return min(default, self.samples) if self.samples else default

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _check(name: str, fn: Callable[[], Outcome]) -> CheckResult:
    try:
        outcome = fn()
    except KummerBBError as exc:
        logger.exception("Check %s raised", name)
        return CheckResult(name=name, passed=False, count=0, detail=f"{exc.code}: {exc}")
    detail = outcome[2] if len(outcome) == 3 else None
    return CheckResult(name=name, passed=outcome[0], count=outcome[1], detail=detail)


# ── Discriminant groups and boundary points ─────────────────────────


def _isotropic(p: int, options: OracleOptions) -> Outcome:
    module = discriminant_module(make_L2d(p * p), "marked")
    found = {x.coords for x in isotropic_elements(module, options)}
    expected = {(0, 2 * k * p) for k in range(p)} | {(3, (2 * k + 1) * p) for k in range(p)}
    return found == expected, len(found)


def suite_isotropic(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((5, 7, 11, 13))
    for p in primes:
        check_prime(p)
    return [_check(f"isotropic p={p}", lambda p=p: _isotropic(p, params.options)) for p in primes]


def distinct_up_to_sign(classes: list[DiscElement]) -> bool:
    """No two classes agree up to ±, the sign ambiguity of v*."""
    keys = {min(c.coords, (-c).coords) for c in classes}
    return len(keys) == len(classes)


def _points(p: int) -> Outcome:
    points = boundary_points(p)
    classes = []
    mismatches = []
    for pt in points:
        if pt.note:
            continue
        got = classify_isotropic_vector(pt.representative)
        k = min(pt.k, p - pt.k) if pt.family == "p" and pt.k is not None else pt.k
        if (got.family, got.k) != (pt.family, k):
            mismatches.append(pt.id)
        classes.append(pt.star_class)
    module = discriminant_module(make_L2d(p * p), "marked")
    isotropic = {x.coords for x in isotropic_elements(module)}
    covered = {c.coords for c in classes} | {(-c).coords for c in classes}
    distinct = distinct_up_to_sign(classes)
    ok = len(points) == (3 * p + 3) // 2 and not mismatches and distinct and covered == isotropic
    if mismatches:
        return ok, len(points), f"misclassified {mismatches}"
    return ok, len(points), "classes exhaust D(L)" if distinct else "classes repeat up to sign"


def suite_points(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((5, 7, 11))
    for p in primes:
        check_prime(p)
    return [_check(f"points p={p}", lambda p=p: _points(p)) for p in primes]


def _incidence(p: int) -> Outcome:
    graph = build_boundary_graph(p)
    degrees = [graph.degree(c.id) for c in graph.curves]
    return degrees == [1, 2, p + 1, (3 * p + 3) // 2], len(graph.edges), f"degrees {degrees}"


def suite_incidence(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((5, 7))
    for p in primes:
        check_prime(p)
    return [_check(f"incidence p={p}", lambda p=p: _incidence(p)) for p in primes]


def suite_l2_graph(params: VerifyParams) -> list[CheckResult]:
    def chain() -> Outcome:
        graph = build_boundary_graph_L2()
        expected = {("C1", "P1"), ("C1", "P2"), ("C2", "P2"), ("C2", "P3")}
        ok = set(graph.edges) == expected and len(graph.points) == 3 and len(graph.curves) == 2
        return ok, len(graph.edges)

    def orbits() -> Outcome:
        graph = build_boundary_graph_L2()
        labels = [classify_rank2_L2(c.representative)[0] for c in graph.curves]
        return labels == ["trivial", "C2"], len(labels), ", ".join(labels)

    def automorphism_count() -> Outcome:
        count = len(automorphisms(discriminant_module(make_L2d(1))))
        return count == 2, count

    return [
        _check("L2 chain", chain),
        _check("L2 plane orbits", orbits),
        _check("O(D(L2))", automorphism_count),
    ]


# ── Finite fields and bounds ────────────────────────────────────────


def suite_orders(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((3, 5, 7))
    if any(p < 3 or not isprime(p) for p in primes):
        raise InvalidArgumentError("p must be an odd prime", primes)
    if params.dim < 1:
        raise InvalidArgumentError("Dimension must be positive", params.dim)

    def compare(dim: int, p: int, epsilon: Sign | None) -> Outcome:
        formula = finite_orthogonal_order(dim, p, epsilon)
        brute = brute_force_orthogonal_order(standard_space(dim, p, epsilon), params.options)
        return formula == brute, formula, None if formula == brute else f"brute force {brute}"

    signs: tuple[Sign, Sign] = (1, -1)
    cases: list[tuple[int, int, Sign | None]] = [
        (dim, p, eps)
        for p in primes
        for dim in range(1, params.dim + 1)
        for eps in (signs if dim % 2 == 0 else (None,))
    ]
    if params.p is None:
        cases += [(2, 11, eps) for eps in signs]
    return [
        _check(f"O({dim}, {p}){'' if eps is None else f' eps={eps:+d}'}", lambda c=(dim, p, eps): compare(*c))
        for dim, p, eps in cases
    ]


def suite_index(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((5, 7, 11))
    for p in primes:
        check_prime(p)

    def run(p: int) -> Outcome:
        bound, refined = index_bound(p), index_bound_refined(p)
        ok = bound == 2 * (p**5 + p**2) and refined in (2 * (p**5 - p**2), bound)
        return ok, bound, f"refined {refined}"

    return [_check(f"index p={p}", lambda p=p: run(p)) for p in primes]


def suite_bounds(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((5, 7))
    for p in primes:
        check_prime(p)

    def run(p: int) -> Outcome:
        bounds = curve_count_bounds(p)
        ok = all(b.literal == b.derived for b in bounds)
        detail = ", ".join(f"type {b.label}: {b.literal}" for b in bounds)
        return ok, len(bounds), detail

    return [_check(f"bounds p={p}", lambda p=p: run(p)) for p in primes]


# ── Isometries ──────────────────────────────────────────────────────


def _transvection_failure(
    e: LatticeVector, a: LatticeVector, witnesses: list[Witness]
) -> str | None:
    g = eichler_transvection(e, a)
    if g(e) != e:
        return "does not fix e"
    if not in_stable(g):
        return "acts on D(L)"
    if spinor_norm(g) != 1 or orientation_sign(g) != 1:
        return "spinor norm -1"
    for v, invariant in witnesses:
        if eichler_invariant(g(v)) != invariant:
            return f"moves the Eichler invariant of {v.coords}"
    return None


def suite_transvections(params: VerifyParams) -> list[CheckResult]:
    rng = params.rng()
    checks = []
    for lattice in (make_L2d(1), make_L2d(25)):
        witnesses = [
            (v, eichler_invariant(v))
            for v in (random_primitive_vector(lattice, rng) for _ in range(params.n(100)))
        ]
        data = [random_transvection_data(lattice, rng) for _ in range(params.n(500))]

        def run(
            data: list[tuple[LatticeVector, LatticeVector]] = data,
            witnesses: list[Witness] = witnesses,
        ) -> Outcome:
            for e, a in data:
                reason = _transvection_failure(e, a, witnesses)
                if reason is not None:
                    return False, len(data), f"t({e.coords}, {a.coords}) {reason}"
            return True, len(data)

        checks.append(_check(f"transvections {lattice.name}", run))
    return checks


def _gamma_sample(lattice: Lattice, rng: np.random.Generator) -> Isometry:
    g = random_transvection_word(lattice, rng, length=3)
    if int(rng.integers(2)):
        g = reflection(lattice.mark("w")) @ g
    return g


def suite_extension(params: VerifyParams) -> list[CheckResult]:
    p = params.p if params.p is not None else 5
    check_prime(p)
    rng = params.rng()
    lattice = make_L2d(p * p)
    elements = [_gamma_sample(lattice, rng) for _ in range(params.n(100))]
    pairs = [(_gamma_sample(lattice, rng), _gamma_sample(lattice, rng)) for _ in range(params.n(50))]
    words = [_gamma_sample(make_L2d(1), rng) for _ in range(params.n(50))]

    def extends() -> Outcome:
        for g in elements:
            if not in_gamma(g):
                return False, len(elements), "sample outside Gamma"
            if not in_gamma(extend_isometry_to_L2(g)):
                return False, len(elements), "extension outside Gamma_2"
        return True, len(elements)

    def homomorphism() -> Outcome:
        for g, h in pairs:
            if extend_isometry_to_L2(g @ h).matrix != (extend_isometry_to_L2(g) @ extend_isometry_to_L2(h)).matrix:
                return False, len(pairs)
        return True, len(pairs)

    def l2_generators() -> Outcome:
        return all(in_gamma(g) for g in words), len(words)

    return [
        _check(f"extension p={p}", extends),
        _check(f"extension composition p={p}", homomorphism),
        _check("O+(L2) generators in Gamma_2", l2_generators),
    ]


def suite_lifts(params: VerifyParams) -> list[CheckResult]:
    p = params.p if params.p is not None else 5
    check_prime(p)
    rng = params.rng()
    checks = []
    for a, e in rank2_representatives(p):
        nf = rank2_normal_form(e)
        sample = [random_gamma1(a, rng) for _ in range(params.n(50))]

        def run(
            sample: list[tuple[Row, Row]] = sample, e: Sublattice = e, nf: NormalForm = nf
        ) -> Outcome:
            lifts = []
            for u in sample:
                g = lift_parabolic(u, e, nf)
                if project_to_E(g, nf) != int_matrix(u):
                    return False, len(sample), f"projection of the lift of {u}"
                lifts.append(g)
            for (u1, g1), (u2, g2) in zip(zip(sample, lifts), zip(sample[1:], lifts[1:])):
                if project_to_E(g1 @ g2, nf) != int_matrix(u1) * int_matrix(u2):
                    return False, len(sample), "projection is not multiplicative"
            return True, len(sample)

        checks.append(_check(f"lifts type {a}", run))
    return checks


def _anisotropic(lattice: Lattice, rng: np.random.Generator, p: int) -> LatticeVector:
    while True:
        v = random_primitive_vector(lattice, rng)
        if v.norm % p:
            return v


def suite_hyperplanes(params: VerifyParams) -> list[CheckResult]:
    primes = params.primes((5, 7))
    for p in primes:
        check_prime(p)
    rng = params.rng()
    lattice = make_L2d(1)
    checks = []
    for p in primes:
        vectors = [_anisotropic(lattice, rng, p) for _ in range(params.n(200))]
        pairs = []
        while len(pairs) < params.n(100):
            u, v = _anisotropic(lattice, rng, p), _anisotropic(lattice, rng, p)
            if legendre_symbol(u.norm * v.norm % p, p) == 1:
                pairs.append((u, v))

        def reductions(p: int = p, vectors: list[LatticeVector] = vectors) -> Outcome:
            for w in vectors:
                reduce_vector_mod_p(w, p)
            return True, len(vectors)

        def equivalences(p: int = p, pairs: list[tuple[LatticeVector, LatticeVector]] = pairs) -> Outcome:
            for u, v in pairs:
                hyperplane_equivalence(u, v, p)
            return True, len(pairs)

        checks.append(_check(f"hyperplane reduction p={p}", reductions))
        checks.append(_check(f"hyperplane equivalence p={p}", equivalences))
    return checks


SUITES: dict[str, Callable[[VerifyParams], list[CheckResult]]] = {
    "isotropic": suite_isotropic,
    "points": suite_points,
    "incidence": suite_incidence,
    "orders": suite_orders,
    "index": suite_index,
    "transvections": suite_transvections,
    "lifts": suite_lifts,
    "extension": suite_extension,
    "hyperplanes": suite_hyperplanes,
    "bounds": suite_bounds,
    "l2-graph": suite_l2_graph,
}


def run_suite(name: str, params: VerifyParams) -> VerifyReport:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise InvalidArgumentError(f"Unknown suite {name!r}", sorted([*SUITES, "all"]))
    checks = []
    for suite in names:
        logger.info("Running verification suite %s (seed %d)", suite, params.seed)
        checks.extend(SUITES[suite](params))
    return VerifyReport(
        suite=name, seed=params.seed, passed=all(c.passed for c in checks), checks=checks
    )
