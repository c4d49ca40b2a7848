"""Shared helpers: seeded random instances for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from apolar_kit.polyring import (
    FAMILY_PRIMAL,
    LinearForm,
    Polynomial,
    divides_linear,
    exponents_of_degree,
)


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-6, 6)
    if not zero_ok:
        while num == 0:
            num = rng.randint(-6, 6)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_poly(rng: random.Random, n: int, degree: int, family: str = FAMILY_PRIMAL,
                terms: int = 4, homogeneous: bool = True) -> Polynomial:
    """A random nonzero polynomial; homogeneous of the exact degree when asked."""
    while True:
        chosen: dict = {}
        pool = (exponents_of_degree(n, degree) if homogeneous
                else [e for d in range(degree + 1) for e in exponents_of_degree(n, d)])
        for _ in range(terms):
            exp = rng.choice(pool)
            chosen[exp] = chosen.get(exp, Fraction(0)) + random_rational(rng)
        poly = Polynomial(n, family, chosen)
        if not poly.is_zero() and (not homogeneous or poly.homogeneous_degree() == degree):
            return poly


def random_linear_form(rng: random.Random, n: int,
                       family: str = FAMILY_PRIMAL) -> LinearForm:
    while True:
        coeffs = tuple(random_rational(rng) for _ in range(n + 1))
        if any(coeffs):
            return LinearForm(coeffs, family)


def random_gad(rng: random.Random, n: int, degree: int, max_summands: int = 3,
               max_k: int | None = None):
    """A valid random decomposition: distinct support directions, cofactors
    prime to their supports."""
    from apolar_kit.schemes import gad_validate

    count = rng.randint(1, max_summands)
    supports: list[LinearForm] = []
    while len(supports) < count:
        candidate = random_linear_form(rng, n)
        if not any(candidate.is_proportional(f) for f in supports):
            supports.append(candidate)
    summands = []
    for support in supports:
        top = degree if max_k is None else min(max_k, degree)
        k = rng.randint(0, top)
        while True:
            cofactor = (Polynomial.constant(n, FAMILY_PRIMAL,
                                            random_rational(rng, zero_ok=False))
                        if k == 0 else random_poly(rng, n, k, terms=3))
            if not divides_linear(support, cofactor):
                break
        summands.append((support, k, cofactor))
    return gad_validate(degree, summands)


@pytest.fixture
def rng() -> random.Random:
    return make_rng(20260808)
