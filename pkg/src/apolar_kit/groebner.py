"""Reduced Groebner bases and the ideal calculus built on them.

Buchberger's algorithm with the coprimality and chain criteria is enough
for every instance this package meets (at most seven variables, low
degrees), and its output is interreduced to the unique reduced basis so
that golden comparisons are deterministic.  On top of it sit normal forms,
ideal membership/containment/equality, homogenisation, intersection via an
elimination variable, colon ideals, saturation, fat-point ideals and
Hilbert functions of zero-dimensional quotients.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .polyring import (
    ApolarKitError,
    Exponent,
    FAMILY_DUAL,
    GREVLEX,
    GRLEX,
    LinearForm,
    MonomialOrder,
    Polynomial,
    elimination_order,
    exponent_degree,
    exponents_of_degree,
    format_poly,
    parse_poly,
)

MAX_DEGREE_ENV = "APOLAR_KIT_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 24


class DimensionError(ApolarKitError):
    """The quotient is not finite over its degree-zero part."""


class ZeroDivisorError(ApolarKitError):
    pass


def _max_degree_guard() -> int:
    raw = os.environ.get(MAX_DEGREE_ENV, "")
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_DEGREE
    return value if value > 0 else DEFAULT_MAX_DEGREE


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _exp_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _monomial(poly: Polynomial, exp: Exponent, coeff: Fraction) -> Polynomial:
    return Polynomial(poly.n, poly.family, {exp: coeff})


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def leading_exponents(self) -> list[Exponent]:
        return [g.leading_exponent(self.order) for g in self.elements]


def normal_form(poly: Polynomial, basis: GroebnerBasis | Sequence[Polynomial],
                order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of full division by the basis; no term of the result is
    divisible by any leading monomial of the basis."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        divisors = basis.elements
    else:
        if order is None:
            order = GREVLEX
        divisors = tuple(basis)
    divisors = tuple(g for g in divisors if not g.is_zero())
    if poly.is_zero() or not divisors:
        return poly
    key = order.key
    table = [(g.leading_exponent(order), g.terms[g.leading_exponent(order)], g.terms)
             for g in divisors]
    work = dict(poly.terms)
    remainder: dict[Exponent, Fraction] = {}
    while work:
        exp = max(work, key=key)
        coeff = work[exp]
        for lead, lc, terms in table:
            if _divides(lead, exp):
                shift = _exp_sub(exp, lead)
                factor = coeff / lc
                for e, c in terms.items():
                    target = tuple(a + b for a, b in zip(shift, e))
                    value = work.get(target, 0) - factor * c
                    if value:
                        work[target] = value
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[exp] = coeff
            del work[exp]
    return Polynomial(poly.n, poly.family, remainder, poly.convention)


def _s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_exponent(order), g.leading_exponent(order)
    lcm = _exp_lcm(lf, lg)
    mf = _monomial(f, _exp_sub(lcm, lf), Fraction(1) / f.terms[lf])
    mg = _monomial(g, _exp_sub(lcm, lg), Fraction(1) / g.terms[lg])
    return mf * f - mg * g


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Unique reduced Groebner basis of the ideal generated by ``gens``."""
    import heapq

    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis(order, ())
    basis = [g.monic(order) for g in basis]
    leads = [g.leading_exponent(order) for g in basis]
    pairs: set[tuple[int, int]] = set()
    heap: list[tuple] = []

    def push_pair(i: int, j: int) -> None:
        pairs.add((i, j))
        heapq.heappush(heap, (order.key(_exp_lcm(leads[i], leads[j])), i, j))

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push_pair(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pairs.remove((i, j))
        lcm = _exp_lcm(leads[i], leads[j])
        # coprimality criterion
        if lcm == tuple(a + b for a, b in zip(leads[i], leads[j])):
            continue
        # chain criterion, strict form: both companion lcms properly divide
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(leads[k], lcm):
                continue
            if (_exp_lcm(leads[i], leads[k]) != lcm
                    and _exp_lcm(leads[j], leads[k]) != lcm
                    and (min(i, k), max(i, k)) not in pairs
                    and (min(j, k), max(j, k)) not in pairs):
                skip = True
                break
        if skip:
            continue
        remainder = normal_form(_s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero():
            continue
        remainder = remainder.monic(order)
        basis.append(remainder)
        leads.append(remainder.leading_exponent(order))
        new = len(basis) - 1
        for k in range(new):
            push_pair(k, new)

    # drop elements whose lead is reachable from another element
    minimal: list[Polynomial] = []
    for idx, g in enumerate(basis):
        lead = leads[idx]
        if any(k != idx and _divides(leads[k], lead)
               and (leads[k] != lead or k < idx) for k in range(len(basis))):
            continue
        minimal.append(g)
    # interreduce tails
    reduced: list[Polynomial] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        h = normal_form(g, others, order)
        if not h.is_zero():
            reduced.append(h.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_exponent(order)), reverse=True)
    return GroebnerBasis(order, tuple(reduced))


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


class Ideal:
    """A finitely generated ideal with per-order cached reduced bases."""

    __slots__ = ("n", "family", "generators", "_cache", "_lock")

    def __init__(self, n: int, family: str, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.family != family:
                raise ApolarKitError(f"generator {g} is not in the {family} family")
            if g.n != n:
                raise ApolarKitError("generator ambient dimension mismatch")
            if not g.is_zero():
                gens.append(g)
        self.n = n
        self.family = family
        self.generators = tuple(gens)
        self._cache: dict[tuple, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, texts: Iterable[str], n: int, family: str = FAMILY_DUAL) -> "Ideal":
        return cls(n, family, [parse_poly(t, n, family) for t in texts])

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        key = (order.kind, order.block)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None:
            return cached
        basis = buchberger(self.generators, order)
        with self._lock:
            return self._cache.setdefault(key, basis)

    def normal_form(self, poly: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        return normal_form(poly, self.groebner(order))

    def contains_poly(self, poly: Polynomial) -> bool:
        return self.normal_form(poly).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains_poly(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        return (self.groebner(GREVLEX).elements == other.groebner(GREVLEX).elements)

    def to_json(self) -> dict:
        return {
            "vars": self.n + 1,
            "family": self.family,
            "generators": [format_poly(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Ideal":
        n = int(data["vars"]) - 1
        family = data.get("family", FAMILY_DUAL)
        return cls.from_strings(data["generators"], n, family)

    def __repr__(self) -> str:
        gens = ", ".join(format_poly(g) for g in self.generators)
        return f"Ideal({gens})"


def ideal_membership(poly: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains_poly(poly)


def ideal_contains(ideal: Ideal, other: Ideal) -> bool:
    """True when ``other`` is a subset of ``ideal``."""
    return ideal.contains_ideal(other)


def ideal_equals(ideal: Ideal, other: Ideal) -> bool:
    return ideal.equals(other)


def homogenize_ideal(ideal: Ideal, pivot: int) -> Ideal:
    """Homogenisation by the pivot variable.

    Homogenising every element of a Groebner basis for a graded order yields
    generators of the homogenised ideal, which is saturated with respect to
    the pivot by construction.
    """
    from .polyring import homogenize_poly

    basis = buchberger(ideal.generators, GRLEX)
    lifted = [homogenize_poly(g, pivot) for g in basis.elements]
    return Ideal(ideal.n, ideal.family, lifted)


def intersect(left: Ideal, right: Ideal) -> Ideal:
    """Intersection via the single auxiliary-variable elimination trick."""
    if left.family != right.family or left.n != right.n:
        raise ApolarKitError("ideals live in different rings")
    if left.is_zero_ideal() or right.is_zero_ideal():
        return Ideal(left.n, left.family, [])
    n = left.n
    wide = n + 1  # one extra slot in front for the eliminator

    def lift(poly: Polynomial, weight: Polynomial) -> Polynomial:
        terms = {(0,) + exp: c for exp, c in poly.items()}
        return Polynomial(wide, poly.family, terms) * weight

    t = Polynomial.variable(wide, left.family, 0)
    one = Polynomial.constant(wide, left.family, 1)
    gens = [lift(g, t) for g in left.generators]
    gens += [lift(g, one - t) for g in right.generators]
    basis = buchberger(gens, elimination_order(1))
    kept: list[Polynomial] = []
    for g in basis.elements:
        if all(exp[0] == 0 for exp in g.terms):
            kept.append(Polynomial(n, left.family, {exp[1:]: c for exp, c in g.items()}))
    return Ideal(n, left.family, buchberger(kept, GREVLEX).elements)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ApolarKitError("empty intersection")
    result = ideals[0]
    for other in ideals[1:]:
        result = intersect(result, other)
    return result


def _exact_quotient(poly: Polynomial, divisor: Polynomial) -> Polynomial:
    """Quotient of an exact single-polynomial division."""
    order = GREVLEX
    quotient = Polynomial.zero(poly.n, poly.family)
    lead = divisor.leading_exponent(order)
    lc = divisor.terms[lead]
    work = poly
    while not work.is_zero():
        exp = work.leading_exponent(order)
        if not _divides(lead, exp):
            raise ZeroDivisorError(f"{divisor} does not divide {poly}")
        mono = _monomial(work, _exp_sub(exp, lead), work.terms[exp] / lc)
        quotient = quotient + mono
        work = work - mono * divisor
    return quotient


def ideal_quotient(ideal: Ideal, divisor: Polynomial) -> Ideal:
    """The colon ideal (I : (f))."""
    if divisor.is_zero():
        raise ZeroDivisorError("cannot form a colon ideal by zero")
    if divisor.total_degree() == 0:
        return ideal
    crossing = intersect(ideal, Ideal(ideal.n, ideal.family, [divisor]))
    gens = [_exact_quotient(g, divisor) for g in crossing.generators]
    return Ideal(ideal.n, ideal.family, gens)


def saturate(ideal: Ideal, divisor: Polynomial) -> Ideal:
    """The saturation (I : (f)^inf); iterates the colon until stable."""
    current = ideal
    while True:
        nxt = ideal_quotient(current, divisor)
        if nxt.equals(current):
            return current
        current = nxt


def point_ideal(point: LinearForm) -> Ideal:
    """Ideal of the projective point whose coordinates are the form's
    coefficients: the span of dual linear forms vanishing there."""
    coeffs = list(point.normalized().coefficients)
    n = point.n
    kernel = _linalg.nullspace([coeffs], n + 1)
    gens = []
    for vec in kernel:
        terms = {}
        for i, c in enumerate(vec):
            if c:
                exp = [0] * (n + 1)
                exp[i] = 1
                terms[tuple(exp)] = c
        gens.append(Polynomial(n, FAMILY_DUAL, terms))
    return Ideal(n, FAMILY_DUAL, gens)


def fat_point_ideal(point: LinearForm, power: int) -> Ideal:
    """The ``power``-th symbolic power of a point ideal, generated by all
    degree-``power`` products of its linear generators."""
    if power < 1:
        raise ApolarKitError("fat point multiplicity must be at least 1")
    base = point_ideal(point).generators
    n = point.n
    gens: list[Polynomial] = []
    for exp in exponents_of_degree(len(base) - 1, power):
        product = Polynomial.constant(n, FAMILY_DUAL, 1)
        for g, e in zip(base, exp):
            for _ in range(e):
                product = product * g
        gens.append(product)
    return Ideal(n, FAMILY_DUAL, gens)


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSequence:
    """Hilbert function values of a graded quotient.

    ``values`` runs from degree 0 through one confirmation step past
    stabilisation; ``limit`` is the eventual value (the scheme length for
    saturated zero-dimensional input) and ``stabilized_at`` the first degree
    attaining it.
    """

    values: tuple[int, ...]
    stabilized_at: int
    limit: int

    @property
    def regularity(self) -> int:
        return self.stabilized_at

    def value_at(self, degree: int) -> int:
        if degree < len(self.values):
            return self.values[degree]
        return self.limit

    def cli_values(self) -> list[int]:
        return list(self.values[: self.stabilized_at + 1])


def _quotient_dimension(leads: list[Exponent], width: int) -> int:
    """Combinatorial Krull dimension of R / (leading terms)."""
    if any(exponent_degree(e) == 0 for e in leads):
        return -1  # unit ideal
    best = 0
    for mask in range(1, 1 << width):
        subset = {i for i in range(width) if mask >> i & 1}
        if any(all(i in subset for i, e in enumerate(lead) if e) for lead in leads):
            continue
        best = max(best, len(subset))
    return best


def hilbert_sequence(ideal: Ideal) -> HilbertSequence:
    """Hilbert function of R/I for I homogeneous with dim R/I <= 1.

    Saturated zero-dimensional input stabilises at the scheme length; an
    Artinian input descends to zero.  Anything of higher dimension raises
    :class:`DimensionError`.
    """
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ApolarKitError("hilbert_sequence needs homogeneous generators")
    width = ideal.n + 1
    basis = ideal.groebner(GREVLEX)
    leads = basis.leading_exponents()
    dim = _quotient_dimension(leads, width)
    if dim > 1:
        raise DimensionError(
            f"quotient has dimension {dim}; Hilbert sequence would not stabilise")

    guard = _max_degree_guard()
    values: list[int] = []
    degree = 0
    while True:
        count = sum(
            1 for exp in exponents_of_degree(ideal.n, degree)
            if not any(_divides(lead, exp) for lead in leads)
        )
        values.append(count)
        if dim <= 0 and count == 0:
            limit = 0
            stabilized = degree
            while stabilized > 0 and values[stabilized - 1] == 0:
                stabilized -= 1
            return HilbertSequence(tuple(values), stabilized, limit)
        if dim == 1 and degree > 0 and values[degree - 1] == count:
            return HilbertSequence(tuple(values), degree - 1, count)
        degree += 1
        if degree > guard:
            raise DimensionError(
                f"Hilbert sequence did not stabilise below degree {guard}; "
                f"set {MAX_DEGREE_ENV} to raise the guard")


def radical_membership(poly: Polynomial, ideal: Ideal) -> bool:
    """Whether ``poly`` lies in the radical of ``ideal`` (Rabinowitsch)."""
    if poly.is_zero():
        return True
    n = ideal.n
    wide = n + 1
    lifted = [Polynomial(wide, ideal.family, {(0,) + exp: c for exp, c in g.items()})
              for g in ideal.generators]
    t = Polynomial.variable(wide, ideal.family, 0)
    f = Polynomial(wide, ideal.family, {(0,) + exp: c for exp, c in poly.items()})
    one = Polynomial.constant(wide, ideal.family, 1)
    gb = buchberger(lifted + [one - t * f], GREVLEX)
    return any(g.total_degree() == 0 for g in gb.elements)


def saturate_at_irrelevant(ideal: Ideal) -> Ideal:
    """Saturation by the irrelevant maximal ideal, for externally supplied
    ideals that are not known to be saturated.

    Uses (I : m^inf) = intersection over the variables of (I : Yi^inf).
    """
    result: Ideal | None = None
    for i in range(ideal.n + 1):
        part = saturate(ideal, Polynomial.variable(ideal.n, ideal.family, i))
        result = part if result is None else intersect(result, part)
    assert result is not None
    return result
