"""Exact sparse multivariate polynomial arithmetic over the rationals.

Polynomials live in one of two graded rings with a fixed number of
variables: the primal ring (variables ``X0..Xn``) or the dual ring
(variables ``Y0..Yn``).  A polynomial is a finite map from exponent
tuples of length ``n + 1`` to nonzero :class:`fractions.Fraction`
coefficients; zero coefficients are never stored.

Each polynomial additionally carries a coefficient *convention*:

* ``standard`` -- coefficients are relative to the monomial basis ``X^a``;
* ``divided-powers`` -- coefficients are relative to the basis
  ``X^a / a!``.

The two conventions share the representation; conversion is a per-term
scale by ``a!``.  Multiplication and substitution are only defined for
standard-convention operands, which keeps the divided-powers flag from
silently producing wrong products.

All coefficients are exact rationals.  This is a deliberate restriction:
every supported computation stays inside the rationals, so no algebraic
field extensions are implemented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]

FAMILY_PRIMAL = "X"
FAMILY_DUAL = "Y"

STANDARD = "standard"
DIVIDED = "divided-powers"


class ApolarKitError(Exception):
    """Base class for all domain errors raised by this package."""


class FamilyMismatchError(ApolarKitError):
    pass


class ConventionError(ApolarKitError):
    pass


class NonHomogeneousError(ApolarKitError):
    pass


class ParseError(ApolarKitError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def exponent_degree(exp: Exponent) -> int:
    return sum(exp)


def exponent_factorial(exp: Exponent) -> int:
    out = 1
    for e in exp:
        out *= math.factorial(e)
    return out


def exponents_of_degree(n: int, degree: int,
                        slots: Iterable[int] | None = None) -> list[Exponent]:
    """All exponent tuples of the given total degree on ``n + 1`` slots.

    ``slots`` restricts which variables may appear; the order is degree-graded
    lexicographic on the allowed slots (lowest index varies last), matching the
    label layout used for Hankel matrices.
    """
    width = n + 1
    allowed = list(range(width)) if slots is None else sorted(slots)

    def build(remaining: int, position: int) -> Iterator[tuple[int, ...]]:
        if position == len(allowed) - 1:
            yield (remaining,)
            return
        for e in range(remaining, -1, -1):
            for rest in build(remaining - e, position + 1):
                yield (e,) + rest

    out: list[Exponent] = []
    if not allowed:
        return [(0,) * width] if degree == 0 else []
    for packed in build(degree, 0):
        exp = [0] * width
        for slot, e in zip(allowed, packed):
            exp[slot] = e
        out.append(tuple(exp))
    return out


def exponents_up_to_degree(n: int, degree: int,
                           slots: Iterable[int] | None = None) -> list[Exponent]:
    out: list[Exponent] = []
    for d in range(degree + 1):
        out.extend(exponents_of_degree(n, d, slots))
    return out


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("n", "family", "convention", "_terms")

    def __init__(self, n: int, family: str, terms: Mapping[Exponent, Fraction],
                 convention: str = STANDARD):
        if family not in (FAMILY_PRIMAL, FAMILY_DUAL):
            raise ValueError(f"unknown family {family!r}")
        if convention not in (STANDARD, DIVIDED):
            raise ValueError(f"unknown convention {convention!r}")
        width = n + 1
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {width}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            coeff = _as_fraction(coeff)
            if coeff:
                clean[exp] = coeff
        self.n = n
        self.family = family
        self.convention = convention
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int, family: str, convention: str = STANDARD) -> "Polynomial":
        return cls(n, family, {}, convention)

    @classmethod
    def constant(cls, n: int, family: str, value, convention: str = STANDARD) -> "Polynomial":
        return cls(n, family, {(0,) * (n + 1): _as_fraction(value)}, convention)

    @classmethod
    def variable(cls, n: int, family: str, index: int) -> "Polynomial":
        if not 0 <= index <= n:
            raise ValueError(f"variable index {index} out of range for n={n}")
        exp = [0] * (n + 1)
        exp[index] = 1
        return cls(n, family, {tuple(exp): Fraction(1)})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def total_degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        return max(exponent_degree(e) for e in self._terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if mixed or zero."""
        degrees = {exponent_degree(e) for e in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.homogeneous_degree() is not None

    def used_variables(self) -> set[int]:
        used: set[int] = set()
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        return used

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.family != other.family:
            raise FamilyMismatchError(
                f"cannot combine {self.family}-family with {other.family}-family")
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: n={self.n} vs n={other.n}")
        if self.convention != other.convention:
            raise ConventionError(
                f"cannot combine {self.convention} with {other.convention}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out.get(exp, Fraction(0)) + coeff
        return Polynomial(self.n, self.family, out, self.convention)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, self.family,
                          {e: -c for e, c in self._terms.items()}, self.convention)

    def scale(self, value) -> "Polynomial":
        value = _as_fraction(value)
        if not value:
            return Polynomial.zero(self.n, self.family, self.convention)
        return Polynomial(self.n, self.family,
                          {e: c * value for e, c in self._terms.items()}, self.convention)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        if self.convention != STANDARD:
            raise ConventionError("products are only defined in the standard convention")
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, Fraction(0)) + ca * cb
        return Polynomial(self.n, self.family, out)

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not defined")
        result = Polynomial.constant(self.n, self.family, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.n == other.n and self.family == other.family
                and self.convention == other.convention and self._terms == other._terms)

    __hash__ = None  # mutable-looking container; identity hashing would mislead

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- structure ----------------------------------------------------

    def leading_exponent(self, order: "MonomialOrder") -> Exponent:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: "MonomialOrder") -> Fraction:
        return self._terms[self.leading_exponent(order)]

    def monic(self, order: "MonomialOrder") -> "Polynomial":
        lc = self.leading_coefficient(order)
        return self.scale(Fraction(1) / lc)

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial(self.n, self.family,
                          {e: c for e, c in self._terms.items()
                           if exponent_degree(e) == degree},
                          self.convention)

    def map_family(self, family: str) -> "Polynomial":
        """Reinterpret the same coefficient data in the other ring."""
        return Polynomial(self.n, family, self._terms, self.convention)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplicative order on exponent tuples with 1 minimal.

    ``kind`` is one of ``grevlex``, ``grlex``, ``lex`` or ``elim``;
    elimination orders compare the leading ``block`` variables first, so a
    Groebner basis eliminates them.
    """

    kind: str
    block: int = 0

    def key(self, exp: Exponent):
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        if self.kind == "grlex":
            return (exponent_degree(exp), exp)
        if self.kind == "lex":
            return exp
        if self.kind == "elim":
            return (_grevlex_key(exp[:self.block]), _grevlex_key(exp[self.block:]))
        raise ValueError(f"unknown order kind {self.kind!r}")

    def compare(self, a: Exponent, b: Exponent) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


_grevlex_cache: dict[Exponent, tuple] = {}


def _grevlex_key(exp: Exponent):
    key = _grevlex_cache.get(exp)
    if key is None:
        key = (sum(exp), tuple(-e for e in reversed(exp)))
        _grevlex_cache[exp] = key
    return key


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


# ---------------------------------------------------------------------------
# linear forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearForm:
    """A nonzero homogeneous linear form given by its coefficient vector."""

    coefficients: tuple[Fraction, ...]
    family: str = FAMILY_PRIMAL

    def __post_init__(self):
        coeffs = tuple(_as_fraction(c) for c in self.coefficients)
        if not any(coeffs):
            raise ValueError("a linear form must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def pivot(self) -> int:
        """Index of the first nonzero coefficient."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        raise AssertionError("unreachable: linear form is nonzero")

    def normalized(self) -> "LinearForm":
        """Scale so the pivot coefficient is 1."""
        p = self.pivot()
        scale = Fraction(1) / self.coefficients[p]
        return LinearForm(tuple(c * scale for c in self.coefficients), self.family)

    def to_poly(self) -> Polynomial:
        n = self.n
        terms: dict[Exponent, Fraction] = {}
        for i, c in enumerate(self.coefficients):
            if c:
                exp = [0] * (n + 1)
                exp[i] = 1
                terms[tuple(exp)] = c
        return Polynomial(n, self.family, terms)

    def is_proportional(self, other: "LinearForm") -> bool:
        if len(self.coefficients) != len(other.coefficients):
            return False
        ratio: Fraction | None = None
        for a, b in zip(self.coefficients, other.coefficients):
            if (a == 0) != (b == 0):
                return False
            if a:
                r = b / a
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return True

    def __str__(self) -> str:
        return format_poly(self.to_poly())

    @classmethod
    def from_poly(cls, poly: Polynomial) -> "LinearForm":
        if poly.is_zero() or poly.homogeneous_degree() != 1:
            raise ValueError(f"not a nonzero linear form: {poly}")
        coeffs = [Fraction(0)] * (poly.n + 1)
        for exp, c in poly.items():
            coeffs[exp.index(1)] = c
        return cls(tuple(coeffs), poly.family)


def parse_linear_form(text: str, n: int, family: str = FAMILY_PRIMAL) -> LinearForm:
    return LinearForm.from_poly(parse_poly(text, n, family))


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------

# Grammar (whitespace ignored, no implicit multiplication):
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ['^' nat]
#   atom   := int ['/' nat] | var | '(' expr ')'
#   var    := ('X'|'Y'|'x'|'y') nat
# Parenthesised sub-expressions extend the printed grammar so that factored
# inputs such as "(X0+X1)^2*X2" are accepted; printing never emits them.


class _Parser:
    def __init__(self, text: str, n: int, family: str | None):
        self.text = text
        self.pos = 0
        self.n = n
        self.family = family

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def read_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def parse_expr(self) -> Polynomial:
        negate = self.take("-")
        poly = self.parse_term()
        if negate:
            poly = -poly
        while True:
            if self.take("+"):
                poly = poly + self.parse_term()
            elif self.take("-"):
                poly = poly - self.parse_term()
            else:
                return poly

    def parse_term(self) -> Polynomial:
        poly = self.parse_factor()
        while self.take("*"):
            poly = poly * self.parse_factor()
        return poly

    def parse_factor(self) -> Polynomial:
        atom = self.parse_atom()
        if self.take("^"):
            return atom ** self.read_nat()
        return atom

    def parse_atom(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return inner
        if ch.isdigit():
            numerator = self.read_nat()
            if self.take("/"):
                denominator = self.read_nat()
                if denominator == 0:
                    raise self.error("zero denominator")
                value = Fraction(numerator, denominator)
            else:
                value = Fraction(numerator)
            return Polynomial.constant(self.n, self._family(), value)
        if ch.upper() in (FAMILY_PRIMAL, FAMILY_DUAL):
            family = ch.upper()
            if self.family is None:
                self.family = family
            elif family != self.family:
                raise self.error(f"variable family {family} does not match {self.family}")
            self.pos += 1
            index = self.read_nat()
            if index > self.n:
                raise self.error(f"variable index {index} exceeds ambient dimension {self.n}")
            return Polynomial.variable(self.n, family, index)
        if ch == "":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {ch!r}")

    def _family(self) -> str:
        return self.family if self.family is not None else FAMILY_PRIMAL


def parse_poly(text: str, n: int, family: str | None = None,
               convention: str = STANDARD) -> Polynomial:
    """Parse ``text`` into a polynomial with ambient dimension ``n``.

    ``family`` fixes the expected variable letter; when None it is inferred
    from the first variable (constants default to the primal family).  With
    ``convention=DIVIDED`` the parsed coefficients are reinterpreted as
    divided-powers coefficients without rescaling.
    """
    if family is None:
        for ch in text:
            if ch.upper() in (FAMILY_PRIMAL, FAMILY_DUAL):
                family = ch.upper()
                break
    parser = _Parser(text, n, family)
    if parser.peek() == "":
        raise parser.error("empty input")
    poly = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        raise parser.error(f"trailing input {parser.text[parser.pos:]!r}")
    if family is not None and parser.family is None:
        poly = poly.map_family(family)
    elif parser.family is not None and poly.family != parser.family:
        poly = poly.map_family(parser.family)
    if convention == DIVIDED:
        return Polynomial(poly.n, poly.family, poly.terms, DIVIDED)
    return poly


def _format_coefficient(value: Fraction) -> str:
    return str(value)


def format_poly(poly: Polynomial) -> str:
    """Canonical rendering: grevlex-descending terms, coefficients as a/b."""
    if poly.is_zero():
        return "0"
    letter = poly.family
    parts: list[str] = []
    for exp in sorted(poly.terms, key=_grevlex_key, reverse=True):
        coeff = poly.terms[exp]
        factors = []
        for i, e in enumerate(exp):
            if e == 1:
                factors.append(f"{letter}{i}")
            elif e > 1:
                factors.append(f"{letter}{i}^{e}")
        magnitude = abs(coeff)
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coefficient(magnitude)] + factors)
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# divided powers
# ---------------------------------------------------------------------------


def to_divided_powers(poly: Polynomial) -> Polynomial:
    """Rescale standard coefficients onto the divided-powers basis.

    The coefficient of ``X^[a]`` is ``a!`` times the coefficient of ``X^a``.
    """
    if poly.convention != STANDARD:
        raise ConventionError("input must be in the standard convention")
    return Polynomial(poly.n, poly.family,
                      {e: c * exponent_factorial(e) for e, c in poly.items()},
                      DIVIDED)


def from_divided_powers(poly: Polynomial) -> Polynomial:
    if poly.convention != DIVIDED:
        raise ConventionError("input must be in the divided-powers convention")
    return Polynomial(poly.n, poly.family,
                      {e: c / exponent_factorial(e) for e, c in poly.items()},
                      STANDARD)


# ---------------------------------------------------------------------------
# substitution, (de)homogenisation, divisibility
# ---------------------------------------------------------------------------


def substitute_linear(poly: Polynomial, images: Mapping[int, Polynomial]) -> Polynomial:
    """Replace each variable by a degree <= 1 polynomial and expand.

    Variables missing from ``images`` map to themselves.  Degree is
    preserved whenever all images are homogeneous of degree one.
    """
    if poly.convention != STANDARD:
        raise ConventionError("substitution is only defined in the standard convention")
    n, family = poly.n, poly.family
    resolved: dict[int, Polynomial] = {}
    for index, image in images.items():
        if image.family != family:
            raise FamilyMismatchError(
                f"image of variable {index} is in the {image.family} family")
        if image.n != n:
            raise ValueError("image has a different ambient dimension")
        if image.total_degree() > 1:
            raise ValueError("images must have degree at most 1")
        resolved[index] = image

    power_cache: dict[tuple[int, int], Polynomial] = {}

    def image_power(index: int, exponent: int) -> Polynomial:
        key = (index, exponent)
        if key not in power_cache:
            base = resolved.get(index, Polynomial.variable(n, family, index))
            power_cache[key] = base ** exponent
        return power_cache[key]

    result = Polynomial.zero(n, family)
    for exp, coeff in poly.items():
        term = Polynomial.constant(n, family, coeff)
        for i, e in enumerate(exp):
            if e:
                term = term * image_power(i, e)
        result = result + term
    return result


def dehomogenize(poly: Polynomial, pivot: int) -> Polynomial:
    """Drop the pivot exponent of a homogeneous divided-powers polynomial.

    The remaining divided-powers coefficients are preserved, which realises
    evaluation of the pivot's divided-power monomials at 1.  The result lives
    in the same ambient ring with the pivot slot unused.
    """
    if poly.convention != DIVIDED:
        raise ConventionError("dehomogenisation acts on divided-powers input")
    if not poly.is_homogeneous():
        raise NonHomogeneousError("input must be homogeneous")
    terms: dict[Exponent, Fraction] = {}
    for exp, coeff in poly.items():
        local = list(exp)
        local[pivot] = 0
        key = tuple(local)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return Polynomial(poly.n, poly.family, terms, DIVIDED)


def homogenize_poly(poly: Polynomial, pivot: int, degree: int | None = None) -> Polynomial:
    """Multiply each term by pivot^(degree - term degree).

    Coefficients are untouched in either convention, so this is the exact
    inverse of :func:`dehomogenize` on divided-powers input.
    """
    top = poly.total_degree()
    if degree is None:
        degree = max(top, 0)
    if degree < top:
        raise ValueError(f"target degree {degree} is below the degree {top}")
    terms: dict[Exponent, Fraction] = {}
    for exp, coeff in poly.items():
        if exp[pivot]:
            raise ValueError(f"pivot variable {pivot} already occurs in {poly}")
        lifted = list(exp)
        lifted[pivot] = degree - exponent_degree(exp)
        terms[tuple(lifted)] = coeff
    return Polynomial(poly.n, poly.family, terms, poly.convention)


def divides_linear(form: LinearForm, poly: Polynomial) -> bool:
    """Decide whether ``poly`` lies in the principal ideal of ``form``.

    Substitutes the solved pivot variable of the form and tests for the zero
    polynomial; valid for homogeneous input.
    """
    if form.family != poly.family:
        raise FamilyMismatchError("linear form and polynomial families differ")
    if poly.is_zero():
        return True
    normal = form.normalized()
    p = normal.pivot()
    n = poly.n
    replacement = Polynomial.zero(n, poly.family)
    for i, c in enumerate(normal.coefficients):
        if i != p and c:
            replacement = replacement - Polynomial.variable(n, poly.family, i).scale(c)
    return substitute_linear(poly, {p: replacement}).is_zero()
