"""Apolarity actions, Hankel matrices, catalecticants and annihilators.

The dual ring acts on the primal ring in two equivalent ways: by
differentiation on standard coefficients and by exponent shifts on
divided-powers coefficients.  Truncated Hankel matrices of a local
dehomogenisation are assembled directly from those divided-powers
coefficients; their kernels generate local annihilator ideals.  Global
annihilators and Hilbert functions of apolar algebras come from
catalecticant ranks, all in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .groebner import GREVLEX, Ideal, buchberger, normal_form
from .polyring import (
    ApolarKitError,
    ConventionError,
    DIVIDED,
    Exponent,
    FAMILY_DUAL,
    FAMILY_PRIMAL,
    FamilyMismatchError,
    LinearForm,
    Polynomial,
    STANDARD,
    exponent_degree,
    exponent_factorial,
    exponents_of_degree,
    exponents_up_to_degree,
    from_divided_powers,
    homogenize_poly,
)


def _require_dual(poly: Polynomial) -> None:
    if poly.family != FAMILY_DUAL:
        raise FamilyMismatchError("the acting polynomial must be in the dual ring")


def derivation_apply(action: Polynomial, target: Polynomial) -> Polynomial:
    """Apply a dual polynomial to a standard primal polynomial by
    differentiation: Y^b sends X^a to a!/(a-b)! X^(a-b)."""
    _require_dual(action)
    if target.family != FAMILY_PRIMAL or target.convention != STANDARD:
        raise ConventionError("derivation acts on standard primal polynomials")
    if action.n != target.n:
        raise ApolarKitError("ambient dimension mismatch")
    out: dict[Exponent, Fraction] = {}
    for beta, g in action.items():
        for alpha, f in target.items():
            if all(a >= b for a, b in zip(alpha, beta)):
                exp = tuple(a - b for a, b in zip(alpha, beta))
                scale = 1
                for a, b in zip(alpha, beta):
                    scale *= math.perm(a, b)
                out[exp] = out.get(exp, Fraction(0)) + g * f * scale
    return Polynomial(target.n, FAMILY_PRIMAL, out)


def contraction_apply(action: Polynomial, target: Polynomial) -> Polynomial:
    """Apply a dual polynomial to a divided-powers polynomial by the
    exponent-shift contraction; satisfies g ⌟ F_dp = (g ∘ F)_dp."""
    _require_dual(action)
    if target.family != FAMILY_PRIMAL or target.convention != DIVIDED:
        raise ConventionError("contraction acts on divided-powers primal polynomials")
    if action.n != target.n:
        raise ApolarKitError("ambient dimension mismatch")
    out: dict[Exponent, Fraction] = {}
    for beta, g in action.items():
        for alpha, f in target.items():
            if all(a >= b for a, b in zip(alpha, beta)):
                exp = tuple(a - b for a, b in zip(alpha, beta))
                out[exp] = out.get(exp, Fraction(0)) + g * f
    return Polynomial(target.n, FAMILY_PRIMAL, out, DIVIDED)


# ---------------------------------------------------------------------------
# Hankel matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HankelMatrix:
    """Truncated Hankel matrix of a local dehomogenisation.

    Rows are labelled by local monomials up to the degree of the local
    polynomial, columns up to the truncation degree; the entry at (a, b)
    depends only on a + b.  Labels are exponent tuples on the ambient slots
    with the pivot unused.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    row_labels: tuple[Exponent, ...]
    col_labels: tuple[Exponent, ...]
    truncation: int
    pivot: int

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def to_json(self) -> dict:
        def label(exp: Exponent) -> str:
            factors = [f"y{i}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(exp) if e]
            return "*".join(factors) if factors else "1"

        return {
            "rows": [label(e) for e in self.row_labels],
            "cols": [label(e) for e in self.col_labels],
            "entries": [[str(x) for x in row] for row in self.entries],
        }


def hankel_entry(poly: Polynomial, alpha: Exponent, beta: Exponent,
                 pivot: int = 0) -> Fraction:
    """Hankel coefficient of a homogeneous degree-d polynomial at (a, b).

    Equals (d-s)! * g! * coeff(pivot^(d-s) X^g) with g = a + b and s = |g|,
    and zero once s exceeds d; this is the constant full derivative of the
    base-changed polynomial, read off without building the local form.
    """
    if not poly.is_homogeneous():
        raise ApolarKitError("hankel_entry needs homogeneous input")
    d = poly.homogeneous_degree()
    if d is None:
        return Fraction(0)
    gamma = tuple(a + b for a, b in zip(alpha, beta))
    if gamma[pivot]:
        raise ApolarKitError("labels must not involve the pivot variable")
    s = exponent_degree(gamma)
    if s > d:
        return Fraction(0)
    full = list(gamma)
    full[pivot] = d - s
    coeff = poly.coefficient(tuple(full))
    return coeff * math.factorial(d - s) * exponent_factorial(gamma)


def local_degree(local: Polynomial) -> int:
    return max(local.total_degree(), 0)


def hankel_matrix(poly: Polynomial, truncation: int, pivot: int = 0) -> HankelMatrix:
    """Truncated Hankel matrix of the dehomogenisation of ``poly`` at the
    pivot chart, with rows cut at the local degree (rows past it vanish)."""
    from .polyring import dehomogenize, to_divided_powers

    if poly.is_zero():
        cols = tuple(exponents_up_to_degree(poly.n, truncation,
                                            [i for i in range(poly.n + 1) if i != pivot]))
        zero = tuple(tuple(Fraction(0) for _ in cols) for _ in cols)
        return HankelMatrix(zero, cols, cols, truncation, pivot)
    local = dehomogenize(to_divided_powers(poly), pivot)
    return hankel_matrix_of_local(local, truncation, pivot)


def hankel_matrix_of_local(local: Polynomial, truncation: int,
                           pivot: int = 0) -> HankelMatrix:
    """Hankel matrix assembled from a local divided-powers polynomial: the
    entry at (a, b) is the divided-powers coefficient of x^(a+b)."""
    if local.convention != DIVIDED:
        raise ConventionError("local polynomial must be in divided powers")
    slots = [i for i in range(local.n + 1) if i != pivot]
    rows = tuple(exponents_up_to_degree(local.n, min(truncation, local_degree(local)), slots))
    cols = tuple(exponents_up_to_degree(local.n, truncation, slots))
    entries = tuple(
        tuple(local.coefficient(tuple(a + b for a, b in zip(alpha, beta)))
              for beta in cols)
        for alpha in rows
    )
    return HankelMatrix(entries, rows, cols, truncation, pivot)


def truncation_degree(local: Polynomial, degree: int | None = None,
                      pivot: int = 0) -> int:
    """Column truncation needed to display the local annihilator kernel.

    Returns degree + 1 when the local polynomial is (an affine slice of) a
    pure power of a linear-or-constant form, detected by the span of first
    derivatives of its homogenisation being at most a line; otherwise the
    local degree itself suffices.
    """
    if local.convention != DIVIDED:
        raise ConventionError("local polynomial must be in divided powers")
    e = local_degree(local) if degree is None else degree
    standard = from_divided_powers(local)
    if standard.total_degree() <= 0:
        return e + 1
    lifted = homogenize_poly(standard, pivot)
    if catalecticant_rank(lifted, 1) <= 1:
        return e + 1
    return e


def hankel_kernel(matrix: HankelMatrix) -> list[Polynomial]:
    """Kernel vectors of the matrix as monic dual polynomials, one per free
    column of the reduced echelon form."""
    rows = [list(row) for row in matrix.entries]
    vectors = _linalg.nullspace(rows, len(matrix.col_labels))
    n = len(matrix.col_labels[0]) - 1 if matrix.col_labels else 0
    polys = []
    for vec in vectors:
        terms = {exp: c for exp, c in zip(matrix.col_labels, vec) if c}
        poly = Polynomial(n, FAMILY_DUAL, terms)
        polys.append(poly.monic(GREVLEX))
    return polys


def prune_generators(gens: Sequence[Polynomial]) -> list[Polynomial]:
    """Drop generators lying in the ideal of the earlier, lower-degree ones."""
    ordered = sorted(gens, key=lambda g: (g.total_degree(),
                                          GREVLEX.key(g.leading_exponent(GREVLEX))))
    kept: list[Polynomial] = []
    basis = None
    for g in ordered:
        if basis is not None and normal_form(g, basis).is_zero():
            continue
        kept.append(g)
        basis = buchberger(kept, GREVLEX)
    return kept


def local_annihilator(local: Polynomial, pivot: int = 0,
                      truncation: int | None = None) -> list[Polynomial]:
    """Generators of the contraction annihilator of a local divided-powers
    polynomial.

    The kernel of the Hankel matrix truncated one past the local degree
    always generates the annihilator, so that is the default; pass a smaller
    ``truncation`` to reproduce a displayed matrix kernel instead.  Every
    returned generator is monic and none lies in the ideal of the others.
    """
    e = local_degree(local)
    if truncation is None:
        truncation = e + 1
    matrix = hankel_matrix_of_local(local, truncation, pivot)
    return prune_generators(hankel_kernel(matrix))


# ---------------------------------------------------------------------------
# catalecticants and global annihilators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Catalecticant:
    """Matrix of the map sending a degree-i dual form H to H ∘ F."""

    poly: Polynomial
    order: int
    row_labels: tuple[Exponent, ...]  # monomials of the target degree d - i
    col_labels: tuple[Exponent, ...]  # dual monomials of degree i
    entries: tuple[tuple[Fraction, ...], ...]

    def rank(self) -> int:
        return _linalg.rank([list(row) for row in self.entries])

    def kernel_polys(self) -> list[Polynomial]:
        vectors = _linalg.nullspace([list(row) for row in self.entries],
                                    len(self.col_labels))
        out = []
        for vec in vectors:
            terms = {exp: c for exp, c in zip(self.col_labels, vec) if c}
            out.append(Polynomial(self.poly.n, FAMILY_DUAL, terms).monic(GREVLEX))
        return out


def catalecticant(poly: Polynomial, order: int) -> Catalecticant:
    if not poly.is_homogeneous() or poly.is_zero():
        raise ApolarKitError("catalecticants need nonzero homogeneous input")
    d = poly.homogeneous_degree()
    if not 0 <= order <= d:
        raise ApolarKitError(f"differentiation order {order} outside 0..{d}")
    cols = tuple(exponents_of_degree(poly.n, order))
    rows = tuple(exponents_of_degree(poly.n, d - order))
    images = []
    for beta in cols:
        image = derivation_apply(Polynomial(poly.n, FAMILY_DUAL, {beta: Fraction(1)}), poly)
        images.append(image)
    entries = tuple(
        tuple(img.coefficient(alpha) for img in images)
        for alpha in rows
    )
    return Catalecticant(poly, order, rows, cols, entries)


def catalecticant_rank(poly: Polynomial, order: int) -> int:
    return catalecticant(poly, order).rank()


def apolar_hilbert_function(poly: Polynomial) -> list[int]:
    """Hilbert function of the apolar algebra, via catalecticant ranks."""
    d = poly.homogeneous_degree()
    if d is None:
        raise ApolarKitError("input must be nonzero homogeneous")
    return [catalecticant_rank(poly, i) for i in range(d + 1)]


def global_annihilator(poly: Polynomial, max_degree: int) -> Ideal:
    """Generators of the annihilator ideal up to the given degree.

    Collects catalecticant kernels degree by degree, discarding anything
    already generated lower down.
    """
    d = poly.homogeneous_degree()
    if d is None:
        raise ApolarKitError("input must be nonzero homogeneous")
    if max_degree > d + 1:
        max_degree = d + 1
    gens: list[Polynomial] = []
    for degree in range(1, max_degree + 1):
        if degree > d:
            # everything of degree d+1 annihilates; only new leads matter
            candidates = [Polynomial(poly.n, FAMILY_DUAL, {exp: Fraction(1)})
                          for exp in exponents_of_degree(poly.n, degree)]
        else:
            candidates = catalecticant(poly, degree).kernel_polys()
        if not gens:
            gens.extend(candidates)
            continue
        basis = buchberger(gens, GREVLEX)
        for cand in candidates:
            if not normal_form(cand, basis).is_zero():
                gens.append(cand)
                basis = buchberger(gens, GREVLEX)
    return Ideal(poly.n, FAMILY_DUAL, gens)


# ---------------------------------------------------------------------------
# graded vector spaces and inverse systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedVectorSpace:
    """A subspace of the degree-d slice of one of the two rings, held as a
    linearly independent basis of polynomials."""

    degree: int
    basis: tuple[Polynomial, ...]
    n: int
    family: str

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _coords(self, poly: Polynomial, labels: Sequence[Exponent]) -> list[Fraction]:
        return [poly.coefficient(exp) for exp in labels]

    def contains(self, poly: Polynomial) -> bool:
        if poly.is_zero():
            return True
        if poly.homogeneous_degree() != self.degree:
            return False
        labels = exponents_of_degree(self.n, self.degree)
        columns = [self._coords(b, labels) for b in self.basis]
        return _linalg.in_span(columns, self._coords(poly, labels))


def span_basis(polys: Sequence[Polynomial], degree: int, n: int,
               family: str) -> GradedVectorSpace:
    """Row-reduce a spanning set into a deterministic basis."""
    labels = exponents_of_degree(n, degree)
    rows = [[p.coefficient(exp) for exp in labels] for p in polys if not p.is_zero()]
    reduced, pivots = _linalg.rref(rows)
    basis = []
    for r in range(len(pivots)):
        terms = {exp: c for exp, c in zip(labels, reduced[r]) if c}
        basis.append(Polynomial(n, family, terms))
    return GradedVectorSpace(degree, tuple(basis), n, family)


def ideal_degree_slice(ideal: Ideal, degree: int) -> GradedVectorSpace:
    """The degree-d piece of a homogeneous ideal as a vector space, spanned
    by monomial multiples of the reduced Groebner generators."""
    spanning: list[Polynomial] = []
    for g in ideal.groebner(GREVLEX).elements:
        gdeg = g.homogeneous_degree()
        if gdeg is None:
            raise ApolarKitError("ideal_degree_slice needs homogeneous input")
        if gdeg > degree:
            continue
        for exp in exponents_of_degree(ideal.n, degree - gdeg):
            mono = Polynomial(ideal.n, ideal.family, {exp: Fraction(1)})
            spanning.append(mono * g)
    return span_basis(spanning, degree, ideal.n, ideal.family)


def inverse_system_slice(ideal: Ideal, degree: int) -> GradedVectorSpace:
    """The orthogonal complement of the ideal's degree-d slice under the
    apolarity pairing, inside the degree-d primal slice."""
    labels = exponents_of_degree(ideal.n, degree)
    slice_space = ideal_degree_slice(ideal, degree)
    # <Y^b, X^a> = a! on the diagonal, so scale dual coefficients by b!.
    rows = [[g.coefficient(exp) * exponent_factorial(exp) for exp in labels]
            for g in slice_space.basis]
    kernel = _linalg.nullspace(rows, len(labels))
    basis = []
    for vec in kernel:
        terms = {exp: c for exp, c in zip(labels, vec) if c}
        basis.append(Polynomial(ideal.n, FAMILY_PRIMAL, terms))
    return GradedVectorSpace(degree, tuple(basis), ideal.n, FAMILY_PRIMAL)


def dual_hyperplane_basis(form: LinearForm) -> list[LinearForm]:
    """Basis of the dual linear forms annihilating the given primal form."""
    coeffs = [Fraction(c) for c in form.coefficients]
    kernel = _linalg.nullspace([coeffs], form.n + 1)
    return [LinearForm(tuple(vec), FAMILY_DUAL) for vec in kernel]


def derivative_space_generators(poly: Polynomial, form: LinearForm,
                                order: int) -> list[tuple[Exponent, Polynomial]]:
    """Pairs (m, H_m ∘ poly) over the monomial basis of the order-th
    symmetric power of the dual hyperplane of the form.

    The exponent indexes the product of dual-basis elements, in the same
    enumeration as :func:`polyring.exponents_of_degree`.
    """
    duals = [h.to_poly() for h in dual_hyperplane_basis(form)]
    out = []
    for exp in exponents_of_degree(len(duals) - 1, order):
        action = Polynomial.constant(poly.n, FAMILY_DUAL, 1)
        for base, e in zip(duals, exp):
            for _ in range(e):
                action = action * base
        out.append((exp, derivation_apply(action, poly)))
    return out


def derivative_space(poly: Polynomial, form: LinearForm, order: int) -> GradedVectorSpace:
    """The span of order-th derivatives of ``poly`` along the dual
    hyperplane of ``form``."""
    degree = poly.homogeneous_degree()
    if degree is None:
        raise ApolarKitError("input must be nonzero homogeneous")
    if order > degree:
        raise ApolarKitError("derivative order exceeds the degree")
    images = [img for _, img in derivative_space_generators(poly, form, order)]
    return span_basis(images, degree - order, poly.n, FAMILY_PRIMAL)
