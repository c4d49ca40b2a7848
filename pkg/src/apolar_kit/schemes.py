"""Natural apolar schemes, generalized additive decompositions, and the
decision procedures built on them.

A natural apolar scheme is produced by a five-stage pipeline: base-change
the support onto a coordinate chart, pass to divided powers and
dehomogenise, take the kernel of a truncated Hankel matrix, homogenise the
resulting local ideal, and move the chart back under the dual change of
coordinates.  Unions of these schemes over the summands of a generalized
additive decomposition (GAD) give the scheme evinced by the decomposition;
the remaining operations interrogate such schemes: apolarity, regularity,
fat-point containment, redundancy certificates, support-independence
regularity guarantees, tangential shortening moves and the short-scheme
regularity criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .apolarity import (
    HankelMatrix,
    derivation_apply,
    derivative_space_generators,
    dual_hyperplane_basis,
    hankel_matrix_of_local,
    inverse_system_slice,
    local_annihilator,
    local_degree,
    truncation_degree,
)
from .groebner import (
    HilbertSequence,
    Ideal,
    _exact_quotient,
    fat_point_ideal,
    hilbert_sequence,
    homogenize_ideal,
    intersect_all,
    saturate,
    saturate_at_irrelevant,
)
from .polyring import (
    ApolarKitError,
    Exponent,
    FAMILY_DUAL,
    FAMILY_PRIMAL,
    LinearForm,
    Polynomial,
    divides_linear,
    dehomogenize,
    exponents_of_degree,
    format_poly,
    parse_linear_form,
    parse_poly,
    substitute_linear,
    to_divided_powers,
)


class GadError(ApolarKitError):
    pass


class NotApolarError(ApolarKitError):
    pass


class SubschemeError(ApolarKitError):
    pass


class InvariantError(ApolarKitError):
    """Two independently computed answers disagreed; a bug, not bad input."""


# ---------------------------------------------------------------------------
# base changes moving a support onto / off a coordinate chart
# ---------------------------------------------------------------------------


def primal_change(form: LinearForm) -> dict[int, Polynomial]:
    """Substitution sending the normalized form to its pivot variable."""
    normal = form.normalized()
    p = normal.pivot()
    n = normal.n
    image = Polynomial.variable(n, FAMILY_PRIMAL, p)
    for i, c in enumerate(normal.coefficients):
        if i != p and c:
            image = image - Polynomial.variable(n, FAMILY_PRIMAL, i).scale(c)
    return {p: image}


def primal_change_inverse(form: LinearForm) -> dict[int, Polynomial]:
    normal = form.normalized()
    p = normal.pivot()
    return {p: normal.to_poly()}


def dual_change(form: LinearForm) -> dict[int, Polynomial]:
    """Dual substitution carrying the pivot chart's origin to the support.

    Sends each non-pivot dual variable Yi to Yi - li * Ypivot, the sign that
    maps the chart origin's ideal onto the point ideal of the form.
    """
    normal = form.normalized()
    p = normal.pivot()
    n = normal.n
    images: dict[int, Polynomial] = {}
    for i, c in enumerate(normal.coefficients):
        if i != p and c:
            images[i] = (Polynomial.variable(n, FAMILY_DUAL, i)
                         - Polynomial.variable(n, FAMILY_DUAL, p).scale(c))
    return images


def dual_change_inverse(form: LinearForm) -> dict[int, Polynomial]:
    normal = form.normalized()
    p = normal.pivot()
    n = normal.n
    images: dict[int, Polynomial] = {}
    for i, c in enumerate(normal.coefficients):
        if i != p and c:
            images[i] = (Polynomial.variable(n, FAMILY_DUAL, i)
                         + Polynomial.variable(n, FAMILY_DUAL, p).scale(c))
    return images


# ---------------------------------------------------------------------------
# schemes
# ---------------------------------------------------------------------------


class Scheme:
    """A zero-dimensional subscheme held as its saturated homogeneous ideal.

    Hilbert data is computed lazily and cached; ``components``, when present,
    records the per-support pieces the scheme was assembled from.
    """

    __slots__ = ("ideal", "support_hint", "components", "_hilbert")

    def __init__(self, ideal: Ideal,
                 support_hint: Sequence[LinearForm] | None = None,
                 components: Sequence[tuple[LinearForm, int, "Scheme"]] | None = None):
        self.ideal = ideal
        self.support_hint = tuple(support_hint) if support_hint else None
        self.components = tuple(components) if components else None
        self._hilbert: HilbertSequence | None = None

    @classmethod
    def from_ideal(cls, ideal: Ideal, assume_saturated: bool = True) -> "Scheme":
        if not assume_saturated:
            ideal = saturate_at_irrelevant(ideal)
        return cls(ideal)

    @property
    def hilbert(self) -> HilbertSequence:
        if self._hilbert is None:
            self._hilbert = hilbert_sequence(self.ideal)
        return self._hilbert

    @property
    def length(self) -> int:
        return self.hilbert.limit

    @property
    def regularity(self) -> int:
        return self.hilbert.regularity

    def is_regular_in(self, degree: int) -> bool:
        return self.regularity <= degree

    def to_json(self) -> dict:
        hs = self.hilbert
        return {
            "ideal": self.ideal.to_json(),
            "hilbert": hs.cli_values(),
            "length": hs.limit,
            "regularity": hs.regularity,
        }

    def __repr__(self) -> str:
        return f"Scheme({self.ideal!r})"


@dataclass(frozen=True)
class NaturalSchemeStages:
    """Every intermediate of the natural-apolar-scheme pipeline."""

    poly: Polynomial
    support: LinearForm
    pivot: int
    base_changed: Polynomial
    local: Polynomial
    local_deg: int
    display_truncation: int
    display_matrix: HankelMatrix
    local_generators: tuple[Polynomial, ...]
    homogenized: Ideal
    ideal: Ideal

    def scheme(self) -> Scheme:
        return Scheme(self.ideal, support_hint=[self.support])


def natural_scheme_stages(poly: Polynomial, support: LinearForm) -> NaturalSchemeStages:
    if poly.family != FAMILY_PRIMAL or support.family != FAMILY_PRIMAL:
        raise ApolarKitError("natural apolar schemes take primal input")
    degree = poly.homogeneous_degree()
    if degree is None or degree < 1:
        raise ApolarKitError("input must be nonzero homogeneous of positive degree")
    normal = support.normalized()
    pivot = normal.pivot()
    base_changed = substitute_linear(poly, primal_change(normal))
    local = dehomogenize(to_divided_powers(base_changed), pivot)
    e = local_degree(local)
    display_truncation = truncation_degree(local, e, pivot)
    display_matrix = hankel_matrix_of_local(local, display_truncation, pivot)
    gens = local_annihilator(local, pivot)
    homogenized = homogenize_ideal(Ideal(poly.n, FAMILY_DUAL, gens), pivot)
    back = dual_change(normal)
    final = Ideal(poly.n, FAMILY_DUAL,
                  [substitute_linear(g, back) for g in homogenized.generators])
    return NaturalSchemeStages(poly, normal, pivot, base_changed, local, e,
                               display_truncation, display_matrix, tuple(gens),
                               homogenized, final)


def natural_apolar_scheme(poly: Polynomial, support: LinearForm) -> Scheme:
    """The local apolar scheme supported at the given point, by the
    base-change / dehomogenise / Hankel-kernel / homogenise pipeline."""
    return natural_scheme_stages(poly, support).scheme()


# ---------------------------------------------------------------------------
# generalized additive decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GadSummand:
    support: LinearForm
    k: int
    cofactor: Polynomial  # degree-k form not divisible by the support


@dataclass(frozen=True)
class GAD:
    """A decomposition  F = sum support_i^(d - k_i) * cofactor_i."""

    degree: int
    summands: tuple[GadSummand, ...]

    def summand_polynomial(self, index: int) -> Polynomial:
        s = self.summands[index]
        return s.support.to_poly() ** (self.degree - s.k) * s.cofactor

    def polynomial(self) -> Polynomial:
        total = None
        for i in range(len(self.summands)):
            term = self.summand_polynomial(i)
            total = term if total is None else total + term
        assert total is not None
        return total

    def supports(self) -> list[LinearForm]:
        return [s.support for s in self.summands]

    def to_json(self) -> dict:
        return {
            "d": self.degree,
            "summands": [
                {"L": format_poly(s.support.to_poly()), "k": s.k,
                 "G": format_poly(s.cofactor)}
                for s in self.summands
            ],
        }

    @classmethod
    def from_json(cls, data: dict, n: int | None = None) -> "GAD":
        degree = int(data["d"])
        raw = data["summands"]
        if n is None:
            if "vars" in data:
                n = int(data["vars"]) - 1
            else:
                n = _infer_dimension(raw)
        summands = []
        for entry in raw:
            support = parse_linear_form(entry["L"], n, FAMILY_PRIMAL)
            cofactor = parse_poly(entry["G"], n, FAMILY_PRIMAL)
            summands.append((support, int(entry["k"]), cofactor))
        return gad_validate(degree, summands)


def _infer_dimension(raw_summands: list[dict]) -> int:
    import re

    best = 0
    for entry in raw_summands:
        for text in (entry["L"], entry["G"]):
            for match in re.finditer(r"[XxYy](\d+)", text):
                best = max(best, int(match.group(1)))
    return best


def gad_validate(degree: int,
                 summands: Sequence[tuple[LinearForm, int, Polynomial]]) -> GAD:
    """Check the GAD shape constraints and assemble the value.

    Supports must be pairwise non-proportional, every cofactor homogeneous of
    its stated degree at most ``degree`` and not divisible by its support.
    """
    if not summands:
        raise GadError("a GAD needs at least one summand")
    checked: list[GadSummand] = []
    for idx, (support, k, cofactor) in enumerate(summands):
        if not 0 <= k <= degree:
            raise GadError(f"summand {idx}: k={k} outside 0..{degree}")
        if cofactor.is_zero() or cofactor.homogeneous_degree() != k:
            raise GadError(f"summand {idx}: cofactor must be homogeneous of degree {k}")
        if cofactor.family != FAMILY_PRIMAL or support.family != FAMILY_PRIMAL:
            raise GadError(f"summand {idx}: primal family required")
        if divides_linear(support, cofactor):
            raise GadError(f"summand {idx}: cofactor is divisible by the support")
        checked.append(GadSummand(support.normalized(), k, cofactor))
    for i in range(len(checked)):
        for j in range(i + 1, len(checked)):
            if checked[i].support.is_proportional(checked[j].support):
                raise GadError(f"summands {i} and {j} share a support direction")
    return GAD(degree, tuple(checked))


# Natural schemes of summands are memoised on their canonical rendering so
# that shortening moves and certificate rewrites reuse unchanged components.
_summand_cache: dict[tuple[int, str, str], Scheme] = {}


def _cached_natural_scheme(poly: Polynomial, support: LinearForm) -> Scheme:
    key = (poly.n, format_poly(poly), format_poly(support.to_poly()))
    cached = _summand_cache.get(key)
    if cached is None:
        cached = natural_apolar_scheme(poly, support)
        _summand_cache[key] = cached
    return cached


def gad_scheme(gad: GAD) -> Scheme:
    """The union of the natural apolar schemes of the summands; its ideal is
    the intersection of the per-summand ideals."""
    components = []
    for i, summand in enumerate(gad.summands):
        piece = _cached_natural_scheme(gad.summand_polynomial(i), summand.support)
        components.append((summand.support, summand.k, piece))
    ideal = intersect_all([piece.ideal for _, _, piece in components])
    return Scheme(ideal, support_hint=[s.support for s in gad.summands],
                  components=components)


# ---------------------------------------------------------------------------
# apolarity and regularity queries
# ---------------------------------------------------------------------------


def _ideal_of(scheme: Scheme | Ideal) -> Ideal:
    return scheme.ideal if isinstance(scheme, Scheme) else scheme


def is_apolar(scheme: Scheme | Ideal, poly: Polynomial) -> bool:
    """Whether every generator of the scheme's ideal annihilates the form."""
    ideal = _ideal_of(scheme)
    return all(derivation_apply(g, poly).is_zero() for g in ideal.generators)


@dataclass(frozen=True)
class RegularityReport:
    length: int
    regularity: int
    degree: int
    is_d_regular: bool
    perp_dim_at_d: int

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "regularity": self.regularity,
            "degree": self.degree,
            "is_d_regular": self.is_d_regular,
            "perp_dim_at_d": self.perp_dim_at_d,
        }


def regularity_report(scheme: Scheme, degree: int) -> RegularityReport:
    """Regularity by the Hilbert plateau test, cross-checked against the
    perp-dimension test: the scheme is regular in the given degree exactly
    when the inverse-system slice there has dimension equal to the length."""
    hs = scheme.hilbert
    plateau = hs.regularity <= degree
    perp_dim = inverse_system_slice(scheme.ideal, degree).dimension
    if plateau != (perp_dim == hs.limit):
        raise InvariantError(
            f"plateau test ({plateau}) disagrees with perp dimension {perp_dim} "
            f"against length {hs.limit}")
    return RegularityReport(hs.limit, hs.regularity, degree, plateau, perp_dim)


def _evaluate_dual_at(form: LinearForm, point: LinearForm) -> Fraction:
    return sum((a * b for a, b in zip(form.coefficients, point.coefficients)),
               Fraction(0))


def component_ideal(scheme: Scheme, supports: Sequence[LinearForm],
                    index: int) -> Ideal:
    """Ideal of the connected component of the scheme at ``supports[index]``.

    Cached pieces are reused when the scheme was assembled from a GAD;
    otherwise the component is isolated by saturating at a dual form that
    vanishes on every other listed support but not at this one.
    """
    target = supports[index]
    if scheme.components:
        for support, _, piece in scheme.components:
            if support.is_proportional(target):
                return piece.ideal
    extractor: Polynomial | None = None
    for j, other in enumerate(supports):
        if j == index:
            continue
        choice = None
        for h in dual_hyperplane_basis(other):
            if _evaluate_dual_at(h, target) != 0:
                choice = h.to_poly()
                break
        if choice is None:
            raise ApolarKitError(
                f"supports {index} and {j} are proportional; cannot separate")
        extractor = choice if extractor is None else extractor * choice
    if extractor is None:
        return scheme.ideal
    return saturate(scheme.ideal, extractor)


def fat_containment_profile(scheme: Scheme,
                            supports: Sequence[tuple[LinearForm, int]]) -> list[bool]:
    """Componentwise fat-point containment: entry i reports whether the
    component at the i-th support sits inside the (k_i + 1)-fold fat point."""
    forms = [form for form, _ in supports]
    out = []
    for i, (form, k) in enumerate(supports):
        piece = component_ideal(scheme, forms, i)
        fat = fat_point_ideal(form, k + 1)
        out.append(piece.contains_ideal(fat))
    return out


# ---------------------------------------------------------------------------
# redundancy certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RedundancyCertificate:
    """Witness that one GAD summand lies in the span generated by the others
    and the proper derivatives of its own cofactor, with the shortened GAD
    the rewrite produces."""

    index: int
    multipliers: tuple[tuple[int, int, Polynomial], ...]  # (summand, order, dual form)
    replacement: GAD

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "multipliers": [
                {"summand": j, "order": e, "H": format_poly(h)}
                for j, e, h in self.multipliers
            ],
            "replacement": self.replacement.to_json(),
        }


def _normalize_summand(support: LinearForm, k: int, content: Polynomial,
                       degree: int) -> tuple[LinearForm, int, Polynomial] | None:
    """Collect support factors out of a rewritten cofactor; None if it died."""
    if content.is_zero():
        return None
    support_poly = support.to_poly()
    while k > 0 and divides_linear(support, content):
        content = _exact_quotient(content, support_poly)
        k -= 1
    return (support, k, content)


def redundancy_certificate(gad: GAD, index: int) -> RedundancyCertificate | None:
    """Search for a membership certificate showing the indexed summand is
    redundant, and rewrite the GAD without it.

    The target summand is tested for membership in the span of
    support^(d-k+e) times order-e derivative spaces, with e >= 1 for the
    summand itself and e >= 0 for all the others.  Absence of a certificate
    proves nothing.
    """
    d = gad.degree
    target_summand = gad.summands[index]
    labels = exponents_of_degree(target_summand.cofactor.n, d)

    columns: list[list[Fraction]] = []
    tags: list[tuple[int, int, Exponent]] = []
    duals: dict[int, list[Polynomial]] = {}
    for j, summand in enumerate(gad.summands):
        duals[j] = [h.to_poly() for h in dual_hyperplane_basis(summand.support)]
        start = 1 if j == index else 0
        support_poly = summand.support.to_poly()
        for e in range(start, summand.k + 1):
            power = support_poly ** (d - summand.k + e)
            for mexp, image in derivative_space_generators(summand.cofactor,
                                                           summand.support, e):
                generator = power * image
                columns.append([generator.coefficient(exp) for exp in labels])
                tags.append((j, e, mexp))

    target = gad.summand_polynomial(index)
    solution = _linalg.solve(columns, [target.coefficient(exp) for exp in labels])
    if solution is None:
        return None

    # reassemble the multipliers H_{j,e} from the solved coordinates
    multipliers: dict[tuple[int, int], Polynomial] = {}
    for coeff, (j, e, mexp) in zip(solution, tags):
        if not coeff:
            continue
        basis = duals[j]
        product = Polynomial.constant(target.n, FAMILY_DUAL, 1)
        for base, power in zip(basis, mexp):
            for _ in range(power):
                product = product * base
        key = (j, e)
        term = product.scale(coeff)
        multipliers[key] = multipliers.get(key, Polynomial.zero(target.n, FAMILY_DUAL)) + term

    # rewrite:  F = sum_j support_j^(d-k_j) * B_j  with the certificate terms
    new_summands: list[tuple[LinearForm, int, Polynomial]] = []
    for j, summand in enumerate(gad.summands):
        support_poly = summand.support.to_poly()
        content = (Polynomial.zero(target.n, FAMILY_PRIMAL) if j == index
                   else summand.cofactor)
        for e in range(0 if j != index else 1, summand.k + 1):
            h = multipliers.get((j, e))
            if h is None:
                continue
            content = content + support_poly ** e * derivation_apply(h, summand.cofactor)
        normalized = _normalize_summand(summand.support, summand.k, content, d)
        if normalized is not None:
            new_summands.append(normalized)
    if not new_summands:
        return None
    replacement = gad_validate(d, new_summands)
    if replacement.polynomial() != gad.polynomial():
        raise InvariantError("certificate rewrite changed the decomposed form")
    flat = tuple((j, e, h) for (j, e), h in sorted(multipliers.items()))
    return RedundancyCertificate(index, flat, replacement)


# ---------------------------------------------------------------------------
# low-multiplicity regularity guarantee
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LowMultiplicityReport:
    """Outcome of the independent-support low-multiplicity checks.

    ``guaranteed_d_regular`` is sound but not complete: it holds only on the
    unconditional branch (independent supports with small k-sums).  The
    conditional branch additionally needs irredundancy, which this package
    does not decide; ``conditional_d_regular`` records that weaker finding.
    """

    s: int
    degree: int
    independent_supports: bool
    case_a: bool
    case_b_inequality: bool
    certificate_found: bool | None
    guaranteed_d_regular: bool
    conditional_d_regular: bool
    local: bool = False

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "degree": self.degree,
            "independent_supports": self.independent_supports,
            "case_a": self.case_a,
            "case_b_inequality": self.case_b_inequality,
            "certificate_found": self.certificate_found,
            "guaranteed_d_regular": self.guaranteed_d_regular,
            "conditional_d_regular": self.conditional_d_regular,
            "local": self.local,
        }


def lowmultiplicity_check(gad: GAD) -> LowMultiplicityReport:
    """Evaluate the support-independence regularity guarantees for a GAD."""
    s = len(gad.summands)
    d = gad.degree
    if s == 1:
        # a local GAD is contained in a (k+1)-fat point, hence k-regular
        return LowMultiplicityReport(
            s=1, degree=d, independent_supports=True, case_a=True,
            case_b_inequality=True, certificate_found=None,
            guaranteed_d_regular=gad.summands[0].k <= d,
            conditional_d_regular=True, local=True)
    rows = [[Fraction(c) for c in summand.support.coefficients]
            for summand in gad.summands]
    independent = _linalg.rank(rows) == s
    worst = max(gad.summands[i].k + gad.summands[j].k
                for i in range(s) for j in range(s) if i != j)
    case_a = d > worst
    case_b_inequality = d > worst - 2
    certificate_found: bool | None = None
    if not case_a and case_b_inequality:
        certificate_found = any(
            redundancy_certificate(gad, i) is not None for i in range(s))
    return LowMultiplicityReport(
        s=s, degree=d,
        independent_supports=independent,
        case_a=case_a,
        case_b_inequality=case_b_inequality,
        certificate_found=certificate_found,
        guaranteed_d_regular=independent and case_a,
        conditional_d_regular=(independent and case_b_inequality
                               and certificate_found is not True),
    )


# ---------------------------------------------------------------------------
# tangential shortening
# ---------------------------------------------------------------------------


def tangential_shorten(gad: GAD, eliminate: int | None = None) -> GAD | None:
    """One shortening step for a union of simple points and 2-jets.

    Looks for a linear relation among the (d-1)-st powers of the 2-jet
    supports; when the power of some summand lies in the span of the others,
    that summand is dissolved into them and dropped, strictly decreasing the
    evinced length.  Returns None when the powers are independent.
    """
    if any(summand.k > 1 for summand in gad.summands):
        raise GadError("tangential shortening needs every k at most 1")
    d = gad.degree
    jet_indices = [i for i, summand in enumerate(gad.summands) if summand.k == 1]
    if len(jet_indices) < 2:
        return None
    n = gad.summands[0].cofactor.n
    labels = exponents_of_degree(n, d - 1)
    powers = {i: gad.summands[i].support.to_poly() ** (d - 1) for i in jet_indices}
    coords = {i: [powers[i].coefficient(exp) for exp in labels] for i in jet_indices}

    candidates = [eliminate] if eliminate is not None else jet_indices
    for idx in candidates:
        if idx not in jet_indices:
            raise GadError(f"summand {idx} is not a 2-jet summand")
        others = [i for i in jet_indices if i != idx]
        solution = _linalg.solve([coords[i] for i in others], coords[idx])
        if solution is None:
            continue
        lam = dict(zip(others, solution))
        new_summands: list[tuple[LinearForm, int, Polynomial]] = []
        for i, summand in enumerate(gad.summands):
            if i == idx:
                continue
            if i in lam and lam[i]:
                content = summand.cofactor + gad.summands[idx].cofactor.scale(lam[i])
            else:
                content = summand.cofactor
            normalized = _normalize_summand(summand.support, summand.k, content, d)
            if normalized is not None:
                new_summands.append(normalized)
        if not new_summands:
            return None
        replacement = gad_validate(d, new_summands)
        if replacement.polynomial() != gad.polynomial():
            raise InvariantError("shortening rewrite changed the decomposed form")
        return replacement
    return None


# ---------------------------------------------------------------------------
# short schemes and subscheme sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShortSchemeReport:
    applies: bool
    length: int
    degree: int
    bound: int
    irredundant_implies_d_regular: bool
    certifies_minimal_schemes_d_regular: bool

    def to_json(self) -> dict:
        return {
            "applies": self.applies,
            "length": self.length,
            "degree": self.degree,
            "bound": self.bound,
            "irredundant_implies_d_regular": self.irredundant_implies_d_regular,
            "certifies_minimal_schemes_d_regular": self.certifies_minimal_schemes_d_regular,
        }


def short_scheme_criterion(scheme: Scheme, poly: Polynomial) -> ShortSchemeReport:
    """Length-bound regularity criterion for an apolar scheme.

    When the length is at most 2d + 1, irredundant apolar schemes of that
    length are d-regular; exhibiting any such scheme also certifies that the
    minimal apolar schemes of the form are d-regular.
    """
    if not is_apolar(scheme, poly):
        raise NotApolarError("the scheme is not apolar to the form")
    degree = poly.homogeneous_degree()
    if degree is None:
        raise ApolarKitError("the form must be nonzero homogeneous")
    bound = 2 * degree + 1
    applies = scheme.length <= bound
    return ShortSchemeReport(applies, scheme.length, degree, bound, applies, applies)


def subscheme_apolarity_sweep(scheme: Scheme, candidates: Sequence[Ideal],
                              poly: Polynomial) -> list[bool]:
    """Apolarity of each candidate subscheme; all-false over a covering
    family of maximal proper subschemes certifies irredundancy for it."""
    out = []
    for idx, candidate in enumerate(candidates):
        if not candidate.contains_ideal(scheme.ideal):
            raise SubschemeError(f"candidate {idx} does not define a subscheme")
        out.append(is_apolar(candidate, poly))
    return out
