"""Acceptance gate.

Criteria 1-8 replay the bundled worked-example fixtures and demand every
check pass at exact rational equality (ideal equality where generator lists
are displayed).  Criterion 9 runs eight property suites on 200 random small
instances each (ambient dimension at most 3, degree at most 5).  One
PASS/FAIL line is printed per criterion.
"""

from fractions import Fraction

import pytest

from apolar_kit import _linalg, corpus
from apolar_kit.apolarity import contraction_apply, derivation_apply
from apolar_kit.groebner import (
    GREVLEX,
    Ideal,
    _s_polynomial,
    buchberger,
    intersect,
    normal_form,
)
from apolar_kit.polyring import (
    FAMILY_DUAL,
    FAMILY_PRIMAL,
    Polynomial,
    exponents_of_degree,
    substitute_linear,
    to_divided_powers,
)
from apolar_kit.schemes import (
    dual_change,
    fat_containment_profile,
    gad_scheme,
    is_apolar,
    primal_change_inverse,
)

from conftest import make_rng, random_gad, random_linear_form, random_poly

X = FAMILY_PRIMAL
Y = FAMILY_DUAL

SUITE_SIZE = 200

_reports: dict = {}


def fixture_report(fixture_id: str):
    if fixture_id not in _reports:
        _reports[fixture_id] = corpus.run_fixture(fixture_id)
    return _reports[fixture_id]


def assert_criterion(number: int, description: str, fixture_id: str) -> None:
    report = fixture_report(fixture_id)
    failures = [f"  {c.name}: {c.detail}" for c in report.checks if not c.passed]
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} criterion {number}: {description}")
    assert report.passed, "\n".join(failures)


def test_criterion_1_natural_scheme_general_support():
    assert_criterion(1, "general-support pipeline: matrix, local annihilator, "
                        "final ideal, length 4, derivation identities", "ex-3.1")


def test_criterion_2_natural_scheme_coordinate_support():
    assert_criterion(2, "coordinate-support pipeline: 10x10 matrix, graded-lex "
                        "basis, homogenisation, length 6, apolarity", "ex-3.2")


def test_criterion_3_two_jet_decomposition():
    assert_criterion(3, "two-jet decomposition: 3x6 matrices, component ideals, "
                        "intersection, length 4, support radicals", "ex-3.3")


def test_criterion_4_redundant_binary_decomposition():
    assert_criterion(4, "binary decompositions: both evinced ideals, strict "
                        "containment, certificate rewrite, length-2 quadric", "ex-4.2")


def test_criterion_5_minimal_local_scheme():
    assert_criterion(5, "local sextic scheme: apolar algebra ranks, annihilator "
                        "truncation, fat-point thresholds, contraction witness", "ex-4.4")


def test_criterion_6_irredundant_but_irregular():
    assert_criterion(6, "twelve-point scheme: evinced ideal, primary intersection, "
                        "Hilbert function, failed regularity, symbolic systems", "ex-5.1")


def test_criterion_7_five_jet_shortening():
    assert_criterion(7, "five 2-jets: Hilbert function, subscheme sweep, "
                        "shortening chain 10 -> 8 -> 6, final apolarity", "ex-5.2")


def test_criterion_8_short_scheme_certificate():
    assert_criterion(8, "length-nine scheme meets the 2d+1 bound", "ex-5.3")


# ---------------------------------------------------------------------------
# criterion 9: property suites
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def scheme_pool():
    """200 random decompositions with their evinced schemes, shared by the
    scheme-level suites."""
    rng = make_rng(20260808)
    pool = []
    for _ in range(SUITE_SIZE):
        n = rng.choice([1, 2, 2, 3])
        degree = rng.randint(1, 5)
        gad = random_gad(rng, n, degree, max_summands=3, max_k=2)
        pool.append((gad, gad_scheme(gad)))
    return pool


def _print_pass(name: str) -> None:
    print(f"PASS criterion 9 suite: {name} ({SUITE_SIZE} instances)")


def test_suite_pairing_nondegeneracy():
    rng = make_rng(101)
    from apolar_kit.polyring import exponent_factorial

    for _ in range(SUITE_SIZE):
        n = rng.randint(1, 3)
        d = rng.randint(1, 5)
        labels = exponents_of_degree(n, d)
        beta = rng.choice(labels)
        action = Polynomial(n, Y, {beta: Fraction(1)})
        for alpha in labels:
            value = derivation_apply(action, Polynomial(n, X, {alpha: Fraction(1)}))
            constant = value.coefficient((0,) * (n + 1))
            assert constant == (exponent_factorial(alpha) if alpha == beta else 0)
    _print_pass("apolarity pairing is diagonal with factorial entries")


def test_suite_action_compatibility():
    rng = make_rng(102)
    for _ in range(SUITE_SIZE):
        n = rng.randint(1, 3)
        F = random_poly(rng, n, rng.randint(1, 5), X, terms=4)
        G = random_poly(rng, n, rng.randint(0, 3), Y, terms=3, homogeneous=False)
        assert contraction_apply(G, to_divided_powers(F)) == \
            to_divided_powers(derivation_apply(G, F))
    _print_pass("contraction and derivation agree through divided powers")


def test_suite_base_change_invariance():
    rng = make_rng(103)
    for _ in range(SUITE_SIZE):
        n = rng.randint(1, 3)
        d = rng.randint(1, 4)
        L = random_linear_form(rng, n)
        F = random_poly(rng, n, d, X, terms=4)
        moved_F = substitute_linear(F, primal_change_inverse(L))
        G = random_poly(rng, n, rng.randint(0, d), Y, terms=3)
        moved_G = substitute_linear(G, dual_change(L))
        plain = derivation_apply(G, F)
        assert derivation_apply(moved_G, moved_F) == \
            substitute_linear(plain, primal_change_inverse(L))
    _print_pass("paired base changes intertwine the derivation action")


def test_suite_evinced_schemes_are_apolar(scheme_pool):
    for gad, scheme in scheme_pool:
        assert is_apolar(scheme, gad.polynomial())
    _print_pass("schemes evinced by random decompositions are apolar")


def test_suite_fat_point_containment(scheme_pool):
    for gad, scheme in scheme_pool:
        profile = fat_containment_profile(
            scheme, [(s.support, s.k) for s in gad.summands])
        assert all(profile)
    _print_pass("each component sits in its (k+1)-fold fat point")


def test_suite_groebner_s_polynomials():
    rng = make_rng(106)
    for _ in range(SUITE_SIZE):
        n = rng.randint(1, 3)
        gens = [random_poly(rng, n, rng.randint(1, 3), Y, terms=3)
                for _ in range(rng.randint(1, 3))]
        basis = buchberger(gens, GREVLEX)
        elements = list(basis.elements)
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                s = _s_polynomial(elements[i], elements[j], GREVLEX)
                assert normal_form(s, basis).is_zero()
        for g in gens:
            once = normal_form(g, basis)
            assert once.is_zero()
            assert normal_form(once, basis).is_zero()
    _print_pass("S-polynomials of computed bases reduce to zero")


def test_suite_intersection_membership():
    rng = make_rng(107)
    for _ in range(SUITE_SIZE):
        n = rng.randint(1, 3)
        a = Ideal(n, Y, [random_poly(rng, n, rng.randint(1, 2), Y, terms=3)
                         for _ in range(2)])
        b = Ideal(n, Y, [random_poly(rng, n, rng.randint(1, 2), Y, terms=3)
                         for _ in range(2)])
        meet = intersect(a, b)
        for g in meet.generators:
            assert a.contains_poly(g)
            assert b.contains_poly(g)
    _print_pass("intersection generators lie in both ideals")


def test_suite_hilbert_macaulay_oracle(scheme_pool):
    for _, scheme in scheme_pool:
        hs = scheme.hilbert
        n = scheme.ideal.n
        gens = scheme.ideal.generators
        for degree in range(hs.stabilized_at + 2):
            labels = exponents_of_degree(n, degree)
            rows = []
            for g in gens:
                gdeg = g.homogeneous_degree()
                if gdeg is None or gdeg > degree:
                    continue
                for exp in exponents_of_degree(n, degree - gdeg):
                    product = Polynomial(n, Y, {exp: Fraction(1)}) * g
                    rows.append([product.coefficient(label) for label in labels])
            oracle = len(labels) - _linalg.rank(rows)
            assert oracle == hs.value_at(degree)
    _print_pass("Hilbert values match the generator-span oracle degreewise")
