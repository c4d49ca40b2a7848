"""Groebner bases, ideal calculus and Hilbert functions."""

from fractions import Fraction

import pytest

from apolar_kit.groebner import (
    DimensionError,
    GRLEX,
    GREVLEX,
    Ideal,
    ZeroDivisorError,
    buchberger,
    fat_point_ideal,
    hilbert_sequence,
    homogenize_ideal,
    ideal_contains,
    ideal_equals,
    ideal_membership,
    ideal_quotient,
    intersect,
    normal_form,
    point_ideal,
    radical_membership,
    saturate,
    saturate_at_irrelevant,
)
from apolar_kit.polyring import (
    FAMILY_DUAL,
    Polynomial,
    exponents_of_degree,
    format_poly,
    parse_linear_form,
    parse_poly,
)

from conftest import random_poly

Y = FAMILY_DUAL


def ideal(gens, n):
    return Ideal.from_strings(gens, n, Y)


# -- buchberger -------------------------------------------------------------


def test_single_monomial_is_its_own_basis():
    basis = buchberger([parse_poly("Y0^2*Y1", 1, Y)], GREVLEX)
    assert [format_poly(g) for g in basis.elements] == ["Y0^2*Y1"]


def test_grlex_basis_of_mixed_degree_ideal():
    gens = ["5*y2^3+76*y1^2-12*y1*y2+36*y2^2", "2*y1^2*y2+y2^3", "y1^3", "6*y1*y2^2+y2^3"]
    basis = buchberger([parse_poly(t, 2, Y) for t in gens], GRLEX)
    displayed = [
        "y1^3",
        "5*y1^2*y2-38*y1^2+6*y1*y2-18*y2^2",
        "15*y1*y2^2-38*y1^2+6*y1*y2-18*y2^2",
        "5*y2^3+76*y1^2-12*y1*y2+36*y2^2",
    ]
    expected = {format_poly(parse_poly(t, 2, Y).monic(GRLEX)) for t in displayed}
    assert {format_poly(g) for g in basis.elements} == expected


def test_spolynomials_reduce_to_zero(rng):
    from apolar_kit.groebner import _s_polynomial

    for _ in range(25):
        n = rng.randint(1, 2)
        gens = [random_poly(rng, n, rng.randint(1, 3), Y, terms=3, homogeneous=False)
                for _ in range(rng.randint(1, 3))]
        basis = buchberger(gens, GREVLEX)
        elements = list(basis.elements)
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                s = _s_polynomial(elements[i], elements[j], GREVLEX)
                assert normal_form(s, basis).is_zero()


def test_normal_form_idempotent_and_member():
    I = ideal(["Y1^2", "Y1*Y2-1/2*Y2^2"], 2)
    member = parse_poly("Y1^2*Y2 + Y2*(Y1*Y2-1/2*Y2^2)", 2, Y)
    assert ideal_membership(member, I)
    outside = parse_poly("Y0", 2, Y)
    reduced = I.normal_form(outside)
    assert I.normal_form(reduced) == reduced


def test_normal_form_of_one_modulo_proper_ideal():
    I = ideal(["Y1^2", "Y1*Y2-1/2*Y2^2"], 2)
    one = parse_poly("1", 2, Y)
    assert I.normal_form(one) == one


def test_membership_agrees_with_macaulay_span(rng):
    # homogeneous case: degree-D slice is spanned by monomial multiples
    for _ in range(20):
        n = 2
        gens = [random_poly(rng, n, rng.randint(1, 2), Y, terms=3) for _ in range(3)]
        I = Ideal(n, Y, gens)
        degree = rng.randint(2, 3)
        labels = exponents_of_degree(n, degree)
        columns = []
        for g in gens:
            gdeg = g.homogeneous_degree()
            if gdeg > degree:
                continue
            for exp in exponents_of_degree(n, degree - gdeg):
                prod = Polynomial(n, Y, {exp: Fraction(1)}) * g
                columns.append([prod.coefficient(e) for e in labels])
        from apolar_kit import _linalg

        candidate = random_poly(rng, n, degree, Y, terms=4)
        oracle = _linalg.in_span(columns, [candidate.coefficient(e) for e in labels])
        assert ideal_membership(candidate, I) == oracle


def test_membership_of_constructed_members(rng):
    for _ in range(20):
        n = rng.randint(1, 2)
        gens = [random_poly(rng, n, rng.randint(1, 3), Y, terms=3) for _ in range(2)]
        I = Ideal(n, Y, gens)
        combo = Polynomial.zero(n, Y)
        for g in gens:
            combo = combo + random_poly(rng, n, rng.randint(0, 2), Y, terms=2,
                                        homogeneous=False) * g
        assert ideal_membership(combo, I)


# -- containment and equality -----------------------------------------------


def test_contains_and_equals():
    inner = ideal(["Y0^2*Y1^3"], 1)
    outer = ideal(["Y0^2*Y1^2"], 1)
    assert ideal_contains(outer, inner)
    assert not ideal_contains(inner, outer)
    assert not ideal_equals(inner, outer)
    assert ideal_equals(inner, ideal(["Y0^2*Y1^3"], 1))


def test_equality_is_generator_insensitive():
    a = ideal(["y2*(2*y1-y2)", "y1^2"], 2)
    b = ideal(["y1^2", "2*y1*y2-y2^2", "y2^3"], 2)
    assert ideal_equals(a, b)


# -- homogenisation ----------------------------------------------------------


def test_homogenize_homogeneous_input_unchanged():
    I = ideal(["y2*(2*y1-y2)", "y1^2"], 2)
    assert homogenize_ideal(I, 0).equals(ideal(["Y2*(2*Y1-Y2)", "Y1^2"], 2))


def test_homogenize_saturates_by_pivot():
    I = ideal(["5*y2^3+76*y1^2-12*y1*y2+36*y2^2", "2*y1^2*y2+y2^3", "y1^3",
               "6*y1*y2^2+y2^3"], 2)
    H = homogenize_ideal(I, 0)
    assert saturate(H, parse_poly("Y0", 2, Y)).equals(H)


def test_homogenize_dehomogenizes_back(rng):
    for _ in range(10):
        gens = [random_poly(rng, 2, rng.randint(1, 2), Y, terms=3, homogeneous=False)
                for _ in range(2)]
        gens = [Polynomial(2, Y, {(0,) + e[1:]: c for e, c in g.items()})
                for g in gens if not g.is_zero()]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        I = Ideal(2, Y, gens)
        H = homogenize_ideal(I, 0)
        for h in H.generators:
            # setting the pivot to one lands back inside the affine ideal
            affine = Polynomial(2, Y, {(0,) + e[1:]: c for e, c in h.items()})
            assert ideal_membership(affine, I)


# -- intersection, quotients, saturation ------------------------------------


def test_intersection_of_components():
    a = ideal(["8*Y0-2*Y1+Y2", "(2*Y1-Y2)^2"], 2)
    b = ideal(["2*Y0+Y2", "Y2^2"], 2)
    got = intersect(a, b)
    assert got.equals(ideal(["4*Y0*Y1-10*Y0*Y2+2*Y1*Y2-Y2^2", "Y0^2"], 2))


def test_intersection_self():
    I = ideal(["Y0^2", "Y1*Y2"], 2)
    assert intersect(I, I).equals(I)


def test_intersection_members_of_both(rng):
    for _ in range(15):
        n = rng.randint(1, 2)
        a = Ideal(n, Y, [random_poly(rng, n, rng.randint(1, 2), Y, terms=3)
                         for _ in range(2)])
        b = Ideal(n, Y, [random_poly(rng, n, rng.randint(1, 2), Y, terms=3)
                         for _ in range(2)])
        got = intersect(a, b)
        for g in got.generators:
            assert ideal_membership(g, a)
            assert ideal_membership(g, b)


def test_monomial_intersection_is_lcm(rng):
    for _ in range(15):
        n = rng.randint(1, 2)
        def monomial_ideal():
            gens = []
            for _ in range(rng.randint(1, 3)):
                exp = tuple(rng.randint(0, 2) for _ in range(n + 1))
                if any(exp):
                    gens.append(Polynomial(n, Y, {exp: Fraction(1)}))
            return gens
        a, b = monomial_ideal(), monomial_ideal()
        if not a or not b:
            continue
        lcms = []
        for f in a:
            for g in b:
                ef, eg = next(iter(f.terms)), next(iter(g.terms))
                lcms.append(Polynomial(n, Y, {tuple(max(x, y) for x, y in zip(ef, eg)):
                                              Fraction(1)}))
        assert intersect(Ideal(n, Y, a), Ideal(n, Y, b)).equals(Ideal(n, Y, lcms))


def test_colon_and_saturation_monomial_examples():
    I = ideal(["Y0^2*Y1^3"], 1)
    y1 = parse_poly("Y1", 1, Y)
    assert ideal_quotient(I, y1).equals(ideal(["Y0^2*Y1^2"], 1))
    assert saturate(I, y1).equals(ideal(["Y0^2"], 1))
    assert ideal_quotient(I, parse_poly("1", 1, Y)).equals(I)


def test_saturation_is_stable():
    I = ideal(["Y0^2*Y1^3"], 1)
    y1 = parse_poly("Y1", 1, Y)
    once = saturate(I, y1)
    assert saturate(once, y1).equals(once)


def test_colon_by_zero_rejected():
    with pytest.raises(ZeroDivisorError):
        ideal_quotient(ideal(["Y0"], 1), Polynomial.zero(1, Y))


def test_saturate_at_irrelevant_removes_embedded_origin():
    # (Y0) meet an irrelevant-power chunk saturates back to (Y0)
    I = ideal(["Y0*Y1", "Y0^2", "Y0*Y2"], 2)
    got = saturate_at_irrelevant(I)
    assert got.equals(ideal(["Y0"], 2))


# -- fat points ---------------------------------------------------------------


def test_point_ideal_of_coordinate_point():
    assert point_ideal(parse_linear_form("X0", 2)).equals(ideal(["Y1", "Y2"], 2))


def test_fat_point_powers():
    assert fat_point_ideal(parse_linear_form("X1", 1), 3).equals(ideal(["Y0^3"], 1))
    p2 = fat_point_ideal(parse_linear_form("X0", 2), 2)
    assert p2.equals(ideal(["Y1^2", "Y1*Y2", "Y2^2"], 2))


def test_fat_point_intersection_binary():
    p3 = fat_point_ideal(parse_linear_form("X0", 1), 3)
    p2 = fat_point_ideal(parse_linear_form("X1", 1), 2)
    assert intersect(p3, p2).equals(ideal(["Y0^2*Y1^3"], 1))


def test_fat_point_needs_positive_power():
    with pytest.raises(Exception):
        fat_point_ideal(parse_linear_form("X0", 1), 0)


# -- Hilbert sequences --------------------------------------------------------


def test_hilbert_of_binary_monomial_ideal():
    hs = hilbert_sequence(ideal(["Y0^2*Y1^3"], 1))
    assert list(hs.values) == [1, 2, 3, 4, 5, 5]
    assert hs.limit == 5
    assert hs.regularity == 4
    assert hs.cli_values() == [1, 2, 3, 4, 5]


def test_hilbert_of_twelve_point_scheme():
    gens = ["Y0^3*Y1^3-2*Y0^3*Y2^3+5*Y1^3*Y2^3", "3*Y0^2*Y1*Y2-2*Y0*Y2^3",
            "Y0*Y1^2*Y2", "Y0*Y1*Y2^2", "Y2^4"]
    hs = hilbert_sequence(ideal(gens, 2))
    assert list(hs.values) == [1, 3, 6, 10, 11, 12, 12]
    assert hs.limit == 12


def test_hilbert_of_nine_point_scheme():
    gens = ["Y0^2*Y1*Y2-2/3*Y0*Y2^3", "Y0*Y1*Y2^2", "Y2^4",
            "Y0*Y1^2-5/2*Y0*Y1*Y2+Y2^3"]
    hs = hilbert_sequence(ideal(gens, 2))
    assert list(hs.values) == [1, 3, 6, 9, 9]


def test_hilbert_dimension_error():
    with pytest.raises(DimensionError):
        hilbert_sequence(ideal(["Y0"], 2))


def test_hilbert_artinian_descends_to_zero():
    hs = hilbert_sequence(ideal(["Y0^2", "Y1^2", "Y2"], 2))
    assert list(hs.values) == [1, 2, 1, 0]
    assert hs.limit == 0


def test_hilbert_guard(monkeypatch):
    monkeypatch.setenv("APOLAR_KIT_MAX_DEGREE", "3")
    with pytest.raises(DimensionError):
        hilbert_sequence(ideal(["Y0^2*Y1^5"], 1))
    monkeypatch.setenv("APOLAR_KIT_MAX_DEGREE", "24")
    assert hilbert_sequence(ideal(["Y0^2*Y1^5"], 1)).limit == 7


def test_intersection_with_unit_ideal():
    I = ideal(["Y0^2", "Y1*Y2"], 2)
    unit = ideal(["1"], 2)
    assert intersect(I, unit).equals(I)
    assert intersect(unit, I).equals(I)


def test_concurrent_basis_queries_share_one_ideal():
    import threading

    I = ideal(["5*y2^3+76*y1^2-12*y1*y2+36*y2^2", "2*y1^2*y2+y2^3", "y1^3",
               "6*y1*y2^2+y2^3"], 2)
    results = []

    def worker():
        results.append(I.groebner(GRLEX))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r.elements == results[0].elements for r in results)


# -- radical membership --------------------------------------------------------


def test_radical_membership_on_primary_component():
    I = ideal(["(2*Y0+Y2)*(8*Y0-2*Y1+Y2)", "(3*Y0-Y1)^2"], 2)
    assert radical_membership(parse_poly("2*Y1+3*Y2", 2, Y), I)
    assert radical_membership(parse_poly("2*Y0+Y2", 2, Y), I)
    assert not radical_membership(parse_poly("Y1", 2, Y), I)
