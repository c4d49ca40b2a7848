"""Golden fixtures replaying the library's worked examples end to end.

Each fixture is a JSON file naming the inputs (polynomials, supports,
decompositions) and the expected artifacts (ideals, matrices, Hilbert
sequences, lengths, booleans).  The runner replays every named check and
compares ideals by ideal equality, matrices entrywise and sequences
exactly, so the expected generator lists may be any generating set of the
right ideal.
"""

from __future__ import annotations

import json
import traceback
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable

from ..apolarity import (
    apolar_hilbert_function,
    catalecticant_rank,
    contraction_apply,
    derivation_apply,
    global_annihilator,
)
from ..groebner import (
    GRLEX,
    Ideal,
    buchberger,
    fat_point_ideal,
    hilbert_sequence,
    homogenize_ideal,
    intersect_all,
    point_ideal,
    radical_membership,
)
from ..polyring import (
    DIVIDED,
    FAMILY_DUAL,
    FAMILY_PRIMAL,
    Polynomial,
    dehomogenize,
    format_poly,
    parse_linear_form,
    parse_poly,
    to_divided_powers,
)
from ..schemes import (
    GAD,
    Scheme,
    fat_containment_profile,
    gad_scheme,
    is_apolar,
    lowmultiplicity_check,
    natural_scheme_stages,
    redundancy_certificate,
    regularity_report,
    short_scheme_criterion,
    subscheme_apolarity_sweep,
    tangential_shorten,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class FixtureReport:
    fixture_id: str
    passed: bool
    checks: tuple[CheckResult, ...]

    def to_json(self) -> dict:
        return {
            "id": self.fixture_id,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


class UnknownFixtureError(KeyError):
    pass


def _fixture_dir():
    return resources.files(__package__) / "fixtures"


def list_fixture_ids() -> list[str]:
    names = [entry.name[:-5] for entry in _fixture_dir().iterdir()
             if entry.name.endswith(".json")]
    return sorted(names)


def load_fixture(fixture_id: str) -> dict:
    path = _fixture_dir() / f"{fixture_id}.json"
    try:
        raw = path.read_text()
    except FileNotFoundError:
        raise UnknownFixtureError(fixture_id) from None
    return json.loads(raw)


# ---------------------------------------------------------------------------
# handler helpers
# ---------------------------------------------------------------------------


def _n(fixture: dict) -> int:
    return int(fixture["inputs"]["vars"]) - 1


def _poly(text: str, n: int, family: str | None = None,
          convention: str = "standard") -> Polynomial:
    conv = DIVIDED if convention == "divided" else "standard"
    return parse_poly(text, n, family, convention=conv)


def _ideal(gens: list[str], n: int) -> Ideal:
    return Ideal.from_strings(gens, n, FAMILY_DUAL)


def _gad(data: dict, n: int) -> GAD:
    return GAD.from_json(data, n)


def _fail(detail: str) -> tuple[bool, str]:
    return False, detail


def _ok() -> tuple[bool, str]:
    return True, ""


def _expect_ideal_equal(got: Ideal, expected: list[str], n: int,
                        label: str) -> tuple[bool, str]:
    want = _ideal(expected, n)
    if got.equals(want):
        return _ok()
    return _fail(f"{label}: computed {got.to_json()['generators']} "
                 f"!= expected {expected}")


# ---------------------------------------------------------------------------
# check handlers
# ---------------------------------------------------------------------------


def _check_truncation_degree(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    stages = natural_scheme_stages(_poly(chk["f"], n, FAMILY_PRIMAL),
                                   parse_linear_form(chk["l"], n))
    if stages.display_truncation == chk["expected"]:
        return _ok()
    return _fail(f"truncation {stages.display_truncation} != {chk['expected']}")


def _check_natural_scheme_matrix(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    stages = natural_scheme_stages(_poly(chk["f"], n, FAMILY_PRIMAL),
                                   parse_linear_form(chk["l"], n))
    got = stages.display_matrix.to_json()
    want = chk["expected"]
    if got["rows"] != want["rows"] or got["cols"] != want["cols"]:
        return _fail(f"labels differ: {got['rows']}/{got['cols']} vs "
                     f"{want['rows']}/{want['cols']}")
    got_entries = [[Fraction(x) for x in row] for row in got["entries"]]
    want_entries = [[Fraction(str(x)) for x in row] for row in want["entries"]]
    if got_entries != want_entries:
        return _fail(f"entries differ: {got['entries']} vs {want['entries']}")
    return _ok()


def _check_local_annihilator(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    stages = natural_scheme_stages(_poly(chk["f"], n, FAMILY_PRIMAL),
                                   parse_linear_form(chk["l"], n))
    got = Ideal(n, FAMILY_DUAL, list(stages.local_generators))
    return _expect_ideal_equal(got, chk["expected"], n, "local annihilator")


def _check_natural_scheme_ideal(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    poly = _poly(chk["f"], n, FAMILY_PRIMAL)
    scheme = natural_scheme_stages(poly, parse_linear_form(chk["l"], n)).scheme()
    passed, detail = _expect_ideal_equal(scheme.ideal, chk["expected"], n, "scheme ideal")
    if not passed:
        return passed, detail
    if "expected_length" in chk and scheme.length != chk["expected_length"]:
        return _fail(f"length {scheme.length} != {chk['expected_length']}")
    if chk.get("check_apolar") and not is_apolar(scheme, poly):
        return _fail("scheme is not apolar to the form")
    return _ok()


def _check_grlex_basis(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    basis = buchberger([_poly(t, n, FAMILY_DUAL) for t in chk["generators"]], GRLEX)
    got = {format_poly(g) for g in basis.elements}
    want = {format_poly(_poly(t, n, FAMILY_DUAL).monic(GRLEX)) for t in chk["expected"]}
    if got == want:
        return _ok()
    return _fail(f"grlex basis {sorted(got)} != {sorted(want)}")


def _check_homogenized_ideal(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    got = homogenize_ideal(_ideal(chk["generators"], n), int(chk.get("pivot", 0)))
    return _expect_ideal_equal(got, chk["expected"], n, "homogenised ideal")


def _check_derivation_zero(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    poly = _poly(chk["f"], n, FAMILY_PRIMAL)
    for op in chk["ops"]:
        image = derivation_apply(_poly(op, n, FAMILY_DUAL), poly)
        if not image.is_zero():
            return _fail(f"{op} does not annihilate: got {image}")
    return _ok()


def _check_derivation_equals(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    got = derivation_apply(_poly(chk["op"], n, FAMILY_DUAL),
                           _poly(chk["g"], n, FAMILY_PRIMAL))
    want = _poly(chk["expected"], n, FAMILY_PRIMAL)
    if got == want:
        return _ok()
    return _fail(f"{chk['op']} applied: {got} != {want}")


def _check_contraction_local(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    pivot = parse_linear_form(chk["l"], n).normalized().pivot()
    local = dehomogenize(to_divided_powers(_poly(chk["f"], n, FAMILY_PRIMAL)), pivot)
    got = contraction_apply(_poly(chk["op"], n, FAMILY_DUAL), local)
    want = _poly(chk["expected_dp"], n, FAMILY_PRIMAL, convention="divided")
    if got == want:
        return _ok()
    return _fail(f"contraction gave {got}, expected {want}")


def _check_dehomog_difference(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    pivot = parse_linear_form(chk["l"], n).normalized().pivot()
    big = dehomogenize(to_divided_powers(_poly(chk["g"], n, FAMILY_PRIMAL)), pivot)
    small = dehomogenize(to_divided_powers(_poly(chk["f"], n, FAMILY_PRIMAL)), pivot)
    got = big - small
    want = _poly(chk["expected_dp"], n, FAMILY_PRIMAL, convention="divided")
    if got == want:
        return _ok()
    return _fail(f"difference {got} != {want}")


def _check_gad_sums_to(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    gad = _gad(chk["gad"], n)
    want = _poly(chk["f"], n, FAMILY_PRIMAL)
    if gad.polynomial() == want:
        return _ok()
    return _fail(f"summands total {gad.polynomial()}, expected {want}")


def _check_gad_scheme_ideal(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    gad = _gad(chk["gad"], n)
    scheme = gad_scheme(gad)
    if "expected_generators" in chk:
        passed, detail = _expect_ideal_equal(scheme.ideal, chk["expected_generators"],
                                             n, "evinced ideal")
        if not passed:
            return passed, detail
    if "expected_length" in chk and scheme.length != chk["expected_length"]:
        return _fail(f"length {scheme.length} != {chk['expected_length']}")
    if "expected_hf" in chk and list(scheme.hilbert.values) != chk["expected_hf"]:
        return _fail(f"HF {list(scheme.hilbert.values)} != {chk['expected_hf']}")
    if chk.get("check_apolar") and not is_apolar(scheme, gad.polynomial()):
        return _fail("evinced scheme is not apolar to its form")
    return _ok()


def _check_gad_components(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    scheme = gad_scheme(_gad(chk["gad"], n))
    assert scheme.components is not None
    expected = chk["expected"]
    if len(expected) != len(scheme.components):
        return _fail("component count mismatch")
    for i, ((_, _, piece), want) in enumerate(zip(scheme.components, expected)):
        passed, detail = _expect_ideal_equal(piece.ideal, want["generators"], n,
                                             f"component {i}")
        if not passed:
            return passed, detail
        if "length" in want and piece.length != want["length"]:
            return _fail(f"component {i} length {piece.length} != {want['length']}")
    return _ok()


def _check_hilbert(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    hs = hilbert_sequence(_ideal(chk["generators"], n))
    if list(hs.values) != chk["expected_values"]:
        return _fail(f"HF {list(hs.values)} != {chk['expected_values']}")
    if hs.limit != chk["expected_limit"]:
        return _fail(f"limit {hs.limit} != {chk['expected_limit']}")
    if "expected_regularity" in chk and hs.regularity != chk["expected_regularity"]:
        return _fail(f"regularity {hs.regularity} != {chk['expected_regularity']}")
    return _ok()


def _check_regularity(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    if "gad" in chk:
        scheme = gad_scheme(_gad(chk["gad"], n))
    else:
        scheme = Scheme(_ideal(chk["generators"], n))
    report = regularity_report(scheme, int(chk["d"]))
    if report.is_d_regular != chk["expected_is_regular"]:
        return _fail(f"is_d_regular {report.is_d_regular} != {chk['expected_is_regular']}")
    if "expected_length" in chk and report.length != chk["expected_length"]:
        return _fail(f"length {report.length} != {chk['expected_length']}")
    if "expected_perp_dim" in chk and report.perp_dim_at_d != chk["expected_perp_dim"]:
        return _fail(f"perp dim {report.perp_dim_at_d} != {chk['expected_perp_dim']}")
    return _ok()


def _check_apolar(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    got = is_apolar(_ideal(chk["generators"], n), _poly(chk["f"], n, FAMILY_PRIMAL))
    if got == chk["expected"]:
        return _ok()
    return _fail(f"is_apolar {got} != {chk['expected']}")


def _check_strict_containment(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    inner = _ideal(chk["inner"], n)
    outer = _ideal(chk["outer"], n)
    if not outer.contains_ideal(inner):
        return _fail("outer ideal does not contain the inner one")
    if outer.equals(inner):
        return _fail("containment is not strict")
    return _ok()


def _check_intersect_equals(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    parts = [_ideal(g, n) for g in chk["ideals"]]
    got = intersect_all(parts)
    return _expect_ideal_equal(got, chk["expected"], n, "intersection")


def _check_fat_intersection_equals(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    parts = [fat_point_ideal(parse_linear_form(p["L"], n), int(p["power"]))
             for p in chk["points"]]
    got = intersect_all(parts)
    return _expect_ideal_equal(got, chk["expected"], n, "fat-point intersection")


def _check_catalecticant_hf(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    got = apolar_hilbert_function(_poly(chk["f"], n, FAMILY_PRIMAL))
    if got == chk["expected"]:
        return _ok()
    return _fail(f"apolar HF {got} != {chk['expected']}")


def _check_catalecticant_rank(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    got = catalecticant_rank(_poly(chk["f"], n, FAMILY_PRIMAL), int(chk["i"]))
    if got == chk["expected"]:
        return _ok()
    return _fail(f"rank {got} != {chk['expected']}")


def _check_global_annihilator(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    got = global_annihilator(_poly(chk["f"], n, FAMILY_PRIMAL), int(chk["max_degree"]))
    return _expect_ideal_equal(got, chk["expected"], n, "annihilator slice")


def _check_fat_containment(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    if "gad" in chk:
        gad = _gad(chk["gad"], n)
        scheme = gad_scheme(gad)
        supports = [(s.support, s.k) for s in gad.summands]
    else:
        scheme = Scheme(_ideal(chk["generators"], n))
        supports = [(parse_linear_form(s["L"], n), int(s["k"]))
                    for s in chk["supports"]]
    got = fat_containment_profile(scheme, supports)
    if got == chk["expected"]:
        return _ok()
    return _fail(f"profile {got} != {chk['expected']}")


def _check_redundancy_certificate(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    gad = _gad(chk["gad"], n)
    cert = redundancy_certificate(gad, int(chk["index"]))
    found = cert is not None
    if found != chk["expected_found"]:
        return _fail(f"certificate found={found}, expected {chk['expected_found']}")
    if cert is not None and "expected_scheme_generators" in chk:
        scheme = gad_scheme(cert.replacement)
        return _expect_ideal_equal(scheme.ideal, chk["expected_scheme_generators"],
                                   n, "rewritten scheme")
    return _ok()


def _check_lowmultiplicity(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    report = lowmultiplicity_check(_gad(chk["gad"], n))
    for key, want in chk["expected"].items():
        got = getattr(report, key)
        if got != want:
            return _fail(f"{key}={got}, expected {want}")
    return _ok()


def _check_tangential_chain(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    gad = _gad(chk["gad"], n)
    form = gad.polynomial()
    lengths = []
    current = gad
    while True:
        shorter = tangential_shorten(current)
        if shorter is None:
            break
        current = shorter
        lengths.append(gad_scheme(current).length)
    if lengths != chk["expected_lengths"]:
        return _fail(f"shortened lengths {lengths} != {chk['expected_lengths']}")
    if chk.get("check_final_apolar") and not is_apolar(gad_scheme(current), form):
        return _fail("final shortened scheme is not apolar")
    return _ok()


def _check_point_swap_sweep(fx: dict, chk: dict) -> tuple[bool, str]:
    # candidates: for each summand, the simple point there joined with the
    # other components -- the maximal proper subschemes of a union of 2-jets
    n = _n(fx)
    gad = _gad(chk["gad"], n)
    scheme = gad_scheme(gad)
    assert scheme.components is not None
    candidates = []
    for i in range(len(gad.summands)):
        parts = [point_ideal(gad.summands[i].support)]
        parts += [piece.ideal for j, (_, _, piece) in enumerate(scheme.components)
                  if j != i]
        candidates.append(intersect_all(parts))
    got = subscheme_apolarity_sweep(scheme, candidates, gad.polynomial())
    if got == chk["expected"]:
        return _ok()
    return _fail(f"sweep {got} != {chk['expected']}")


def _check_short_criterion(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    if "gad" in chk:
        gad = _gad(chk["gad"], n)
        scheme = gad_scheme(gad)
        form = gad.polynomial()
    else:
        scheme = Scheme(_ideal(chk["generators"], n))
        form = _poly(chk["f"], n, FAMILY_PRIMAL)
    report = short_scheme_criterion(scheme, form)
    if report.applies != chk["expected_applies"]:
        return _fail(f"applies={report.applies}, expected {chk['expected_applies']}")
    return _ok()


def _check_radical_members(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    ideal = _ideal(chk["generators"], n)
    for text in chk["members"]:
        if not radical_membership(_poly(text, n, FAMILY_DUAL), ideal):
            return _fail(f"{text} is not in the radical")
    return _ok()


def _check_gad_substitution_systems(fx: dict, chk: dict) -> tuple[bool, str]:
    """Derivation-condition systems for a two-summand GAD perturbed by a
    quadratic correction with symbolic coefficients.

    Both sides of each listed identity are affine-linear in the correction
    coefficients, so equality at zero and at each basis vector proves the
    symbolic identity; a generic rational sample is thrown in as well.
    """
    n = _n(fx)
    g1 = _poly(chk["g1"], n, FAMILY_PRIMAL)
    g2 = _poly(chk["g2"], n, FAMILY_PRIMAL)
    x0 = Polynomial.variable(n, FAMILY_PRIMAL, 0)
    x1 = Polynomial.variable(n, FAMILY_PRIMAL, 1)
    monomials = [_poly(t, n, FAMILY_PRIMAL) for t in chk["t_monomials"]]
    width = len(monomials)
    samples = [[Fraction(0)] * width]
    for j in range(width):
        vec = [Fraction(0)] * width
        vec[j] = Fraction(1)
        samples.append(vec)
    samples.append([Fraction(s) for s in chk.get("generic_sample",
                                                 ["1", "-2", "3", "5/2", "-7", "11/3"])][:width])
    for lams in samples:
        correction = Polynomial.zero(n, FAMILY_PRIMAL)
        for lam, mono in zip(lams, monomials):
            correction = correction + mono.scale(lam)
        targets = {
            "first": x0 * (g1 + x1 * correction),
            "second": x1 * (g2 - x0 * correction),
        }
        for system in chk["systems"]:
            target = targets[system["target"]]
            for row in system["rows"]:
                got = derivation_apply(_poly(row["op"], n, FAMILY_DUAL), target)
                want = Polynomial.zero(n, FAMILY_PRIMAL)
                for mono_text, lin in row["rhs"].items():
                    coeff = sum((lam * Fraction(str(c)) for lam, c in zip(lams, lin)),
                                Fraction(0))
                    want = want + _poly(mono_text, n, FAMILY_PRIMAL).scale(coeff)
                if got != want:
                    return _fail(
                        f"system {system['target']}, op {row['op']}, sample {lams}: "
                        f"{got} != {want}")
    return _ok()


def _check_gad_family_constant(fx: dict, chk: dict) -> tuple[bool, str]:
    n = _n(fx)
    g1 = _poly(chk["g1"], n, FAMILY_PRIMAL)
    g2 = _poly(chk["g2"], n, FAMILY_PRIMAL)
    x0 = Polynomial.variable(n, FAMILY_PRIMAL, 0)
    x1 = Polynomial.variable(n, FAMILY_PRIMAL, 1)
    mono = _poly(chk["t_monomial"], n, FAMILY_PRIMAL)
    want = _ideal(chk["expected_generators"], n)
    baseline = (x0 * g1 + x1 * g2)
    for text in chk["lambdas"]:
        lam = Fraction(text)
        correction = mono.scale(lam)
        gad = GAD.from_json({"d": chk["d"], "summands": [
            {"L": "X0", "k": chk["k"], "G": format_poly(g1 + x1 * correction)},
            {"L": "X1", "k": chk["k"], "G": format_poly(g2 - x0 * correction)},
        ]}, n)
        if gad.polynomial() != baseline:
            return _fail(f"lambda={text}: decomposition sum changed")
        scheme = gad_scheme(gad)
        if not scheme.ideal.equals(want):
            return _fail(f"lambda={text}: evinced ideal changed")
    return _ok()


HANDLERS: dict[str, Callable[[dict, dict], tuple[bool, str]]] = {
    "truncation_degree": _check_truncation_degree,
    "natural_scheme_matrix": _check_natural_scheme_matrix,
    "local_annihilator": _check_local_annihilator,
    "natural_scheme_ideal": _check_natural_scheme_ideal,
    "grlex_basis": _check_grlex_basis,
    "homogenized_ideal": _check_homogenized_ideal,
    "derivation_zero": _check_derivation_zero,
    "derivation_equals": _check_derivation_equals,
    "contraction_local": _check_contraction_local,
    "dehomog_difference": _check_dehomog_difference,
    "gad_sums_to": _check_gad_sums_to,
    "gad_scheme_ideal": _check_gad_scheme_ideal,
    "gad_components": _check_gad_components,
    "hilbert": _check_hilbert,
    "regularity": _check_regularity,
    "apolar": _check_apolar,
    "strict_containment": _check_strict_containment,
    "intersect_equals": _check_intersect_equals,
    "fat_intersection_equals": _check_fat_intersection_equals,
    "catalecticant_hf": _check_catalecticant_hf,
    "catalecticant_rank": _check_catalecticant_rank,
    "global_annihilator": _check_global_annihilator,
    "fat_containment": _check_fat_containment,
    "redundancy_certificate": _check_redundancy_certificate,
    "lowmultiplicity": _check_lowmultiplicity,
    "tangential_chain": _check_tangential_chain,
    "point_swap_sweep": _check_point_swap_sweep,
    "short_criterion": _check_short_criterion,
    "radical_members": _check_radical_members,
    "gad_substitution_systems": _check_gad_substitution_systems,
    "gad_family_constant": _check_gad_family_constant,
}


def run_fixture(fixture_id: str) -> FixtureReport:
    fixture = load_fixture(fixture_id)
    results: list[CheckResult] = []
    for chk in fixture["checks"]:
        name = chk["name"]
        handler = HANDLERS.get(chk["kind"])
        if handler is None:
            results.append(CheckResult(name, False, f"unknown check kind {chk['kind']}"))
            continue
        try:
            passed, detail = handler(fixture, chk)
        except Exception:
            passed, detail = False, traceback.format_exc(limit=4)
        results.append(CheckResult(name, passed, detail))
    return FixtureReport(fixture_id, all(r.passed for r in results), tuple(results))


def run_all() -> list[FixtureReport]:
    return [run_fixture(fid) for fid in list_fixture_ids()]
