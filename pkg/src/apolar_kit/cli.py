"""Command-line front end.

Every verb maps onto one library operation (or a documented composition)
and prints a single JSON document with a stable key order, so output is
byte-identical across runs.  Exit codes: 0 on success, 1 on a domain error
(with a machine-readable error object on stdout), 2 on usage errors.

The optional ``--plot`` / ``--plot-dir`` flags additionally render figures
to files; they never change the JSON contract.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus as corpus_mod
from .apolarity import apolar_hilbert_function, catalecticant
from .groebner import (
    Ideal,
    hilbert_sequence,
    ideal_quotient,
    intersect,
    saturate,
)
from .polyring import (
    ApolarKitError,
    FAMILY_PRIMAL,
    format_poly,
    parse_linear_form,
    parse_poly,
)
from .schemes import (
    GAD,
    Scheme,
    fat_containment_profile,
    gad_scheme,
    is_apolar,
    natural_apolar_scheme,
    redundancy_certificate,
    regularity_report,
    short_scheme_criterion,
    tangential_shorten,
)


class UsageError(Exception):
    pass


def _load_json_arg(args, attr: str, required: bool = True):
    inline = getattr(args, attr, None)
    path = getattr(args, "file", None)
    if inline is not None:
        return json.loads(inline)
    if path is not None:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    if required:
        raise UsageError(f"expected --{attr} or --file")
    return None


def _ideal_from(args, attr: str = "ideal") -> Ideal:
    return Ideal.from_json(_load_json_arg(args, attr))


def _gad_from(args) -> GAD:
    data = _load_json_arg(args, "gad")
    n = args.n if getattr(args, "n", None) is not None else None
    return GAD.from_json(data, n)


def _hf_payload(scheme_or_ideal) -> dict:
    hs = (scheme_or_ideal.hilbert if isinstance(scheme_or_ideal, Scheme)
          else hilbert_sequence(scheme_or_ideal))
    return {"hf": hs.cli_values(), "limit": hs.limit, "regularity": hs.regularity}


def _maybe_plot_hf(args, payload: dict, title: str) -> None:
    path = getattr(args, "plot", None)
    if not path:
        return
    from . import plots

    plots.hilbert_figure(payload["hf"], payload["limit"], payload["regularity"],
                         path, title)


# ---------------------------------------------------------------------------
# verb implementations
# ---------------------------------------------------------------------------


def _cmd_ann(args) -> dict:
    poly = parse_poly(args.f, args.n, FAMILY_PRIMAL)
    from .apolarity import global_annihilator

    degree = poly.homogeneous_degree()
    if degree is None:
        raise ApolarKitError("the form must be nonzero homogeneous")
    max_degree = args.max_degree if args.max_degree is not None else degree + 1
    return global_annihilator(poly, max_degree).to_json()


def _cmd_natural_scheme(args) -> dict:
    poly = parse_poly(args.f, args.n, FAMILY_PRIMAL)
    support = parse_linear_form(args.l, args.n)
    scheme = natural_apolar_scheme(poly, support)
    payload = scheme.to_json()
    _maybe_plot_hf(args, {"hf": payload["hilbert"], "limit": payload["length"],
                          "regularity": payload["regularity"]},
                   f"scheme at [{args.l}]")
    return payload


def _cmd_gad_scheme(args) -> dict:
    gad = _gad_from(args)
    scheme = gad_scheme(gad)
    payload = scheme.to_json()
    payload["support"] = [format_poly(s.support.to_poly()) for s in gad.summands]
    _maybe_plot_hf(args, {"hf": payload["hilbert"], "limit": payload["length"],
                          "regularity": payload["regularity"]}, "evinced scheme")
    return payload


def _cmd_hf(args) -> dict:
    payload = _hf_payload(_ideal_from(args))
    _maybe_plot_hf(args, payload, "Hilbert function")
    return payload


def _cmd_regularity(args) -> dict:
    scheme = Scheme(_ideal_from(args))
    report = regularity_report(scheme, args.d)
    payload = report.to_json()
    _maybe_plot_hf(args, _hf_payload(scheme), f"regularity in degree {args.d}")
    return payload


def _cmd_apolar(args) -> dict:
    ideal = _ideal_from(args)
    poly = parse_poly(args.f, ideal.n, FAMILY_PRIMAL)
    return {"apolar": is_apolar(ideal, poly)}


def _cmd_intersect(args) -> dict:
    left = Ideal.from_json(json.loads(args.ideal)) if args.ideal else None
    if args.ideal2 is not None and left is not None:
        right = Ideal.from_json(json.loads(args.ideal2))
        return intersect(left, right).to_json()
    data = _load_json_arg(args, "ideal", required=False)
    if isinstance(data, dict) and "ideals" in data:
        ideals = [Ideal.from_json(entry) for entry in data["ideals"]]
        result = ideals[0]
        for other in ideals[1:]:
            result = intersect(result, other)
        return result.to_json()
    raise UsageError("intersect needs --ideal and --ideal2, or a --file with an 'ideals' list")


def _cmd_quotient(args) -> dict:
    ideal = _ideal_from(args)
    divisor = parse_poly(args.by, ideal.n, ideal.family)
    return ideal_quotient(ideal, divisor).to_json()


def _cmd_saturate(args) -> dict:
    ideal = _ideal_from(args)
    divisor = parse_poly(args.by, ideal.n, ideal.family)
    return saturate(ideal, divisor).to_json()


def _cmd_catalecticant(args) -> dict:
    poly = parse_poly(args.f, args.n, FAMILY_PRIMAL)
    if args.i is not None:
        cat = catalecticant(poly, args.i)
        return {
            "i": args.i,
            "rank": cat.rank(),
            "shape": [len(cat.row_labels), len(cat.col_labels)],
            "entries": [[str(x) for x in row] for row in cat.entries],
        }
    return {"ranks": apolar_hilbert_function(poly)}


def _cmd_fat_containment(args) -> dict:
    supports = json.loads(args.supports)
    if args.gad is not None:
        gad = GAD.from_json(json.loads(args.gad))
        scheme = gad_scheme(gad)
        n = gad.summands[0].support.n
    else:
        ideal = _ideal_from(args)
        scheme = Scheme(ideal)
        n = ideal.n
    pairs = [(parse_linear_form(entry["L"], n), int(entry["k"]))
             for entry in supports]
    return {"profile": fat_containment_profile(scheme, pairs)}


def _cmd_redundancy_cert(args) -> dict:
    gad = _gad_from(args)
    cert = redundancy_certificate(gad, args.i)
    if cert is None:
        return {"found": False}
    payload = {"found": True}
    payload.update(cert.to_json())
    return payload


def _cmd_tangential_shorten(args) -> dict:
    gad = _gad_from(args)
    shorter = tangential_shorten(gad, args.eliminate)
    if shorter is None:
        return {"found": False}
    return {"found": True, "gad": shorter.to_json()}


def _cmd_short_criterion(args) -> dict:
    if args.gad is not None:
        gad = _gad_from(args)
        scheme = gad_scheme(gad)
        poly = gad.polynomial()
    else:
        ideal = _ideal_from(args)
        if args.f is None:
            raise UsageError("short-criterion with --ideal also needs --f")
        scheme = Scheme(ideal)
        poly = parse_poly(args.f, ideal.n, FAMILY_PRIMAL)
    return short_scheme_criterion(scheme, poly).to_json()


def _cmd_corpus(args) -> tuple[dict, int]:
    if args.id is not None:
        reports = [corpus_mod.run_fixture(args.id)]
    elif args.all:
        reports = corpus_mod.run_all()
    else:
        raise UsageError("corpus needs --all or --id")
    payload = {
        "fixtures": [r.to_json() for r in reports],
        "passed": all(r.passed for r in reports),
    }
    if args.plot_dir:
        from . import plots

        plots.ensure_plot_dir(args.plot_dir)
        plots.corpus_figure(payload["fixtures"],
                            os.path.join(args.plot_dir, "corpus.png"))
    return payload, 0 if payload["passed"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolar-kit",
        description="Exact apolarity computations: annihilators, natural apolar "
                    "schemes, schemes evinced by additive decompositions, and "
                    "the related regularity checks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **help_kwargs):
        p = sub.add_parser(name, **help_kwargs)
        p.set_defaults(func=func)
        p.add_argument("--pretty", action="store_true",
                       help="indent the JSON output")
        p.add_argument("--file", help="read JSON input from a file")
        return p

    p = add("ann", _cmd_ann, help="annihilator generators of a form up to a degree")
    p.add_argument("--f", required=True, help="polynomial in the primal ring")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--max-degree", type=int, default=None)

    p = add("natural-scheme", _cmd_natural_scheme,
            help="natural apolar scheme of a form at a support")
    p.add_argument("--f", required=True)
    p.add_argument("--l", required=True, help="supporting linear form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--plot", help="write a Hilbert-function figure to this path")

    p = add("gad-scheme", _cmd_gad_scheme,
            help="scheme evinced by an additive decomposition")
    p.add_argument("--gad", help="decomposition as JSON")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--plot")

    p = add("hf", _cmd_hf, help="Hilbert function of a homogeneous ideal")
    p.add_argument("--ideal", help="ideal as JSON")
    p.add_argument("--plot")

    p = add("regularity", _cmd_regularity, help="regularity report of a scheme ideal")
    p.add_argument("--ideal")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--plot")

    p = add("apolar", _cmd_apolar, help="test apolarity of a scheme ideal to a form")
    p.add_argument("--ideal")
    p.add_argument("--f", required=True)

    p = add("intersect", _cmd_intersect, help="intersection of ideals")
    p.add_argument("--ideal")
    p.add_argument("--ideal2")

    p = add("quotient", _cmd_quotient, help="colon ideal by a polynomial")
    p.add_argument("--ideal")
    p.add_argument("--by", required=True)

    p = add("saturate", _cmd_saturate, help="saturation by a polynomial")
    p.add_argument("--ideal")
    p.add_argument("--by", required=True)

    p = add("catalecticant", _cmd_catalecticant,
            help="catalecticant ranks (or one matrix) of a form")
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=None)

    p = add("fat-containment", _cmd_fat_containment,
            help="componentwise fat-point containment profile")
    p.add_argument("--ideal")
    p.add_argument("--gad")
    p.add_argument("--supports", required=True,
                   help='JSON list like [{"L": "X0", "k": 3}]')

    p = add("redundancy-cert", _cmd_redundancy_cert,
            help="search a redundancy certificate for one summand")
    p.add_argument("--gad")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--n", type=int, default=None)

    p = add("tangential-shorten", _cmd_tangential_shorten,
            help="one shortening step of a decomposition into points and 2-jets")
    p.add_argument("--gad")
    p.add_argument("--eliminate", type=int, default=None)
    p.add_argument("--n", type=int, default=None)

    p = add("short-criterion", _cmd_short_criterion,
            help="length-bound regularity criterion for an apolar scheme")
    p.add_argument("--gad")
    p.add_argument("--ideal")
    p.add_argument("--f")
    p.add_argument("--n", type=int, default=None)

    p = add("corpus", _cmd_corpus, help="replay the bundled worked examples")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id")
    p.add_argument("--plot-dir")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        exit_code = 0
        if isinstance(result, tuple):
            result, exit_code = result
    except UsageError as err:
        print(str(err), file=sys.stderr)
        return 2
    except (ApolarKitError, corpus_mod.UnknownFixtureError,
            json.JSONDecodeError, KeyError, ValueError, OSError) as err:
        payload = {"error": {"type": type(err).__name__, "message": str(err)}}
        print(json.dumps(payload, indent=2 if args.pretty else None))
        return 1
    print(json.dumps(result, indent=2 if args.pretty else None))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
