"""Command-line front end.

Subcommands map one-to-one onto library operations; all output is JSON
(pretty by default, ``--compact`` for single-line).  Exit codes: 0 = success
or witness found, 1 = check failed or nothing found, 2 = invalid input.

Input grammars:
  polynomial   ascending comma-separated integers, e.g. "1,0,2" = 1 + 2t^2
               (over an extension field each integer indexes an element)
  laurent      signed monomial sum in t, e.g. "2*t^-5+t^-1-1"
  witt entries semicolon-separated laurent strings
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .cartier import Quadruple
from .construct import construct_small, construct_trace, d9_witnesses
from .criterion import certify, reconstruct_f
from .errors import DdcritError
from .gf import make_field
from .planner import lifting_radii, profiles_for_group, quadruples_for_group
from .poly import LaurentPoly, Poly
from .search import NotFound, brute_search
from .witt import (
    WittVector,
    reduce_jumps,
    standard_form,
    upper_breaks,
)

_MONOMIAL = re.compile(
    r"(?P<sign>[+-]?)(?:(?P<coeff>\d+)(?:\*(?=t))?)?(?P<t>t(?:\^(?P<exp>-?\d+))?)?"
)


def parse_laurent(spec, text: str) -> LaurentPoly:
    """Parse a signed sum of monomials like ``2*t^-5+t^-1-1``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty laurent string")
    terms: dict[int, object] = {}
    pos = 0
    while pos < len(text):
        match = _MONOMIAL.match(text, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"bad laurent string at {text[pos:]!r}")
        coeff_s, tpart, exp_s = match.group("coeff", "t", "exp")
        if coeff_s is None and tpart is None:
            raise ValueError(f"bad laurent string at {text[pos:]!r}")
        coeff = int(coeff_s) if coeff_s is not None else 1
        if match.group("sign") == "-":
            coeff = -coeff
        if tpart is None:
            exp = 0
        else:
            exp = int(exp_s) if exp_s is not None else 1
        prev = terms.get(exp)
        c = spec.from_int(coeff)
        terms[exp] = prev + c if prev is not None else c
        pos = match.end()
    return LaurentPoly.from_terms(spec, terms)


def parse_poly(spec, text: str) -> Poly:
    coeffs = [spec.element_by_index(int(c) % spec.order) for c in text.split(",")]
    return Poly(spec, coeffs)


def _dump(obj, compact: bool) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)


def _quadruple(args) -> Quadruple:
    return Quadruple(args.p, args.m, args.u, args.n1)


def _cmd_check(args) -> tuple[object, int]:
    q = _quadruple(args)
    spec = make_field(args.p, args.field_degree)
    f = parse_poly(spec, args.f)
    cert = certify(q, f)
    return cert.to_json(), 0 if cert.all_ok else 1


def _cmd_search(args) -> tuple[object, int]:
    q = _quadruple(args)
    result = brute_search(
        q,
        args.field_degree,
        require_isolated=args.isolated,
        budget_seconds=args.budget,
        workers=args.workers,
    )
    if isinstance(result, NotFound):
        return result.to_json(), 1
    return result.to_json(), 0


def _cmd_plan(args) -> tuple[object, int]:
    quadruples = quadruples_for_group(args.p, args.m, args.n)
    profiles = profiles_for_group(args.p, args.m, args.n)
    radii = []
    for prof in profiles:
        prev = 0
        for i, u in enumerate(prof.breaks):
            if i == 0:
                prev = u
                continue
            from .planner import quadruple_for_step

            q = quadruple_for_step(args.p, args.m, prev, u)
            report = lifting_radii(args.p, args.m, prev, u, q.n1)
            radii.append(
                {
                    "profile": prof.to_json(),
                    "step": i + 1,
                    "quadruple": q.to_json(),
                    "radii": report.to_json(),
                }
            )
            prev = u
    return {
        "quadruples": [q.to_json() for q in quadruples],
        "profiles": [p.to_json() for p in profiles],
        "radii": radii,
    }, 0


def _cmd_construct(args) -> tuple[object, int]:
    if args.family == "d9":
        return [c.to_json() for c in d9_witnesses()], 0
    if args.family == "small":
        rd = construct_small(args.p, args.n1)
    else:
        rd = construct_trace(args.p, args.m, args.u)
    cert = certify(rd.quadruple, reconstruct_f(rd))
    return cert.to_json(), 0 if cert.ddc_ok and cert.power_sum_ok else 1


def _cmd_witt_breaks(args) -> tuple[object, int]:
    spec = make_field(args.p, args.field_degree)
    entries = tuple(
        parse_laurent(spec, part) for part in args.entries.split(";")
    )
    v = WittVector(spec, entries)
    result = standard_form(v)
    profile = upper_breaks(result.vector)
    return {
        "standard_form": result.vector.to_json(),
        "extension_degree": result.extension_degree,
        "breaks": profile.to_json(),
    }, 0


def _cmd_reduce_jumps(args) -> tuple[object, int]:
    jumps = [int(x) for x in args.jumps.split(",")]
    return reduce_jumps(jumps, args.p, args.m), 0


def _add_quadruple_args(sub):
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--u", type=int, required=True, help="u~ of the quadruple")
    sub.add_argument("--n1", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ddcrit",
        description="differential data criterion toolkit",
    )
    parser.add_argument(
        "--compact", action="store_true", help="single-line JSON output"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    check = subs.add_parser("check", help="certify a given f")
    _add_quadruple_args(check)
    check.add_argument("--field-degree", type=int, default=1)
    check.add_argument("--f", required=True, help="ascending coefficients")
    check.set_defaults(fn=_cmd_check)

    search = subs.add_parser("search", help="exhaustive witness search")
    _add_quadruple_args(search)
    search.add_argument("--field-degree", type=int, default=1)
    search.add_argument("--isolated", action="store_true")
    search.add_argument("--budget", type=float, default=None)
    search.add_argument("--workers", type=int, default=1)
    search.set_defaults(fn=_cmd_search)

    plan = subs.add_parser("plan", help="quadruples, profiles and radii")
    plan.add_argument("--p", type=int, required=True)
    plan.add_argument("--m", type=int, required=True)
    plan.add_argument("--n", type=int, required=True)
    plan.set_defaults(fn=_cmd_plan)

    construct = subs.add_parser("construct", help="closed-form witnesses")
    construct.add_argument("family", choices=["small", "trace", "d9"])
    construct.add_argument("--p", type=int)
    construct.add_argument("--m", type=int)
    construct.add_argument("--u", type=int)
    construct.add_argument("--n1", type=int)
    construct.set_defaults(fn=_cmd_construct)

    witt = subs.add_parser("witt", help="Witt-vector utilities")
    witt_subs = witt.add_subparsers(dest="witt_command", required=True)
    breaks = witt_subs.add_parser("breaks", help="standard form and breaks")
    breaks.add_argument("--p", type=int, required=True)
    breaks.add_argument("--field-degree", type=int, default=1)
    breaks.add_argument(
        "--entries", required=True, help="semicolon-separated laurent strings"
    )
    breaks.set_defaults(fn=_cmd_witt_breaks)

    reduce_cmd = subs.add_parser("reduce-jumps", help="remove essential ramification")
    reduce_cmd.add_argument("--p", type=int, required=True)
    reduce_cmd.add_argument("--m", type=int, required=True)
    reduce_cmd.add_argument("--jumps", required=True, help="comma-separated")
    reduce_cmd.set_defaults(fn=_cmd_reduce_jumps)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        payload, code = args.fn(args)
    except (DdcritError, ValueError, TypeError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    print(_dump(payload, args.compact))
    return code


if __name__ == "__main__":
    sys.exit(main())
