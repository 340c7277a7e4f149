"""Command-line front end: ``gdn nf|phi|basis|count|check``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .diffalg import DiffElement
from .element import GdnElement, format_coeff, parse_element
from .embed import enumerate_weight0, phi
from .normal import METHODS, EngineMismatch, normal_form
from .spans import (
    CheckReport,
    RelationSet,
    check_agreement,
    check_engel_identity,
    check_identities,
    check_lemma42,
    check_lemma43,
    check_nilpotency,
    check_pbw_slice,
)
from .tableau import enumerate_tableaux
from .terms import Alphabet, TermSyntaxError

SUITES = ("identities", "pbw", "nilpotency", "engel", "inclusions", "agreement")


class CliError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _element_json(e) -> list[dict]:
    key = "monomial" if isinstance(e, DiffElement) else "term"
    return [{"coeff": format_coeff(c), key: str(t)} for t, c in e.items()]


def _emit(args, text: str, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _parse(args) -> GdnElement:
    try:
        return parse_element(args.expr, args.alphabet)
    except TermSyntaxError as err:
        raise CliError(str(err))


def cmd_nf(args) -> int:
    e = _parse(args)
    if args.method != "both":
        r = normal_form(e, args.method)
        _emit(args, str(r), _element_json(r))
        return 0
    a, b = normal_form(e, "rewrite"), normal_form(e, "embed")
    ok = a == b
    text = f"rewrite: {a}\nembed:   {b}\n{'match' if ok else 'MISMATCH'}"
    _emit(args, text, {"rewrite": _element_json(a), "embed": _element_json(b), "match": ok})
    return 0 if ok else 1


def cmd_phi(args) -> int:
    f = phi(_parse(args))
    _emit(args, str(f), _element_json(f))
    return 0


def cmd_basis(args) -> int:
    tabs = [str(t) for t in enumerate_tableaux(args.alphabet, args.length)]
    _emit(args, "\n".join(tabs), tabs)
    return 0


def cmd_count(args) -> int:
    rows = []
    for n in range(1, args.max + 1):
        rows.append(
            {
                "length": n,
                "tableaux": len(enumerate_tableaux(args.alphabet, n)),
                "weight0": len(enumerate_weight0(args.alphabet, n)),
            }
        )
    lines = ["length tableaux weight0"]
    lines += [f"{r['length']:>6} {r['tableaux']:>8} {r['weight0']:>7}" for r in rows]
    _emit(args, "\n".join(lines), rows)
    return 0


def _run_suite(args) -> list[CheckReport]:
    A, m = args.alphabet, args.method
    if args.suite == "identities":
        return [check_identities(A, args.max_length or 4, m)]
    if args.suite == "agreement":
        return [check_agreement(A, args.max_length or 4)]
    if args.suite == "nilpotency":
        if A.even:
            raise CliError("nilpotency needs an alphabet of odd generators only, e.g. --alphabet xi:1,eta:1")
        return [check_nilpotency(A, args.length or 4, m)]
    if args.suite == "engel":
        t = args.t or 3
        if not 1 <= t <= 4:
            raise CliError("--t must be between 1 and 4")
        return [check_engel_identity(t, m)]
    if args.suite == "inclusions":
        d = args.length or 4
        out = [check_lemma42(2, d, m)]
        if d <= 5:
            out.append(check_lemma43(d, m))
        return out
    # pbw
    exprs = args.relation or ["(" + A.generators[0].name + "*" + A.generators[0].name + ")"]
    try:
        rels = RelationSet(A, [parse_element(x, A) for x in exprs])
    except (TermSyntaxError, ValueError) as err:
        raise CliError(str(err))
    L = args.max_length or 4
    if L < rels.max_length():
        raise CliError(f"--max-length {L} is below the longest relation")
    return [check_pbw_slice(rels, L, m)]


def cmd_check(args) -> int:
    reports = _run_suite(args)
    ok = all(reports)
    lines = []
    for r in reports:
        lines.append(r.summary())
        dims = r.details.get("dimensions")
        if dims:
            lines.append("degree gdn phi diff")
            lines += [f"{x['degree']:>6} {x['gdn']:>3} {x['phi']:>3} {x['diff']:>4}" for x in dims]
    text = "\n".join(lines)
    payload = [
        {"check": r.name, "passed": r.passed, "details": r.details, "witness": r.witness} for r in reports
    ]
    _emit(args, text, payload)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    # shared flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default=argparse.SUPPRESS, help="generators as name:parity pairs")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--method", choices=METHODS, default=argparse.SUPPRESS, help="normal-form engine")

    p = argparse.ArgumentParser(prog="gdn", description="Normal forms and checks for free GDN superalgebras.")
    p.add_argument("--alphabet", default=Alphabet.DEFAULT, help=f"default {Alphabet.DEFAULT}")
    p.add_argument("--json", action="store_true")
    p.add_argument("--method", choices=METHODS, default="rewrite")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", parents=[common], help="tableau normal form of an element")
    s.add_argument("expr")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("phi", parents=[common], help="image in the differential algebra")
    s.add_argument("expr")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("basis", parents=[common], help="list the tableaux of one length")
    s.add_argument("--length", type=_positive, required=True)
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("count", parents=[common], help="tableau and weight-0 monomial counts")
    s.add_argument("--max", type=_positive, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("check", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--max-length", type=_positive, help="identities/agreement: total length; pbw: slice degree")
    s.add_argument("--length", type=_positive, help="nilpotency: term length; inclusions: degree")
    s.add_argument("--t", type=_positive, help="engel: number of symmetrized arguments")
    s.add_argument("--relation", action="append", help="pbw: a relation (repeatable)")
    s.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.alphabet = Alphabet.parse(args.alphabet)
    except ValueError as err:
        parser.error(str(err))
    try:
        return args.func(args)
    except CliError as err:
        print(f"gdn: error: {err}", file=sys.stderr)
        return 2
    except EngineMismatch as err:
        print(f"gdn: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
