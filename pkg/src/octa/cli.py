"""Command-line front end: ``octa <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (a JSON error object is
printed on stdout) and 2 on a usage error.  JSON output uses sorted keys and
rationals as ``"p/q"`` strings, so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from .bn_irreps import VERIFY_GUARD, bn_character_table, bn_classes
from .classification import quasi_equivalent
from .elements import Permutation, format_element, parse_element
from .errors import GuardError, OctaError, SpecError
from .induced_states import (
    RepSpec,
    asymptotic_character_estimate,
    canonical_coset_involution,
    gram_psd_check,
    induced_state,
    split_in_level,
)
from .numeric_lab import BernoulliParam, example1_series, example3_defect, example3_state
from .thoma import character_value, format_rational, validate_spec

SLOW_ENV = "OCTA_SLOW_TESTS"


def _load_json(path: str, field: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}", field=field) from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})", field=field) from None


def _emit_json(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _emit_csv(rows: Sequence[Sequence[Any]]) -> None:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    sys.stdout.write(buf.getvalue())


def cmd_char_eval(args) -> None:
    spec = validate_spec(_load_json(args.spec, "spec"))
    g = parse_element(args.element)
    _emit_json({"value": format_rational(character_value(spec, g))})


def cmd_bn_table(args) -> None:
    n = args.n
    if args.verify:
        if n >= 5 and os.environ.get(SLOW_ENV) != "1":
            raise GuardError(f"verification for n={n} needs {SLOW_ENV}=1", field="n")
        if n <= VERIFY_GUARD:
            bn_classes(n, verify=True)
    table = bn_character_table(n)
    if args.verify:
        for a in table.bipartitions:
            for b in table.bipartitions:
                if table.inner_product(a, b) != (a == b):
                    raise AssertionError(f"orthogonality fails for {a.label()}, {b.label()}")
        if table.dims_squared_sum() != table.order:
            raise AssertionError("sum of squared dimensions differs from the group order")
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        out = table.to_json()
        if args.verify:
            out["verified"] = True
        _emit_json(out)


def _parse_perm(text: str) -> Permutation:
    g = parse_element(text)
    if g.signs:
        raise SpecError("coset representatives take a permutation without signs", field="perm")
    return g.perm


def cmd_coset_rep(args) -> None:
    if args.k < 0:
        raise GuardError("k must be nonnegative", field="k")
    inv = canonical_coset_involution(_parse_perm(args.perm), args.k)
    _emit_json({
        "k": args.k,
        "pairs": [list(p) for p in inv.pairs],
        "involution": format_element(inv.as_element()),
    })


def cmd_state_eval(args) -> None:
    spec = RepSpec.from_json(_load_json(args.rep, "rep"))
    g = parse_element(args.element)
    out = {
        "value": format_rational(induced_state(spec, g)),
        "in_subgroup": split_in_level(g, spec.n) is not None,
    }
    if args.asymptotic:
        out["asymptotic"] = format_rational(asymptotic_character_estimate(spec, g))
    _emit_json(out)


def cmd_classify(args) -> None:
    a = RepSpec.from_json(_load_json(args.a, "a"))
    b = RepSpec.from_json(_load_json(args.b, "b"))
    _emit_json(quasi_equivalent(a, b).to_json())


def cmd_gram_check(args) -> None:
    if (args.spec is None) == (args.rep is None):
        raise SpecError("give exactly one of --spec or --rep", field="spec")
    if args.spec is not None:
        thoma = validate_spec(_load_json(args.spec, "spec"))
        phi = lambda g: character_value(thoma, g)  # noqa: E731
    else:
        rep = RepSpec.from_json(_load_json(args.rep, "rep"))
        phi = lambda g: induced_state(rep, g)  # noqa: E731
    elems = [parse_element(e) for e in args.element]
    verdict = gram_psd_check(phi, elems, exact=not args.approx)
    _emit_json(verdict.to_json())


def cmd_lab(args) -> None:
    if args.experiment == "example1":
        rows = [("m", "value")] + [(m, format_rational(v)) for m, v in example1_series(args.f_index, args.m_max)]
        _emit_csv(rows)
    elif args.experiment == "example3":
        p = BernoulliParam(Fraction(args.p))
        g = parse_element(args.element)
        start = max(max((i for i in g.perm.moved | g.signs), default=0), 1)
        rows = [("m", "value")]
        rows += [(m, format_rational(example3_state(p, g, m))) for m in range(start, args.m_max + 1)]
        _emit_csv(rows)
    else:
        p = BernoulliParam(Fraction(args.p))
        defect = example3_defect(p, args.n, args.m)
        closed = (p.p - p.q) ** 2 - 1
        _emit_json({
            "p": format_rational(p.p),
            "n": args.n,
            "defect": format_rational(defect),
            "closed_form": format_rational(closed),
            "match": defect == closed,
        })


def _rational_arg(text: str) -> str:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="octa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char-eval", help="evaluate an indecomposable character at an element")
    p.add_argument("--spec", required=True, help="Thoma spec JSON file")
    p.add_argument("--element", required=True, help='element, e.g. "(1 2 3)(4 5);signs=1"')
    p.set_defaults(func=cmd_char_eval)

    p = sub.add_parser("bn-table", help="character table of B_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--verify", action="store_true", help="check class sizes and orthogonality")
    p.set_defaults(func=cmd_bn_table)

    p = sub.add_parser("coset-rep", help="canonical involution of s (S_k x S_k,inf)")
    p.add_argument("--perm", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_coset_rep)

    p = sub.add_parser("state-eval", help="state of an induced representation at an element")
    p.add_argument("--rep", required=True, help="RepSpec JSON file")
    p.add_argument("--element", required=True)
    p.add_argument("--asymptotic", action="store_true", help="also report the asymptotic character")
    p.set_defaults(func=cmd_state_eval)

    p = sub.add_parser("classify", help="factor type, central depth and quasi-equivalence")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gram-check", help="positive semidefiniteness of a Gram matrix")
    p.add_argument("--spec", help="Thoma spec JSON (character)")
    p.add_argument("--rep", help="RepSpec JSON (induced state)")
    p.add_argument("--element", action="append", required=True, help="repeat once per element")
    p.add_argument("--approx", action="store_true", help="floating eigenvalue test")
    p.set_defaults(func=cmd_gram_check)

    p = sub.add_parser("lab", help="numerical stability witnesses")
    lab = p.add_subparsers(dest="experiment", required=True)
    q = lab.add_parser("example1", help="CSV of <T(1^[1,m]) e_j, e_j> over m")
    q.add_argument("--f-index", type=int, required=True)
    q.add_argument("--m-max", type=int, default=16)
    q = lab.add_parser("example3", help="CSV of <Pi(g) 1, 1> over truncations m")
    q.add_argument("--p", type=_rational_arg, required=True)
    q.add_argument("--element", required=True)
    q.add_argument("--m-max", type=int, default=8)
    q = lab.add_parser("defect", help="the non-stability defect and its closed form")
    q.add_argument("--p", type=_rational_arg, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_lab)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except OctaError as exc:
        _emit_json(exc.to_dict())
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
