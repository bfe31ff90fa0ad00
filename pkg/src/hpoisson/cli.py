"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails (a witness is
printed), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .bivector import Bivector, bracket, is_casimir, is_poisson, is_unimodular_div
from .constraints import ConstraintSystem, jacobi_constraints, span_equivalent
from .heisenberg import generic_invariant_homogeneous, is_sigma_invariant, is_tau_invariant
from .polyring import PolySyntaxError, VarSpaceMismatch, format_poly, parse_poly

CHECKS = {
    "jacobi": is_poisson,
    "sigma": is_sigma_invariant,
    "tau": is_tau_invariant,
    "unimodular": is_unimodular_div,
}


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _poly_arg(text: str) -> str:
    """``@file`` reads the polynomial from a file."""
    return _read(text[1:]).strip() if text.startswith("@") else text


def _parse_params(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"--param expects name=value, got {item!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational value {value!r} for {name}") from exc
    return out


def _bivector_text(B: Bivector) -> str:
    lines = [f"n = {B.n}; params = [{', '.join(B.vs.params)}]"]
    for (i, j), p in sorted(B.entries.items()):
        lines.append(f"{{x{i}, x{j}}} = {format_poly(p)}")
    return "\n".join(lines)


def cmd_catalog(args) -> int:
    values = _parse_params(args.param)
    B = catalog.build(args.name, values)
    print(B.dumps() if args.format == "json" else _bivector_text(B))
    return 0


def cmd_verify(args) -> int:
    B = Bivector.from_json(_load_json(args.input))
    checks = args.check or list(CHECKS)
    reports = [CHECKS[c](B) for c in checks]
    if args.casimir:
        f = parse_poly(_read(args.casimir).strip(), B.vs)
        reports.append(is_casimir(B, f))
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.describe())
    return 0 if all(r.passed for r in reports) else 1


def cmd_constraints(args) -> int:
    if args.n < 3:
        raise InputError(f"--n must be >= 3, got {args.n}")
    if args.degree < 1:
        raise InputError(f"--degree must be >= 1, got {args.degree}")
    S = jacobi_constraints(generic_invariant_homogeneous(args.n, args.degree))
    if args.format == "json":
        print(S.dumps())
    else:
        print(f"params = [{', '.join(S.params)}]")
        for p in S.polys:
            print(f"{format_poly(p)} = 0")
    return 0


def cmd_equiv(args) -> int:
    a = ConstraintSystem.from_json(_load_json(args.system_a))
    b = ConstraintSystem.from_json(_load_json(args.system_b))
    same = span_equivalent(a, b)
    print("equivalent" if same else "not equivalent")
    return 0 if same else 1


def cmd_bracket(args) -> int:
    B = Bivector.from_json(_load_json(args.input))
    f = parse_poly(_poly_arg(args.f), B.vs)
    g = parse_poly(_poly_arg(args.g), B.vs)
    print(format_poly(bracket(B, f, g)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hpoisson",
        description="Exact checks for Heisenberg-invariant polynomial Poisson structures.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a named structure")
    p.add_argument("--name", required=True, choices=catalog.NAMES)
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="specialize a parameter to a rational p/q (repeatable)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run checks on a bivector JSON file")
    p.add_argument("input", help="bivector JSON file, or - for stdin")
    p.add_argument("--check", action="append", choices=list(CHECKS),
                   help="check to run (repeatable; default: all)")
    p.add_argument("--casimir", metavar="FILE", help="file holding a polynomial to test as a Casimir")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constraints", help="Jacobi constraints of the generic invariant tensor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_constraints)

    p = sub.add_parser("equiv", help="compare the linear spans of two constraint systems")
    p.add_argument("system_a")
    p.add_argument("system_b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("bracket", help="evaluate {f, g}")
    p.add_argument("input", help="bivector JSON file, or - for stdin")
    p.add_argument("--f", required=True, help="polynomial, or @FILE")
    p.add_argument("--g", required=True, help="polynomial, or @FILE")
    p.set_defaults(func=cmd_bracket)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (InputError, PolySyntaxError, VarSpaceMismatch, ValueError, KeyError,
            ZeroDivisionError, IndexError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
