"""Command-line front end.

Exit status: 0 success, 1 a mathematical check failed (witness printed),
2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .algebra import (
    IDENTITY_KINDS,
    StructureAlgebra,
    check_identity,
    decompose_m2_bimodule,
    is_isomorphism,
)
from .coordinatization import envelope_b42, gamma_to_m2, octonion_isomorphism, phi_iso
from .expr import ExprSyntaxError, generators, parse
from .fields import FieldSpec
from .free_gamma import fg_dimensions, fg_evaluate, fg_normal_form
from .gamma import GammaAlgebra, grassmann_envelope, verify_gamma_conditions
from .grassmann import enumerate_basis_filtered, format_monomial, parse_monomial, straighten

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_algebra(spec: str, fld: FieldSpec, v2=None) -> StructureAlgebra:
    """A builtin name, or a path to a structure-constant JSON file (the file's own field wins)."""
    if spec.endswith(".json"):
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {spec}: {exc.strerror}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{spec}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
        try:
            return StructureAlgebra.from_json(data, name=spec)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{spec}: {exc}") from None
    params = {} if v2 is None else {"v2": v2}
    try:
        return catalog.builtin(spec, fld, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _algebra_from_args(args) -> StructureAlgebra:
    fld = _field(args)
    src = args.file or args.builtin
    if src is None:
        raise UsageError("give --builtin NAME or --file PATH")
    return _load_algebra(src, fld, getattr(args, "v2", None))


def _add_algebra_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--builtin", help=f"catalog algebra: {', '.join(catalog.BUILTIN_NAMES)}; e.g. grassmann(3)")
    g.add_argument("--file", help="structure-constant JSON file")
    p.add_argument("--v2", help="doubling parameter for octonion-split (default 1)")


# subcommands

def cmd_mul(args) -> int:
    alg = _algebra_from_args(args)
    try:
        a, b = alg.element(args.a), alg.element(args.b)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad element: {exc}") from None
    ab = a * b
    _emit(args, ab.to_json(), str(ab))
    return EXIT_OK


def cmd_check(args) -> int:
    alg = _algebra_from_args(args)
    kinds = args.identity or ["alternative"]
    reports = []
    for kind in kinds:
        if kind not in IDENTITY_KINDS:
            raise UsageError(f"unknown identity {kind!r}; known: {', '.join(IDENTITY_KINDS)}")
        reports.append(check_identity(alg, kind))
    lines = []
    for r in reports:
        if r.passed:
            lines.append(f"{r.kind}: pass")
        else:
            lines.append(f"{r.kind}: FAIL witness=({', '.join(r.witness)}) value={r.value}")
            if r.detail:
                lines[-1] += f" [{r.detail}]"
    _emit(args, {"algebra": alg.name, "field": str(alg.field), "reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return EXIT_OK if all(reports) else EXIT_FALSE


def cmd_basis(args) -> int:
    if args.n < 2 or args.degree < 0:
        raise UsageError("need --n >= 2 and --degree >= 0")
    m = args.filter_m or 1
    if not 1 <= m <= args.n:
        raise UsageError("--filter-m must lie in 1..n")
    monos = enumerate_basis_filtered(args.n, m, args.degree)
    payload = {
        "n": args.n,
        "degree": args.degree,
        "filter_m": m,
        "count": len(monos),
        "monomials": [[list(p) for p in mono] for mono in monos],
    }
    _emit(args, payload, "\n".join(format_monomial(mono) or "1" for mono in monos))
    return EXIT_OK


def cmd_straighten(args) -> int:
    fld = _field(args)
    try:
        mono = parse_monomial(args.monomial)
        s = straighten(mono, args.n, fld)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    payload = s.to_json()
    _emit(args, {"terms": payload["terms"]}, str(s))
    return EXIT_OK


def cmd_envelope(args) -> int:
    fld = _field(args)
    if args.grassmann is not None:
        G = catalog.grassmann(fld, args.grassmann)
        S = _load_algebra(args.superalgebra, fld)
        env = grassmann_envelope(G, S)
    else:
        if args.gamma is None:
            raise UsageError("give --gamma (for the B(4,2) envelope) or --grassmann K")
        env = envelope_b42(_gamma(args.gamma, fld))
    status = EXIT_OK
    report = None
    if args.check:
        report = check_identity(env, args.check)
        status = EXIT_OK if report else EXIT_FALSE
    if args.format == "json":
        out = env.to_json()
        if report is not None:
            out = {"algebra": out, "report": report.to_json()}
        print(json.dumps(out, indent=2) if report is not None else env.dumps(), end="" if report is None else "\n")
    else:
        lines = [f"dim {env.dim}", "basis " + " ".join(env.labels)]
        if report is not None:
            lines.append(
                f"{report.kind}: pass"
                if report
                else f"{report.kind}: FAIL witness=({', '.join(report.witness)}) value={report.value}"
            )
        print("\n".join(lines))
    return status


def _gamma(spec: str, fld: FieldSpec) -> GammaAlgebra:
    alg = _load_algebra(spec, fld)
    rep = verify_gamma_conditions(alg)
    if not rep.ok:
        bad = rep.first_failure()
        raise MathFailure(
            f"not a Gamma-algebra: condition {bad.condition} fails at ({', '.join(bad.witness)}) value={bad.value}",
            {"gamma_conditions": rep.to_json()},
        )
    return GammaAlgebra(alg, rep)


class MathFailure(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload or {}


def cmd_iso_check(args) -> int:
    fld = _field(args)
    g = _gamma(args.gamma, fld)
    C = g.carrier
    steps = []
    steps.append(("gamma-conditions", True, f"dim {C.dim} = {len(g.even_basis)} even + {len(g.odd_basis)} odd"))
    src = gamma_to_m2(g)
    steps.append(("coordinatized-alternative", bool(check_identity(src, "alternative")), f"dim {src.dim}"))
    tgt = envelope_b42(g)
    steps.append(("envelope-alternative", bool(check_identity(tgt, "alternative")), f"dim {tgt.dim}"))
    try:
        phi_iso(g)
        steps.append(("phi-isomorphism", True, "multiplicative on all basis pairs, bijective"))
    except ArithmeticError as exc:
        steps.append(("phi-isomorphism", False, str(exc)))
    if C.labels == ("1", "x", "y"):
        oct_ = catalog.split_octonions(fld, args.v2 or 1)
        ok = is_isomorphism(octonion_isomorphism(fld, args.v2 or 1), src, oct_)
        steps.append(("octonion-match", ok, "explicit basis map onto octonion-split"))
    payload = {"gamma": args.gamma, "field": str(fld), "steps": [{"step": s, "result": "pass" if ok else "fail", "detail": d} for s, ok, d in steps]}
    _emit(args, payload, "\n".join(f"{s}: {'pass' if ok else 'FAIL'} ({d})" for s, ok, d in steps))
    return EXIT_OK if all(ok for _, ok, _ in steps) else EXIT_FALSE


def _parse_assign(text: str) -> dict:
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        if "=" not in part:
            raise UsageError(f"bad assignment {part!r}; expected name=element")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_eval(args) -> int:
    fld = _field(args)
    try:
        tree = parse(args.expr)
    except ExprSyntaxError as exc:
        raise UsageError(str(exc)) from None
    gens = generators(tree)
    m = args.m if args.m is not None else max((int(g[1:]) for g in gens if g.startswith("t")), default=0)
    n = args.n if args.n is not None else max((int(g[1:]) for g in gens if g.startswith("v")), default=0)
    if args.target is None:
        fld_nf = fld
    else:
        target = _gamma(args.target, fld)
        fld_nf = target.field
    try:
        nf = fg_normal_form(tree, m, n, fld_nf)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.target is None:
        _emit(args, nf.to_json(), str(nf))
        return EXIT_OK
    images = _parse_assign(args.assign or "")
    try:
        val = fg_evaluate(nf, target, images)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    _emit(args, val.to_json(), str(val))
    return EXIT_OK


def cmd_decompose(args) -> int:
    alg = _algebra_from_args(args)
    try:
        dec = decompose_m2_bimodule(alg)
    except ValueError as exc:
        raise MathFailure(str(exc)) from None
    a_dim, c_dim = dec.dims
    payload = {
        "basis": list(alg.labels),
        "associative_part": [v.to_json()["coords"] for v in dec.associative_part],
        "cayley_part": [v.to_json()["coords"] for v in dec.cayley_part],
        "dims": [a_dim, c_dim],
        "complementary": dec.complementary,
    }
    lines = [f"associative part: dim {a_dim}"] + [f"  {v}" for v in dec.associative_part]
    lines += [f"cayley part: dim {c_dim}"] + [f"  {v}" for v in dec.cayley_part]
    lines.append(f"complementary: {dec.complementary}")
    text = "\n".join(lines)
    _emit(args, payload, text)
    return EXIT_OK if dec.complementary else EXIT_FALSE


def cmd_dims(args) -> int:
    weights = [args.weight] if args.weight is not None else list(range(args.max_weight + 1))
    if any(w < 0 for w in weights) or args.m < 0 or args.n < 0:
        raise UsageError("weights and generator counts must be nonnegative")
    dims = {w: fg_dimensions(args.m, args.n, w) for w in weights}
    payload = {"m": args.m, "n": args.n, "dims": {str(w): d for w, d in dims.items()}}
    _emit(args, payload, "\n".join(f"weight {w}: {d}" for w, d in dims.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="m2gamma", description="Exact computations with Gamma-algebras and M2-algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help='"q" (rationals) or "fp:<p>" (default q)')
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    _add_algebra_flags(p)
    p.add_argument("a", help="element, e.g. '2*e11 - m1'")
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("check-identities", parents=[common], help="exhaustive identity sweeps")
    _add_algebra_flags(p)
    p.add_argument("--identity", action="append", help=f"repeatable; one of {', '.join(IDENTITY_KINDS)}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis", parents=[common], help="standard monomials of a given degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--filter-m", type=int, help="keep monomials whose column indices are all >= m")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("straighten", parents=[common], help="expand a monomial like a(1,4)a(2,3) in the standard basis")
    p.add_argument("monomial")
    p.add_argument("--n", type=int, help="ambient size (default: largest index)")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("envelope", parents=[common], help="B(4,2)-envelope of a Gamma-algebra, or a Grassmann envelope")
    p.add_argument("--gamma", help="builtin name or JSON file of a Gamma-algebra")
    p.add_argument("--grassmann", type=int, metavar="K", help="use the Grassmann algebra on K generators instead")
    p.add_argument("--super", dest="superalgebra", default="B42", help="superalgebra for --grassmann (default B42)")
    p.add_argument("--check", help="identity to verify on the result, e.g. alternative")
    p.set_defaults(func=cmd_envelope)

    p = sub.add_parser("iso-check", parents=[common], help="verify the coordinatization isomorphism for a Gamma-algebra")
    p.add_argument("--gamma", required=True)
    p.add_argument("--v2", help="octonion doubling parameter for the B12 comparison")
    p.set_defaults(func=cmd_iso_check)

    p = sub.add_parser("eval", parents=[common], help="normal form of an expression, or its value in a Gamma-algebra")
    p.add_argument("expr")
    p.add_argument("--target", help="builtin name or JSON file of a Gamma-algebra")
    p.add_argument("--assign", help='generator images, e.g. "v1=x,v2=y"')
    p.add_argument("--m", type=int, help="number of even generators (default: inferred)")
    p.add_argument("--n", type=int, help="number of odd generators (default: inferred)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("decompose", parents=[common], help="split an M2-algebra into associative and Cayley parts")
    _add_algebra_flags(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dims", parents=[common], help="graded dimensions of a free Gamma-algebra")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--weight", type=int)
    g.add_argument("--max-weight", type=int)
    p.set_defaults(func=cmd_dims)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MathFailure as exc:
        if getattr(args, "format", "text") == "json":
            print(json.dumps({"error": str(exc), **exc.payload}, indent=2))
        else:
            print(f"FAIL: {exc}")
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
