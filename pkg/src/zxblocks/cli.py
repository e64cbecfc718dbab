"""Command-line front end.

Exit codes: 0 for success or a positive verdict, 1 for a negative verdict,
2 for usage, parse and dimension errors. Errors go to stderr as a single
``error: <kind>: <detail>`` line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .acdc.equiv import MAX_ITERS, MAX_NODES, refute, struct_equiv
from .acdc.laws import LAWS, check_law
from .acdc.terms import Sym, parse_sym, sym_dims
from .angle import parse_angle
from .core import ZXError, dims, parse_path
from .fmt import ParseError, parse_diagram, pretty, to_sexp
from .ingest import ingest, parse_circuit, unitary
from .prop import DEFAULT_TOL, Verdict, proportional, proportional_matrices
from .render import layout, to_ascii, to_svg
from .rules import RuleError, all_rules, apply_at, check_rule, get_rule
from .semantics import ShapeMismatch, evaluate, format_matrix


class UsageError(ZXError):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _write_or_print(text: str, out: str | None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load(path: str):
    """A concrete diagram if the file is concrete, else a symbolic one."""
    text = _read(path)
    try:
        return parse_diagram(text)
    except ParseError as concrete_error:
        try:
            return parse_sym(text)
        except ParseError:
            raise concrete_error from None


def _load_concrete(path: str):
    return parse_diagram(_read(path))


# -- commands ----------------------------------------------------------------

def cmd_dims(args) -> int:
    d = _load(args.file)
    n, m = sym_dims(d) if isinstance(d, Sym) else dims(d)
    print(f"in={n} out={m}")
    return 0


def cmd_eval(args) -> int:
    mat = evaluate(_load_concrete(args.file), braket=args.braket)
    _write_or_print(format_matrix(mat), args.output)
    return 0


def cmd_prop(args) -> int:
    res = proportional(_load_concrete(args.file1), _load_concrete(args.file2), args.tol)
    if res.verdict is Verdict.SHAPE_MISMATCH:
        raise ShapeMismatch(res.reason)
    print(res)
    return 0 if res else 1


def _param_value(rule, name: str, text: str):
    kinds = {p.name: p.kind for p in rule.params}
    match kinds.get(name):
        case None:
            raise RuleError(f"rule {rule.name} has no parameter {name!r}")
        case "angle":
            return parse_angle(text)
        case "diagram":
            return parse_diagram(text)
        case _:
            if not text.isdigit():
                raise RuleError(f"parameter {name} needs a natural number, got {text!r}")
            return int(text)


def cmd_rewrite(args) -> int:
    d = _load_concrete(args.file)
    rule = get_rule(args.rule)
    params = {}
    for item in args.param:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        params[name] = _param_value(rule, name, value)
    out = apply_at(d, rule, params, parse_path(args.path), args.dir)
    _write_or_print(pretty(out), args.output)
    return 0


def cmd_ingest(args) -> int:
    circ = parse_circuit(_read(args.file))
    d = ingest(circ)
    _write_or_print(pretty(d), args.output)
    if args.verify:
        res = proportional_matrices(evaluate(d), unitary(circ), args.tol)
        print(f"verify: {res}", file=sys.stderr if not args.output else sys.stdout)
        return 0 if res else 1
    return 0


def cmd_struct_eq(args) -> int:
    t1, t2 = parse_sym(_read(args.file1)), parse_sym(_read(args.file2))
    res = struct_equiv(t1, t2, args.iters, args.nodes)
    print(res)
    if not res.equal and args.refute:
        cex = refute(t1, t2, seed=args.seed)
        if cex is None:
            print("refute: no counterexample found")
        else:
            env = " ".join(f"{k}={v}" for k, v in cex.env.items())
            subst = " ".join(f"{k}={to_sexp(v)}" for k, v in cex.subst.items())
            bindings = f"{env} {subst}".strip()
            print(f"refute: {cex.detail}; {bindings}" if bindings else f"refute: {cex.detail}")
    return 0 if res.equal else 1


def cmd_check_rules(args) -> int:
    rules = [get_rule(n) for n in args.rule] if args.rule else all_rules()
    ok = True
    for rule in rules:
        rep = check_rule(rule, args.samples, args.max_dim, args.seed, args.tol)
        ok &= rep.ok
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status} {rule.name:40s} failures={len(rep.failures)} skipped={rep.skipped} {rep.seconds:.2f}s")
        for f in rep.failures[:3]:
            print(f"     {f.error} {f.params}")
    if args.acdc:
        for law in LAWS:
            rep = check_law(law, args.acdc_samples, args.max_dim, args.seed)
            ok &= rep.ok
            status = "PASS" if rep.ok else "FAIL"
            print(f"{status} acdc:{law.name:35s} failures={len(rep.failures)} {rep.seconds:.2f}s")
    return 0 if ok else 1


def cmd_render(args) -> int:
    scene = layout(_load(args.file), args.scale)
    _write_or_print(to_ascii(scene) if args.ascii else to_svg(scene), args.output)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zxblocks", description="Block-structured ZX diagram tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dims", help="print input and output wire counts")
    s.add_argument("file")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("eval", help="print the matrix of a diagram")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--braket", action="store_true", help="build Z spiders from ket products")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("prop", help="decide proportionality of two diagrams")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.set_defaults(func=cmd_prop)

    s = sub.add_parser("rewrite", help="apply one rule at a path")
    s.add_argument("file")
    s.add_argument("--rule", required=True)
    s.add_argument("--path", default="")
    s.add_argument("--dir", choices=("l2r", "r2l"), default="l2r")
    s.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_rewrite)

    s = sub.add_parser("ingest", help="translate a .zxc circuit into a diagram")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--verify", action="store_true", help="check against the circuit unitary")
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("struct-eq", help="structural equality by equality saturation")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--iters", type=int, default=MAX_ITERS)
    s.add_argument("--nodes", type=int, default=MAX_NODES)
    s.add_argument("--refute", action="store_true", help="search for a concrete counterexample")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_struct_eq)

    s = sub.add_parser("check-rules", help="sample every rule against the semantics")
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--max-dim", type=int, default=4)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.add_argument("--rule", action="append", default=[], help="restrict to this rule")
    s.add_argument("--acdc", action="store_true", help="also check the e-graph laws exactly")
    s.add_argument("--acdc-samples", type=int, default=20)
    s.set_defaults(func=cmd_check_rules)

    s = sub.add_parser("render", help="draw a diagram as SVG or ASCII")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("-o", "--output")
    g.add_argument("--ascii", action="store_true")
    s.add_argument("--scale", type=float, default=40.0)
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ZXError as e:
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {type(e).__name__.lower()}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
