"""Symbolic diagrams: block terms over dimension expressions and metavariables.

A ``Sym`` is a generic tree node ``(op, args, kids)``. Dimension arguments
are ``DimExpr`` values, spider phases are ``Angle``s and metavariables carry
their own name and dimensions. Ops:

    empty wire box cap cup swap          leaves, no args
    Z X          args (n, m, angle)
    nwire        args (x,)
    var          args (name, in, out)
    stack compose                        two kids
    cast         args (n, m), one kid
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..angle import ZERO, Angle
from ..core import (
    Cast,
    Compose,
    Diagram,
    DimError,
    Stack,
    X,
    Z,
    format_path,
    n_wire,
)
from ..fmt import LEAF_WORDS, Atom, ParseError, SList, angle_of, read_one
from ..generate import random_with_dims
from .dimexpr import Add, Const, DimExpr, Mul, Poly, Var, dim_to_text

LEAVES = ("empty", "wire", "box", "cap", "cup", "swap")
LEAF_DIMS = {"empty": (0, 0), "wire": (1, 1), "box": (1, 1), "cap": (2, 0), "cup": (0, 2), "swap": (2, 2)}


@dataclass(frozen=True)
class Sym:
    op: str
    args: tuple = ()
    kids: tuple[Sym, ...] = ()

    def __str__(self) -> str:
        return sym_to_sexp(self)


class SymDimError(DimError):
    kind = "dim"


def _d(x) -> DimExpr:
    if isinstance(x, int):
        return Const(x)
    if isinstance(x, str):
        return Var(x)
    return x


def leaf(op: str) -> Sym:
    if op not in LEAVES:
        raise ValueError(f"not a leaf: {op}")
    return Sym(op)


def spider(color: str, n, m, alpha: Angle = ZERO) -> Sym:
    return Sym(color, (_d(n), _d(m), alpha))


def nwire(x) -> Sym:
    return Sym("nwire", (_d(x),))


def meta(name: str, n, m) -> Sym:
    return Sym("var", (name, _d(n), _d(m)))


def stack(a: Sym, b: Sym) -> Sym:
    return Sym("stack", (), (a, b))


def compose(a: Sym, b: Sym) -> Sym:
    return Sym("compose", (), (a, b))


def cast(n, m, t: Sym) -> Sym:
    return Sym("cast", (_d(n), _d(m)), (t,))


def sym_dims(t: Sym, _path: tuple[int, ...] = ()) -> tuple[Poly, Poly]:
    """Symbolic (inputs, outputs); raises ``SymDimError`` if ill-formed."""
    match t.op:
        case op if op in LEAF_DIMS:
            n, m = LEAF_DIMS[op]
            return Poly.const(n), Poly.const(m)
        case "Z" | "X":
            return Poly.from_expr(t.args[0]), Poly.from_expr(t.args[1])
        case "nwire":
            x = Poly.from_expr(t.args[0])
            return x, x
        case "var":
            return Poly.from_expr(t.args[1]), Poly.from_expr(t.args[2])
        case "stack":
            (a0, a1), (b0, b1) = (sym_dims(k, _path + (i,)) for i, k in enumerate(t.kids))
            return a0 + b0, a1 + b1
        case "compose":
            (a0, a1), (b0, b1) = (sym_dims(k, _path + (i,)) for i, k in enumerate(t.kids))
            if a1 != b0:
                raise SymDimError(
                    f"compose at {format_path(_path)}: first gives {a1}, second takes {b0}"
                )
            return a0, b1
        case "cast":
            inner = sym_dims(t.kids[0], _path + (0,))
            declared = (Poly.from_expr(t.args[0]), Poly.from_expr(t.args[1]))
            if declared != inner:
                raise SymDimError(
                    f"cast at {format_path(_path)}: declared ({declared[0]}, {declared[1]}),"
                    f" inner has ({inner[0]}, {inner[1]})"
                )
            return declared
    raise ValueError(f"unknown symbolic op {t.op!r}")


def sym_well_formed(t: Sym) -> bool:
    try:
        sym_dims(t)
    except SymDimError:
        return False
    return True


def walk(t: Sym):
    yield t
    for k in t.kids:
        yield from walk(k)


def dim_vars(t: Sym) -> set[str]:
    out: set[str] = set()
    for node in walk(t):
        for a in node.args:
            if isinstance(a, (Const, Var, Add, Mul)):
                out |= Poly.from_expr(a).variables()
    return out


def metavars(t: Sym) -> dict[str, tuple[Poly, Poly]]:
    """Metavariable names with their dimensions; a name must be used consistently."""
    out: dict[str, tuple[Poly, Poly]] = {}
    for node in walk(t):
        if node.op == "var":
            name, n, m = node.args
            sig = (Poly.from_expr(n), Poly.from_expr(m))
            if out.setdefault(name, sig) != sig:
                raise SymDimError(f"metavariable {name} used with two different dimensions")
    return out


# -- concrete <-> symbolic ---------------------------------------------------

def lift(d: Diagram) -> Sym:
    match d:
        case Z(n, m, a):
            return spider("Z", n, m, a)
        case X(n, m, a):
            return spider("X", n, m, a)
        case Stack(a, b):
            return stack(lift(a), lift(b))
        case Compose(a, b):
            return compose(lift(a), lift(b))
        case Cast(n, m, inner):
            return cast(n, m, lift(inner))
    return Sym(str(d))


def lower(t: Sym, env: dict[str, int] | None = None, subst: dict[str, Diagram] | None = None) -> Diagram:
    """Instantiate dimension variables from ``env`` and metavariables from ``subst``."""
    env = env or {}
    subst = subst or {}

    def nat(e: DimExpr) -> int:
        return Poly.from_expr(e).evaluate(env)

    def go(t: Sym) -> Diagram:
        match t.op:
            case "Z":
                return Z(nat(t.args[0]), nat(t.args[1]), t.args[2])
            case "X":
                return X(nat(t.args[0]), nat(t.args[1]), t.args[2])
            case "nwire":
                return n_wire(nat(t.args[0]))
            case "var":
                return subst[t.args[0]]
            case "stack":
                return Stack(go(t.kids[0]), go(t.kids[1]))
            case "compose":
                return Compose(go(t.kids[0]), go(t.kids[1]))
            case "cast":
                return Cast(nat(t.args[0]), nat(t.args[1]), go(t.kids[0]))
        return LEAF_WORDS[t.op]()

    return go(t)


def random_instance(t: Sym, rng: random.Random, max_nat: int = 4, size: int = 3, angles=None):
    """Random concrete values for every dimension variable and metavariable."""
    env = {v: rng.randint(0, max_nat) for v in sorted(dim_vars(t))}
    subst = {
        name: random_with_dims(rng, n.evaluate(env), m.evaluate(env), size, 4, angles)
        for name, (n, m) in sorted(metavars(t).items())
    }
    return env, subst


# -- text format -------------------------------------------------------------

def _dim_of(x) -> DimExpr:
    if isinstance(x, Atom):
        if x.text.isdigit():
            return Const(int(x.text))
        if x.text.isidentifier():
            return Var(x.text)
        raise ParseError(f"bad dimension {x.text!r}", x.line)
    op = x.head
    parts = [_dim_of(a) for a in x.items[1:]]
    if op not in ("+", "*") or len(parts) < 2:
        raise ParseError("dimension forms are (+ e e ...) and (* e e ...)", x.line)
    cls = Add if op == "+" else Mul
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = cls(p, out)
    return out


def _expect(form: SList, k: int):
    if len(form.items) != k + 1:
        raise ParseError(f"({form.head} ...) takes {k} arguments, got {len(form.items) - 1}", form.line)


def build_sym(form) -> Sym:
    if isinstance(form, Atom):
        if form.text not in LEAVES:
            raise ParseError(f"unknown term {form.text!r}", form.line)
        return Sym(form.text)
    args = form.items[1:]
    match form.head:
        case "Z" | "X":
            if len(args) < 3:
                raise ParseError(f"({form.head} n m angle) needs three arguments", form.line)
            return spider(form.head, _dim_of(args[0]), _dim_of(args[1]), angle_of(args[2:], form.line))
        case "nwire":
            _expect(form, 1)
            return nwire(_dim_of(args[0]))
        case "var":
            _expect(form, 3)
            if not isinstance(args[0], Atom) or not args[0].text.isidentifier():
                raise ParseError("metavariable name must be an identifier", form.line)
            return meta(args[0].text, _dim_of(args[1]), _dim_of(args[2]))
        case "stack" | "compose":
            _expect(form, 2)
            return Sym(form.head, (), (build_sym(args[0]), build_sym(args[1])))
        case "cast":
            _expect(form, 3)
            return cast(_dim_of(args[0]), _dim_of(args[1]), build_sym(args[2]))
    raise ParseError(f"unknown form ({form.head} ...)", form.line)


def parse_sym(text: str) -> Sym:
    return build_sym(read_one(text))


def sym_to_sexp(t: Sym) -> str:
    match t.op:
        case "Z" | "X":
            n, m, a = t.args
            return f"({t.op} {dim_to_text(n)} {dim_to_text(m)} {a})"
        case "nwire":
            return f"(nwire {dim_to_text(t.args[0])})"
        case "var":
            name, n, m = t.args
            return f"(var {name} {dim_to_text(n)} {dim_to_text(m)})"
        case "stack" | "compose":
            return f"({t.op} {sym_to_sexp(t.kids[0])} {sym_to_sexp(t.kids[1])})"
        case "cast":
            n, m = t.args
            return f"(cast {dim_to_text(n)} {dim_to_text(m)} {sym_to_sexp(t.kids[0])})"
    return t.op
