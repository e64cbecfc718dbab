"""Reader and printer for the ``.zx`` s-expression diagram format.

    term  := empty | wire | box | cap | cup | swap
           | (Z n m angle) | (X n m angle) | (nwire n)
           | (stack t t) | (compose t t) | (cast n m t)

``#`` starts a line comment. ``(nwire n)`` is sugar for the right-associated
wire stack, so the printer emits it for such stacks of two or more wires.
"""

from __future__ import annotations

from dataclasses import dataclass

from .angle import AngleSyntaxError, parse_angle
from .core import (
    Box,
    Cap,
    Cast,
    Compose,
    Cup,
    Diagram,
    Empty,
    Stack,
    Swap,
    Wire,
    X,
    Z,
    ZXError,
    n_wire,
)


class ParseError(ZXError):
    kind = "parse"

    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass(frozen=True)
class Atom:
    text: str
    line: int


@dataclass(frozen=True)
class SList:
    items: tuple
    line: int

    @property
    def head(self) -> str | None:
        if self.items and isinstance(self.items[0], Atom):
            return self.items[0].text
        return None


def tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for tok in line.replace("(", " ( ").replace(")", " ) ").split():
            yield tok, lineno


def read_all(text: str) -> list:
    """Read every top-level s-expression in ``text``."""
    stack: list[list] = [[]]
    opened: list[int] = []
    for tok, line in tokenize(text):
        if tok == "(":
            stack.append([])
            opened.append(line)
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'", line)
            items = stack.pop()
            stack[-1].append(SList(tuple(items), opened.pop()))
        else:
            stack[-1].append(Atom(tok, line))
    if len(stack) != 1:
        raise ParseError("unclosed '('", opened[-1])
    return stack[0]


def read_one(text: str):
    forms = read_all(text)
    if len(forms) != 1:
        line = forms[1].line if len(forms) > 1 else None
        raise ParseError(f"expected exactly one term, found {len(forms)}", line)
    return forms[0]


def nat_of(x, what: str = "dimension") -> int:
    if not isinstance(x, Atom) or not x.text.isdigit():
        raise ParseError(f"expected natural number for {what}", x.line)
    return int(x.text)


def angle_of(atoms, line: int):
    if not atoms or not all(isinstance(a, Atom) for a in atoms):
        raise ParseError("expected an angle", line)
    try:
        return parse_angle("".join(a.text for a in atoms))
    except AngleSyntaxError as e:
        raise ParseError(str(e), line) from None


LEAF_WORDS = {"empty": Empty, "wire": Wire, "box": Box, "cap": Cap, "cup": Cup, "swap": Swap}


def _arity(form: SList, k: int):
    if len(form.items) != k + 1:
        raise ParseError(f"({form.head} ...) takes {k} arguments, got {len(form.items) - 1}", form.line)


def build_diagram(form) -> Diagram:
    if isinstance(form, Atom):
        cls = LEAF_WORDS.get(form.text)
        if cls is None:
            raise ParseError(f"unknown term {form.text!r}", form.line)
        return cls()
    head = form.head
    args = form.items[1:]
    match head:
        case "Z" | "X":
            if len(args) < 3:
                raise ParseError(f"({head} n m angle) needs three arguments", form.line)
            cls = Z if head == "Z" else X
            return cls(nat_of(args[0]), nat_of(args[1]), angle_of(args[2:], form.line))
        case "nwire":
            _arity(form, 1)
            return n_wire(nat_of(args[0]))
        case "stack":
            _arity(form, 2)
            return Stack(build_diagram(args[0]), build_diagram(args[1]))
        case "compose":
            _arity(form, 2)
            return Compose(build_diagram(args[0]), build_diagram(args[1]))
        case "cast":
            _arity(form, 3)
            return Cast(nat_of(args[0]), nat_of(args[1]), build_diagram(args[2]))
    raise ParseError(f"unknown form ({head} ...)", form.line)


def parse_diagram(text: str) -> Diagram:
    return build_diagram(read_one(text))


def _wire_run(d: Diagram) -> int:
    """Length of a right-associated wire stack, 0 if ``d`` is not one."""
    k = 0
    while isinstance(d, Stack) and d.left == Wire():
        k += 1
        d = d.right
    return k + 1 if k and d == Wire() else 0


def to_sexp(d: Diagram) -> str:
    match d:
        case Z(n, m, a):
            return f"(Z {n} {m} {a})"
        case X(n, m, a):
            return f"(X {n} {m} {a})"
        case Stack(a, b):
            k = _wire_run(d)
            if k:
                return f"(nwire {k})"
            return f"(stack {to_sexp(a)} {to_sexp(b)})"
        case Compose(a, b):
            return f"(compose {to_sexp(a)} {to_sexp(b)})"
        case Cast(n, m, inner):
            return f"(cast {n} {m} {to_sexp(inner)})"
    return str(d)


def pretty(d: Diagram, width: int = 78, indent: int = 0) -> str:
    """Indented rendering; inline whenever the term fits in ``width``."""
    flat = to_sexp(d)
    if len(flat) + indent <= width:
        return flat
    pad = " " * (indent + 2)
    match d:
        case Stack(a, b) | Compose(a, b):
            head = "stack" if isinstance(d, Stack) else "compose"
            return (
                f"({head}\n{pad}{pretty(a, width, indent + 2)}"
                f"\n{pad}{pretty(b, width, indent + 2)})"
            )
        case Cast(n, m, inner):
            return f"(cast {n} {m}\n{pad}{pretty(inner, width, indent + 2)})"
    return flat
