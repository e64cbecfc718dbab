"""The structural laws saturated by ACDC.

Each law is a directed rewrite ``lhs -> rhs``; the two-way laws appear once
per direction. Identity laws only run in the eliminating direction: their
introducing direction has a free right-hand side (any wire count) and would
never saturate.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from ..core import Diagram
from ..exact import exact_eval
from ..fmt import to_sexp
from ..generate import EIGHTHS, random_with_dims
from .dimexpr import Poly
from .egraph import Bindings, P, Pattern, is_var
from .terms import Sym, SymDimError, lower, meta, sym_dims

ZERO_D = Poly.const(0)
ONE_D = Poly.const(1)


@dataclass(frozen=True)
class Law:
    name: str
    lhs: Pattern
    rhs: Pattern
    guard: Callable[[Bindings], bool] | None = None
    doc: str = ""


def _stack3_in(b: Bindings) -> Poly:
    return b.inp("?a") + b.inp("?b") + b.inp("?c")


def _stack3_out(b: Bindings) -> Poly:
    return b.out("?a") + b.out("?b") + b.out("?c")


LAWS: tuple[Law, ...] = (
    Law(
        "compose_assoc",
        P("compose", (), (P("compose", (), ("?a", "?b")), "?c")),
        P("compose", (), ("?a", P("compose", (), ("?b", "?c")))),
        doc="associativity of composition",
    ),
    Law(
        "compose_assoc_rev",
        P("compose", (), ("?a", P("compose", (), ("?b", "?c")))),
        P("compose", (), (P("compose", (), ("?a", "?b")), "?c")),
    ),
    Law(
        "stack_assoc",
        P("stack", (), (P("stack", (), ("?a", "?b")), "?c")),
        P("cast", (_stack3_in, _stack3_out), (P("stack", (), ("?a", P("stack", (), ("?b", "?c")))),)),
        doc="stack associativity, stated through a cast",
    ),
    Law(
        "stack_assoc_rev",
        P("cast", ("?n", "?m"), (P("stack", (), ("?a", P("stack", (), ("?b", "?c")))),)),
        P("stack", (), (P("stack", (), ("?a", "?b")), "?c")),
    ),
    Law("empty_to_nwire", P("empty"), P("nwire", (ZERO_D,))),
    Law("nwire_to_empty", P("nwire", (ZERO_D,)), P("empty")),
    Law("wire_to_nwire", P("wire"), P("nwire", (ONE_D,))),
    Law("nwire_to_wire", P("nwire", (ONE_D,)), P("wire")),
    Law("stack_id_left", P("stack", (), (P("empty"), "?a")), "?a"),
    Law("stack_id_right", P("stack", (), ("?a", P("empty"))), "?a"),
    Law("compose_id_left", P("compose", (), (P("nwire", ("?x",)), "?a")), "?a"),
    Law("compose_id_right", P("compose", (), ("?a", P("nwire", ("?x",)))), "?a"),
    Law(
        "stack_compose_distr",
        P("compose", (), (P("stack", (), ("?a", "?c")), P("stack", (), ("?b", "?d")))),
        P("stack", (), (P("compose", (), ("?a", "?b")), P("compose", (), ("?c", "?d")))),
        guard=lambda b: b.out("?a") == b.inp("?b"),
        doc="needs the top halves to line up",
    ),
    Law(
        "stack_compose_distr_rev",
        P("stack", (), (P("compose", (), ("?a", "?b")), P("compose", (), ("?c", "?d")))),
        P("compose", (), (P("stack", (), ("?a", "?c")), P("stack", (), ("?b", "?d")))),
    ),
    Law(
        "nwire_stack",
        P("stack", (), (P("nwire", ("?x",)), P("nwire", ("?y",)))),
        P("nwire", (lambda b: b["?x"] + b["?y"],)),
    ),
    Law("cast_elim", P("cast", ("?n", "?m"), ("?t",)), "?t", doc="the analysis already proves the dims equal"),
    Law(
        "cast_merge",
        P("cast", ("?n", "?m"), (P("cast", ("?n2", "?m2"), ("?t",)),)),
        P("cast", ("?n", "?m"), ("?t",)),
    ),
)


def get_law(name: str) -> Law:
    for law in LAWS:
        if law.name == name:
            return law
    raise KeyError(name)


# -- concrete instantiation (the soundness bridge) ---------------------------

def _pattern_vars(p: Pattern, kids: set, args: set):
    if is_var(p):
        kids.add(p)
        return
    for a in p.args:
        if is_var(a):
            args.add(a)
    for k in p.kids:
        _pattern_vars(k, kids, args)


def to_sym(p: Pattern, b: dict) -> Sym:
    """Build the term a pattern denotes under ``b`` (class vars bound to Syms)."""
    if is_var(p):
        return b[p]
    bind = Bindings(b, sym_dims)
    args = []
    for a in p.args:
        if is_var(a):
            a = b[a]
        elif callable(a):
            a = a(bind)
        args.append(a.to_expr() if isinstance(a, Poly) else a)
    return Sym(p.op, tuple(args), tuple(to_sym(k, b) for k in p.kids))


def instantiate_law(
    law: Law, rng: random.Random, max_dim: int = 4, tries: int = 5000
) -> tuple[Diagram, Diagram] | None:
    """Concrete ``(lhs, rhs)`` with random dims and random sub-diagrams.

    Dimensions are drawn first and checked symbolically, so the (cheap)
    retry loop only needs to find a well-formed shape. Phases are multiples
    of pi/4 so both sides can be evaluated exactly.
    """
    kid_vars: set = set()
    arg_vars: set = set()
    _pattern_vars(law.lhs, kid_vars, arg_vars)
    for _ in range(tries):
        b: dict = {v: Poly.const(rng.randint(0, max_dim)) for v in sorted(arg_vars)}
        for v in sorted(kid_vars):
            b[v] = meta(v[1:], rng.randint(0, max_dim), rng.randint(0, max_dim))
        try:
            lhs = to_sym(law.lhs, b)
            sym_dims(lhs)
            if law.guard is not None and not law.guard(Bindings(b, sym_dims)):
                continue
            rhs = to_sym(law.rhs, b)
        except SymDimError:
            continue
        subst = {}
        for v in sorted(kid_vars):
            _, n, m = b[v].args
            subst[v[1:]] = random_with_dims(rng, n.k, m.k, size=3, max_wires=4, angles=EIGHTHS)
        return lower(lhs, {}, subst), lower(rhs, {}, subst)
    return None


@dataclass
class BridgeReport:
    law: str
    samples: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def check_law(law: Law, samples: int = 20, max_dim: int = 4, seed: int = 0) -> BridgeReport:
    """Both sides of ``law`` must evaluate to exactly the same matrix."""
    rng = random.Random(f"{seed}:{law.name}")
    report = BridgeReport(law.name, samples)
    t0 = time.perf_counter()
    for _ in range(samples):
        pair = instantiate_law(law, rng, max_dim)
        if pair is None:
            report.failures.append("no well-formed instance found")
            continue
        lhs, rhs = pair
        if exact_eval(lhs) != exact_eval(rhs):
            report.failures.append(f"{to_sexp(lhs)} != {to_sexp(rhs)}")
    report.seconds = time.perf_counter() - t0
    return report
