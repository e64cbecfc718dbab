"""Rewrite rules as parametric builders, a path-addressed rewriter and a
semantic soundness harness.

A rule is a pair of builders ``lhs(params)``/``rhs(params)`` whose
instances are claimed proportional for every admissible parameter
assignment. Matching is syntactic: the subterm at the given path must equal
the instantiated source side.
"""

from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from .angle import PI, ZERO, Angle, as_angle
from .core import (
    Box,
    Cap,
    Cast,
    Compose,
    Cup,
    Diagram,
    DimError,
    Empty,
    Path,
    Stack,
    Swap,
    Wire,
    X,
    Z,
    ZXError,
    colorswap,
    dims,
    format_path,
    n_stack1,
    n_wire,
    replace_at,
    stack_all,
    subterm_at,
    transpose,
)
from .fmt import to_sexp
from .generate import random_angle, random_with_dims
from .prop import DEFAULT_TOL, PropResult, proportional

Params = dict[str, Any]


class NoMatch(ZXError):
    kind = "no-match"

    def __init__(self, expected: Diagram, found: Diagram, path: Path):
        self.expected, self.found, self.path = expected, found, path
        super().__init__(
            f"at {format_path(path)}: expected {to_sexp(expected)}, found {to_sexp(found)}"
        )


class RuleError(ZXError):
    kind = "rule"


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "nat" | "angle" | "choice" | "diagram"
    lo: int = 0
    hi: int | None = None
    choices: tuple = ()
    # diagram params: required (in, out) as a function of the nat params
    dims: Callable[[Params], tuple[int, int]] | None = None
    # nat used only to size diagram params while sampling
    hidden: bool = False


@dataclass(frozen=True)
class Rule:
    name: str
    params: tuple[Param, ...]
    lhs: Callable[[Params], Diagram]
    rhs: Callable[[Params], Diagram]
    admissible: Callable[[Params], bool] | None = None
    doc: str = ""

    @property
    def visible_params(self) -> tuple[Param, ...]:
        return tuple(p for p in self.params if not p.hidden)

    def coerce(self, params: Params) -> Params:
        out = dict(params)
        for p in self.visible_params:
            if p.name not in out:
                raise RuleError(f"rule {self.name}: missing parameter {p.name!r}")
            v = out[p.name]
            if p.kind in ("nat", "choice"):
                v = int(v)
                if v < p.lo or (p.hi is not None and v > p.hi):
                    raise RuleError(f"rule {self.name}: {p.name}={v} out of range")
                if p.choices and v not in p.choices:
                    raise RuleError(f"rule {self.name}: {p.name} must be one of {p.choices}")
            elif p.kind == "angle":
                v = as_angle(v)
            out[p.name] = v
        unknown = set(out) - {p.name for p in self.params}
        if unknown:
            raise RuleError(f"rule {self.name}: unknown parameters {sorted(unknown)}")
        return out

    def instantiate(self, params: Params | None = None) -> tuple[Diagram, Diagram]:
        params = self.coerce(params or {})
        return self.lhs(params), self.rhs(params)


def apply_at(
    d: Diagram,
    rule: Rule,
    params: Params | None,
    path: Path = (),
    direction: str = "l2r",
) -> Diagram:
    """Replace the rule side found at ``path`` by the other side."""
    if direction not in ("l2r", "r2l"):
        raise RuleError(f"direction must be l2r or r2l, not {direction!r}")
    lhs, rhs = rule.instantiate(params)
    source, target = (lhs, rhs) if direction == "l2r" else (rhs, lhs)
    found = subterm_at(d, path)
    if found != source:
        raise NoMatch(source, found, path)
    before = dims(d)
    out = replace_at(d, path, target)
    after = dims(out)
    if after != before:
        raise DimError(f"rewrite with {rule.name} changed dims {before} -> {after}")
    return out


# -- soundness harness -------------------------------------------------------


@dataclass
class Failure:
    params: Params
    result: PropResult | None
    error: str = ""


@dataclass
class Report:
    rule: str
    samples: int
    failures: list[Failure] = field(default_factory=list)
    skipped: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def sample_params(rule: Rule, rng: random.Random, max_dim: int) -> Params:
    values: Params = {}
    for p in rule.params:
        if p.kind == "nat":
            hi = max_dim if p.hi is None else min(p.hi, max_dim)
            values[p.name] = rng.randint(p.lo, max(p.lo, hi))
        elif p.kind == "choice":
            values[p.name] = rng.choice(p.choices)
        elif p.kind == "angle":
            values[p.name] = random_angle(rng)
    for p in rule.params:
        if p.kind == "diagram":
            n, m = p.dims(values) if p.dims else (rng.randint(0, max_dim), rng.randint(0, max_dim))
            values[p.name] = random_with_dims(rng, n, m, rng.randint(1, 4), max_wires=max_dim)
    return values


def check_rule(
    rule: Rule,
    samples: int = 50,
    max_dim: int = 4,
    seed: int | None = 0,
    tol: float = DEFAULT_TOL,
) -> Report:
    """Check ``lhs ∝ rhs`` on ``samples`` random parameter assignments."""
    rng = random.Random(f"{seed}:{rule.name}")
    report = Report(rule.name, samples)
    t0 = time.perf_counter()
    for _ in range(samples):
        for _attempt in range(100):
            params = sample_params(rule, rng, max_dim)
            if rule.admissible is None or rule.admissible(params):
                break
            report.skipped += 1
        else:
            continue
        try:
            lhs, rhs = rule.instantiate(params)
            if dims(lhs) != dims(rhs):
                report.failures.append(
                    Failure(params, None, f"dims differ: {dims(lhs)} vs {dims(rhs)}")
                )
                continue
            res = proportional(lhs, rhs, tol)
        except ZXError as e:
            report.failures.append(Failure(params, None, f"{e.kind}: {e}"))
            continue
        if not res:
            report.failures.append(Failure(params, res, res.reason))
    report.seconds = time.perf_counter() - t0
    return report


def colorswap_rule(rule: Rule) -> Rule:
    return Rule(
        f"colorswap:{rule.name}",
        rule.params,
        lambda p: colorswap(rule.lhs(p)),
        lambda p: colorswap(rule.rhs(p)),
        rule.admissible,
        f"colour-swapped {rule.name}",
    )


def transpose_rule(rule: Rule) -> Rule:
    return Rule(
        f"transpose:{rule.name}",
        rule.params,
        lambda p: transpose(rule.lhs(p)),
        lambda p: transpose(rule.rhs(p)),
        rule.admissible,
        f"transposed {rule.name}",
    )


# -- catalog -----------------------------------------------------------------


def _nat(name, lo=0, hi=None, hidden=False):
    return Param(name, "nat", lo, hi, hidden=hidden)


def _ang(name):
    return Param(name, "angle")


def _dia(name, dims_fn=None):
    return Param(name, "diagram", dims=dims_fn)


def _not_zero_scalar(legs_in: Callable[[Params], int], legs_out: Callable[[Params], int], angle):
    """Exclude 0-legged spiders whose phase makes them the zero scalar."""

    def ok(p: Params) -> bool:
        return not (legs_in(p) == 0 and legs_out(p) == 0 and angle(p) == PI)

    return ok


absolute_fusion = Rule(
    "absolute_fusion",
    (_nat("n"), _nat("m"), _ang("alpha"), _ang("beta")),
    lambda p: Compose(Z(p["n"], 1, p["alpha"]), Z(1, p["m"], p["beta"])),
    lambda p: Z(p["n"], p["m"], p["alpha"] + p["beta"]),
    _not_zero_scalar(lambda p: p["n"], lambda p: p["m"], lambda p: p["alpha"] + p["beta"]),
    "Two spiders joined by one wire fuse, adding phases.",
)


def _fusion_lhs(p: Params) -> Diagram:
    top, mid, bot, n, m = p["top"], p["mid"], p["bot"], p["n"], p["m"]
    upper = Cast(n + bot, top + 1 + mid + bot, Stack(Z(n, top + 1 + mid, p["alpha"]), n_wire(bot)))
    lower = Stack(n_wire(top), Z(1 + mid + bot, m, p["beta"]))
    return Compose(upper, lower)


spider_fusion = Rule(
    "spider_fusion",
    (_nat("top"), _nat("mid"), _nat("bot"), _nat("n"), _nat("m"), _ang("alpha"), _ang("beta")),
    _fusion_lhs,
    lambda p: Z(p["n"] + p["bot"], p["top"] + p["m"], p["alpha"] + p["beta"]),
    _not_zero_scalar(
        lambda p: p["n"] + p["bot"], lambda p: p["top"] + p["m"], lambda p: p["alpha"] + p["beta"]
    ),
    "Upper spider's outputs top..top+mid feed the lower spider's first inputs.",
)

grow_Z_left_2_1 = Rule(
    "grow_Z_left_2_1",
    (_nat("m"), _ang("alpha")),
    lambda p: Z(2, p["m"], p["alpha"]),
    lambda p: Compose(Z(2, 1, ZERO), Z(1, p["m"], p["alpha"])),
    doc="Split a phase-free 2->1 spider off the top two inputs.",
)

grow_Z_top_left = Rule(
    "grow_Z_top_left",
    (_nat("n", lo=1), _nat("m"), _ang("alpha")),
    lambda p: Z(p["n"] + 1, p["m"], p["alpha"]),
    lambda p: Compose(
        Cast(p["n"] + 1, p["n"], Stack(Z(2, 1, ZERO), n_wire(p["n"] - 1))),
        Z(p["n"], p["m"], p["alpha"]),
    ),
    doc="Grow a spider by one input via a 2->1 spider on the top wires.",
)

wire_removal = Rule("wire_removal", (), lambda p: Z(1, 1, ZERO), lambda p: Wire())
cup_removal = Rule("cup_removal", (), lambda p: Z(0, 2, ZERO), lambda p: Cup())

self_loop_removal = Rule(
    "self_loop_removal",
    (_nat("n"), _nat("m"), _ang("alpha")),
    lambda p: Compose(Z(p["n"], p["m"] + 2, p["alpha"]), Stack(Cap(), n_wire(p["m"]))),
    lambda p: Z(p["n"], p["m"], p["alpha"]),
    doc="A cap joining the two top outputs of a spider is removed.",
)

bialgebra = Rule(
    "bialgebra",
    (),
    lambda p: Compose(
        Compose(Stack(X(1, 2), X(1, 2)), Stack(Wire(), Stack(Swap(), Wire()))),
        Stack(Z(2, 1), Z(2, 1)),
    ),
    lambda p: Compose(Z(2, 1), X(1, 2)),
)

hopf = Rule(
    "hopf",
    (),
    lambda p: Compose(X(1, 2), Z(2, 1)),
    lambda p: Compose(X(1, 0), Z(0, 1)),
)

bi_pi = Rule(
    "bi_pi",
    (_nat("m"), _ang("alpha")),
    lambda p: Compose(Z(1, 1, PI), X(1, p["m"], p["alpha"])),
    lambda p: Compose(X(1, p["m"], -p["alpha"]), n_stack1(p["m"], Z(1, 1, PI))),
    doc="A pi phase pushed through an X spider negates its phase.",
)

state_copy = Rule(
    "state_copy",
    (Param("k", "choice", choices=(0, 1)), _nat("m")),
    lambda p: Compose(X(0, 1, Angle(p["k"], 1)), Z(1, p["m"], ZERO)),
    lambda p: Cast(0, p["m"], stack_all([X(0, 1, Angle(p["k"], 1))] * p["m"])),
)

_HALF_PI = Angle(1, 2)

box_decomposition = Rule(
    "box_decomposition",
    (),
    lambda p: Box(),
    lambda p: Compose(Z(1, 1, _HALF_PI), Compose(X(1, 1, _HALF_PI), Z(1, 1, _HALF_PI))),
)

yanking = Rule(
    "yanking",
    (),
    lambda p: Compose(Stack(Cup(), Wire()), Stack(Wire(), Cap())),
    lambda p: Wire(),
)

wrap_over_top_left = Rule(
    "wrap_over_top_left",
    (_nat("n"), _nat("m"), _ang("alpha")),
    lambda p: Z(p["n"], p["m"] + 1, p["alpha"]),
    lambda p: Compose(
        Cast(p["n"], p["n"] + 2, Stack(Cup(), n_wire(p["n"]))),
        Stack(Wire(), Z(p["n"] + 1, p["m"], p["alpha"])),
    ),
    doc="The spider's top output is realised by bending its new top input over a cup.",
)

swap_involution = Rule(
    "swap_involution",
    (),
    lambda p: Compose(Swap(), Swap()),
    lambda p: n_wire(2),
)

CATALOG: tuple[Rule, ...] = (
    absolute_fusion,
    spider_fusion,
    grow_Z_left_2_1,
    grow_Z_top_left,
    wire_removal,
    cup_removal,
    self_loop_removal,
    bialgebra,
    hopf,
    bi_pi,
    state_copy,
    box_decomposition,
    yanking,
    wrap_over_top_left,
    swap_involution,
)


# -- structural lemmas (exact equalities) -----------------------------------

compose_assoc = Rule(
    "compose_assoc",
    (_nat("i", hidden=True), _nat("j", hidden=True), _nat("k", hidden=True), _nat("l", hidden=True),
     _dia("a", lambda p: (p["i"], p["j"])), _dia("b", lambda p: (p["j"], p["k"])),
     _dia("c", lambda p: (p["k"], p["l"]))),
    lambda p: Compose(Compose(p["a"], p["b"]), p["c"]),
    lambda p: Compose(p["a"], Compose(p["b"], p["c"])),
)


def _stack3_dims(p: Params) -> tuple[int, int]:
    ds = [dims(p[k]) for k in "abc"]
    return sum(d[0] for d in ds), sum(d[1] for d in ds)


stack_assoc = Rule(
    "stack_assoc",
    (_dia("a"), _dia("b"), _dia("c")),
    lambda p: Stack(Stack(p["a"], p["b"]), p["c"]),
    lambda p: Cast(*_stack3_dims(p), Stack(p["a"], Stack(p["b"], p["c"]))),
)

stack_empty_left = Rule("stack_empty_left", (_dia("a"),), lambda p: Stack(Empty(), p["a"]), lambda p: p["a"])
stack_empty_right = Rule("stack_empty_right", (_dia("a"),), lambda p: Stack(p["a"], Empty()), lambda p: p["a"])

compose_id_left = Rule(
    "compose_id_left", (_dia("a"),), lambda p: Compose(n_wire(dims(p["a"])[0]), p["a"]), lambda p: p["a"]
)
compose_id_right = Rule(
    "compose_id_right", (_dia("a"),), lambda p: Compose(p["a"], n_wire(dims(p["a"])[1])), lambda p: p["a"]
)

stack_compose_distr = Rule(
    "stack_compose_distr",
    (_nat("i", hidden=True), _nat("j", hidden=True), _nat("k", hidden=True),
     _nat("p", hidden=True), _nat("q", hidden=True), _nat("r", hidden=True),
     _dia("a", lambda p: (p["i"], p["j"])), _dia("b", lambda p: (p["j"], p["k"])),
     _dia("c", lambda p: (p["p"], p["q"])), _dia("d", lambda p: (p["q"], p["r"]))),
    lambda p: Compose(Stack(p["a"], p["c"]), Stack(p["b"], p["d"])),
    lambda p: Stack(Compose(p["a"], p["b"]), Compose(p["c"], p["d"])),
)

n_wire_stack = Rule(
    "n_wire_stack",
    (_nat("x"), _nat("y")),
    lambda p: Stack(n_wire(p["x"]), n_wire(p["y"])),
    lambda p: n_wire(p["x"] + p["y"]),
)

cast_elim = Rule("cast_elim", (_dia("a"),), lambda p: Cast(*dims(p["a"]), p["a"]), lambda p: p["a"])

STRUCTURAL: tuple[Rule, ...] = (
    compose_assoc,
    stack_assoc,
    stack_empty_left,
    stack_empty_right,
    compose_id_left,
    compose_id_right,
    stack_compose_distr,
    n_wire_stack,
    cast_elim,
)


def closures(rules=CATALOG) -> list[Rule]:
    """The rules together with their colour-swapped and transposed forms."""
    out = list(rules)
    out += [colorswap_rule(r) for r in rules]
    out += [transpose_rule(r) for r in rules]
    return out


def all_rules() -> list[Rule]:
    return closures(CATALOG + STRUCTURAL)


def get_rule(name: str) -> Rule:
    for r in all_rules():
        if r.name == name:
            return r
    raise RuleError(f"unknown rule {name!r}")
