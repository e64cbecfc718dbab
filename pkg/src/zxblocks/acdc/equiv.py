"""Structural equivalence by equality saturation, plus a refutation search."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from ..exact import exact_eval, is_exact
from ..generate import EIGHTHS
from ..semantics import evaluate
from .egraph import EGraph
from .laws import LAWS, Law
from .terms import Sym, lower, random_instance, stack, sym_dims

MAX_ITERS = 30
MAX_NODES = 100_000


@dataclass(frozen=True)
class LogEntry:
    iteration: int
    law: str
    eclass: int


@dataclass
class Stats:
    iterations: int = 0
    nodes: int = 0
    classes: int = 0
    stop: str = ""  # equal | saturated | iter-limit | node-limit | dim-mismatch


@dataclass
class EquivResult:
    equal: bool
    stats: Stats
    log: list[LogEntry] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "Equal" if self.equal else "NotProved"

    def __str__(self) -> str:
        s = self.stats
        return (
            f"{self.verdict} ({s.stop}; iterations={s.iterations}"
            f" nodes={s.nodes} classes={s.classes})"
        )


def _search(eg: EGraph, law: Law) -> list[tuple[int, dict]]:
    found = []
    for c in eg.classes():
        for b in eg.ematch(law.lhs, c, {}):
            if law.guard is None or law.guard(eg.bindings(b)):
                found.append((c, b))
    return found


def saturate_step(eg: EGraph, laws, iteration: int, log: list, max_nodes: int) -> bool:
    """One match/apply/rebuild round; True if anything changed."""
    matches = [(law, c, b) for law in laws for c, b in _search(eg, law)]
    before = eg.n_nodes
    changed = False
    for law, c, b in matches:
        if eg.n_nodes > max_nodes:
            break
        if eg.union(c, eg.instantiate(law.rhs, b)):
            changed = True
            log.append(LogEntry(iteration, law.name, eg.find(c)))
    eg.rebuild()
    return changed or eg.n_nodes != before


def struct_equiv(
    t1: Sym,
    t2: Sym,
    max_iters: int = MAX_ITERS,
    max_nodes: int = MAX_NODES,
    laws: tuple[Law, ...] = LAWS,
) -> EquivResult:
    """Decide whether the laws prove ``t1 = t2``; NotProved is not a disproof."""
    d1, d2 = sym_dims(t1), sym_dims(t2)
    stats = Stats()
    log: list[LogEntry] = []
    if d1 != d2:
        stats.stop = "dim-mismatch"
        return EquivResult(False, stats, log)
    eg = EGraph()
    r1, r2 = eg.add_term(t1), eg.add_term(t2)

    def done(equal: bool, why: str) -> EquivResult:
        stats.nodes, stats.classes, stats.stop = eg.n_nodes, len(eg.nodes), why
        return EquivResult(equal, stats, log)

    if eg.equiv(r1, r2):
        return done(True, "equal")
    for it in range(1, max_iters + 1):
        stats.iterations = it
        changed = saturate_step(eg, laws, it, log, max_nodes)
        if eg.equiv(r1, r2):
            return done(True, "equal")
        if eg.n_nodes > max_nodes:
            return done(False, "node-limit")
        if not changed:
            return done(False, "saturated")
    return done(False, "iter-limit")


@dataclass(frozen=True)
class Counterexample:
    env: dict
    subst: dict
    detail: str


def refute(t1: Sym, t2: Sym, trials: int = 20, seed: int = 0, max_nat: int = 3, tol: float = 1e-9):
    """Search for a concrete instance where the two sides differ as matrices.

    Heuristic: finding nothing says nothing. Dimension variables get nats up
    to ``max_nat`` and metavariables random diagrams of the right shape. The
    comparison is exact when every phase is a multiple of pi/4 and otherwise
    falls back to floating point within ``tol``.
    """
    if sym_dims(t1) != sym_dims(t2):
        return Counterexample({}, {}, "dimensions differ symbolically")
    probe = stack(t1, t2)
    rng = random.Random(seed)
    for _ in range(trials):
        env, subst = random_instance(probe, rng, max_nat, angles=EIGHTHS)
        d1, d2 = lower(t1, env, subst), lower(t2, env, subst)
        if is_exact(d1) and is_exact(d2):
            if exact_eval(d1) != exact_eval(d2):
                return Counterexample(env, subst, "matrices differ exactly")
            continue
        diff = float(np.max(np.abs(evaluate(d1) - evaluate(d2))))
        if diff > tol:
            return Counterexample(env, subst, f"matrices differ by {diff:.3g}")
    return None

