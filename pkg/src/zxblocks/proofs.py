"""Scripted rewrite proofs built from ``apply_at`` steps.

``z_absolute_fusion`` fuses two Z spiders joined by any positive number of
wires, reducing to the single-wire ``absolute_fusion`` rule by induction on
the wire count: grow both spiders so the connecting wires pair up,
reassociate, fuse the innermost pair, shrink the identities away, recurse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .angle import ZERO, Angle, as_angle
from .core import Compose, Diagram, Stack, X, Z, n_wire, subterm_at
from .ingest import ingest, parse_circuit
from .prop import PropResult, proportional
from .rules import apply_at, get_rule


@dataclass(frozen=True)
class Step:
    rule: str
    params: dict
    path: tuple[int, ...]
    direction: str
    result: Diagram


@dataclass
class Proof:
    start: Diagram
    steps: list[Step] = field(default_factory=list)

    @property
    def current(self) -> Diagram:
        return self.steps[-1].result if self.steps else self.start

    def apply(self, rule: str, params: dict | None = None, path=(), direction: str = "l2r"):
        params = params or {}
        out = apply_at(self.current, get_rule(rule), params, tuple(path), direction)
        self.steps.append(Step(rule, params, tuple(path), direction, out))
        return self

    def at(self, path) -> Diagram:
        return subterm_at(self.current, tuple(path))

    def check(self, tol: float = 1e-9) -> list[PropResult]:
        """Proportionality of every intermediate term to the starting one."""
        return [proportional(s.result, self.start, tol) for s in self.steps]


def _fuse_innermost(proof: Proof) -> None:
    """Rewrite Compose(Z 1 2 0, Z 2 1 0) at (1, 0, 0) to a wire."""
    at = (1, 0, 0)
    z12, z21 = Z(1, 2, ZERO), Z(2, 1, ZERO)
    proof.apply("stack_empty_right", {"a": z12}, at + (0,), "r2l")
    proof.apply("cast_elim", {"a": proof.at(at + (0,))}, at + (0,), "r2l")
    proof.apply("stack_empty_left", {"a": z21}, at + (1,), "r2l")
    proof.apply(
        "spider_fusion",
        {"top": 0, "mid": 1, "bot": 0, "n": 1, "m": 1, "alpha": ZERO, "beta": ZERO},
        at,
    )
    proof.apply("wire_removal", {}, at)


def _reduce_once(proof: Proof, n: int, p: int, o: int, alpha: Angle, beta: Angle) -> None:
    """Compose(Z n (p+1) a, Z (p+1) o b) -> Compose(Z n p a, Z p o b)."""
    proof.apply("transpose:grow_Z_top_left", {"n": p, "m": n, "alpha": alpha}, (0,))
    proof.apply("grow_Z_top_left", {"n": p, "m": o, "alpha": beta}, (1,))
    a, c1 = proof.at((0,)).first, proof.at((0,)).second
    c2, b = proof.at((1,)).first, proof.at((1,)).second
    proof.apply("compose_assoc", {"a": a, "b": c1, "c": proof.at((1,))})
    proof.apply("compose_assoc", {"a": c1, "b": c2, "c": b}, (1,), "r2l")
    proof.apply("cast_elim", {"a": c1.inner}, (1, 0, 0))
    proof.apply("cast_elim", {"a": c2.inner}, (1, 0, 1))
    nw = n_wire(p - 1)
    proof.apply(
        "stack_compose_distr",
        {"a": c1.inner.left, "b": c2.inner.left, "c": nw, "d": nw},
        (1, 0),
    )
    _fuse_innermost(proof)
    proof.apply("compose_id_left", {"a": nw}, (1, 0, 1))
    if p == 1:
        proof.apply("stack_empty_right", {"a": proof.at((1, 0, 0))}, (1, 0))
    proof.apply("compose_id_left", {"a": b}, (1,))


def z_absolute_fusion(n: int, m: int, o: int, alpha=ZERO, beta=ZERO) -> Proof:
    """Rewrite Compose(Z n m a, Z m o b) into Z n o (a+b), for m >= 1."""
    if m < 1:
        raise ValueError("the spiders must share at least one wire")
    alpha, beta = as_angle(alpha), as_angle(beta)
    proof = Proof(Compose(Z(n, m, alpha), Z(m, o, beta)))
    for p in range(m - 1, 0, -1):
        _reduce_once(proof, n, p, o, alpha, beta)
    proof.apply("absolute_fusion", {"n": n, "m": o, "alpha": alpha, "beta": beta})
    return proof


# -- Bell state preparation --------------------------------------------------

BELL_CIRCUIT = "qubits 2\nh 0\ncnot 0 1\n"


def bell_prep() -> Diagram:
    """|00> (as two phase-free X states) fed through H then CNOT."""
    state = Stack(X(0, 1, ZERO), X(0, 1, ZERO))
    return Compose(state, ingest(parse_circuit(BELL_CIRCUIT)))
