"""Random symbolic terms and structure-preserving perturbations of them."""

from __future__ import annotations

import random

from ..generate import random_angle
from .dimexpr import Poly
from .terms import Sym, cast, compose, leaf, meta, nwire, spider, stack, sym_dims

DIM_POOL = (Poly.const(0), Poly.const(1), Poly.const(2), Poly.var("n"), Poly.var("n") + Poly.const(1), Poly.var("k"))


def _pick_split(rng: random.Random, p: Poly) -> tuple[Poly, Poly]:
    options = [(Poly.const(0), p), (p, Poly.const(0))] + list(p.splits())
    return rng.choice(options)


def random_sym(rng: random.Random, n: Poly, m: Poly, size: int = 5, _names=None) -> Sym:
    """A random well-formed symbolic term of dims ``(n, m)``.

    Leaves are fresh metavariables, or spiders and wires when the dims allow.
    """
    names = _names if _names is not None else iter(f"m{i}" for i in range(10_000))
    if size <= 1:
        roll = rng.random()
        if n == m and roll < 0.25:
            return nwire(n.to_expr())
        if roll < 0.45 and n.is_const and m.is_const:
            return spider(rng.choice("ZX"), n.constant, m.constant, random_angle(rng))
        return meta(next(names), n.to_expr(), m.to_expr())
    k = rng.randint(1, size - 1)
    if rng.random() < 0.5:
        mid = rng.choice(DIM_POOL)
        return compose(random_sym(rng, n, mid, k, names), random_sym(rng, mid, m, size - k, names))
    n1, n2 = _pick_split(rng, n)
    m1, m2 = _pick_split(rng, m)
    return stack(random_sym(rng, n1, m1, k, names), random_sym(rng, n2, m2, size - k, names))


def _d(p: Poly):
    return p.to_expr()


def _rewrite_once(rng: random.Random, t: Sym) -> Sym:
    """One random law-respecting edit at the root of ``t`` (or ``t`` itself)."""
    n, m = sym_dims(t)
    a = t.kids[0] if t.kids else None
    b = t.kids[1] if len(t.kids) > 1 else None
    options = [
        lambda: compose(nwire(_d(n)), t),
        lambda: compose(t, nwire(_d(m))),
        lambda: stack(leaf("empty"), t),
        lambda: stack(t, leaf("empty")),
        lambda: cast(_d(n), _d(m), t),
    ]
    if t.op == "compose" and a.op == "compose":
        options.append(lambda: compose(a.kids[0], compose(a.kids[1], b)))
    if t.op == "compose" and b.op == "compose":
        options.append(lambda: compose(compose(a, b.kids[0]), b.kids[1]))
    if t.op == "stack" and a.op == "stack":
        options.append(lambda: cast(_d(n), _d(m), stack(a.kids[0], stack(a.kids[1], b))))
    if t.op == "stack" and b.op == "stack":
        options.append(lambda: stack(stack(a, b.kids[0]), b.kids[1]))
    if t.op == "stack" and a.op == "compose" and b.op == "compose":
        options.append(lambda: compose(stack(a.kids[0], b.kids[0]), stack(a.kids[1], b.kids[1])))
    if t.op == "wire":
        options.append(lambda: nwire(1))
    return rng.choice(options)()


def perturb(rng: random.Random, t: Sym, p: float = 0.3) -> Sym:
    """Rebuild ``t`` bottom-up, applying a random edit at each node with probability ``p``."""
    if t.kids:
        t = Sym(t.op, t.args, tuple(perturb(rng, k, p) for k in t.kids))
    if rng.random() < p:
        t = _rewrite_once(rng, t)
    return t
