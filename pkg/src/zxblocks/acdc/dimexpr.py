"""Natural-number dimension expressions and their polynomial normal form."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Union


@dataclass(frozen=True)
class Const:
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("dimension constants are naturals")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    a: DimExpr
    b: DimExpr


@dataclass(frozen=True)
class Mul:
    a: DimExpr
    b: DimExpr


DimExpr = Union[Const, Var, Add, Mul]

Monomial = tuple[str, ...]  # sorted variable names, with repetition


def _mono_key(mono: Monomial):
    return (len(mono), mono)


@dataclass(frozen=True)
class Poly:
    """Polynomial with natural coefficients, kept in canonical order.

    ``terms`` holds ``(monomial, coefficient)`` pairs, constant first, no
    zero coefficients; two polys are equal iff their expressions are equal
    as polynomials.
    """

    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def of(cls, counts: dict[Monomial, int]) -> Poly:
        return cls(tuple(sorted(((m, c) for m, c in counts.items() if c), key=lambda t: _mono_key(t[0]))))

    @classmethod
    def const(cls, k: int) -> Poly:
        return cls.of({(): k})

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls.of({(name,): 1})

    @classmethod
    def from_expr(cls, e: DimExpr | int | Poly) -> Poly:
        match e:
            case Poly():
                return e
            case int():
                return cls.const(e)
            case Const(k):
                return cls.const(k)
            case Var(name):
                return cls.var(name)
            case Add(a, b):
                return cls.from_expr(a) + cls.from_expr(b)
            case Mul(a, b):
                return cls.from_expr(a) * cls.from_expr(b)
        raise TypeError(f"not a dimension expression: {e!r}")

    def __add__(self, other: Poly) -> Poly:
        acc = Counter(dict(self.terms))
        acc.update(dict(other.terms))
        return Poly.of(acc)

    def __sub__(self, other: Poly) -> Poly:
        acc = Counter(dict(self.terms))
        for m, c in other.terms:
            acc[m] -= c
            if acc[m] < 0:
                raise ValueError("dimension subtraction went negative")
        return Poly.of(acc)

    def __mul__(self, other: Poly) -> Poly:
        acc: Counter = Counter()
        for (m1, c1), (m2, c2) in product(self.terms, other.terms):
            acc[tuple(sorted(m1 + m2))] += c1 * c2
        return Poly.of(acc)

    @property
    def is_const(self) -> bool:
        return all(not m for m, _ in self.terms)

    @property
    def constant(self) -> int:
        return dict(self.terms).get((), 0)

    def variables(self) -> set[str]:
        return {v for m, _ in self.terms for v in m}

    def evaluate(self, env: dict[str, int]) -> int:
        total = 0
        for mono, c in self.terms:
            val = c
            for v in mono:
                val *= env[v]
            total += val
        return total

    def splits(self):
        """Every way to write self as q + r with q, r both non-zero."""
        ranges = [range(c + 1) for _, c in self.terms]
        for picks in product(*ranges):
            q = Poly.of({m: k for (m, _), k in zip(self.terms, picks)})
            if q.terms and q != self:
                yield q, self - q

    def n_splits(self) -> int:
        total = 1
        for _, c in self.terms:
            total *= c + 1
        return max(total - 2, 0)

    def to_expr(self) -> DimExpr:
        if not self.terms:
            return Const(0)
        parts = []
        for mono, c in self.terms:
            factors: list[DimExpr] = [Var(v) for v in mono]
            if c != 1 or not factors:
                factors.insert(0, Const(c))
            parts.append(_fold(Mul, factors))
        return _fold(Add, parts)

    def __str__(self) -> str:
        return dim_to_text(self.to_expr())


def _fold(cls, items: list[DimExpr]) -> DimExpr:
    out = items[-1]
    for item in reversed(items[:-1]):
        out = cls(item, out)
    return out


def normalize_dim(e: DimExpr) -> DimExpr:
    """Canonical form: constants folded, identities dropped, terms sorted."""
    return Poly.from_expr(e).to_expr()


def dim_equal(a: DimExpr, b: DimExpr) -> bool:
    return Poly.from_expr(a) == Poly.from_expr(b)


def dim_to_text(e: DimExpr) -> str:
    match e:
        case Const(k):
            return str(k)
        case Var(name):
            return name
        case Add(a, b):
            return f"(+ {dim_to_text(a)} {dim_to_text(b)})"
        case Mul(a, b):
            return f"(* {dim_to_text(a)} {dim_to_text(b)})"
    raise TypeError(f"not a dimension expression: {e!r}")
