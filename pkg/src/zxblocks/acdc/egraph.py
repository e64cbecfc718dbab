"""A small e-graph: union-find, hashcons, congruence-closing rebuild, and
e-matching over a tiny pattern language.

E-nodes are tuples ``(op, args, kids)`` where dimension args are ``Poly``
normal forms and kids are e-class ids. Every class carries an (inputs,
outputs) analysis; merging two classes whose analyses differ is an error,
since the rewrite rules are meant to preserve well-formedness.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Any, Union

from ..core import ZXError
from .dimexpr import Poly
from .terms import LEAF_DIMS, Sym, SymDimError

ENode = tuple  # (op: str, args: tuple, kids: tuple[int, ...])
Dims = tuple[Poly, Poly]


class InconsistentDims(ZXError):
    kind = "inconsistent-dims"


# -- patterns ----------------------------------------------------------------

@dataclass(frozen=True)
class P:
    """Pattern/template node. In args and kids a string ``"?x"`` is a variable.

    Template args may also be callables taking the match bindings.
    """

    op: str
    args: tuple = ()
    kids: tuple = ()


Pattern = Union[P, str]


def is_var(x) -> bool:
    return isinstance(x, str) and x.startswith("?")


class Bindings:
    """Variable bindings plus access to bound classes' dimensions."""

    def __init__(self, values: dict[str, Any], dims_of: Callable[[Any], Dims]):
        self.values = values
        self._dims_of = dims_of

    def __getitem__(self, name: str):
        return self.values[name]

    def dims(self, name: str) -> Dims:
        return self._dims_of(self.values[name])

    def inp(self, name: str) -> Poly:
        return self.dims(name)[0]

    def out(self, name: str) -> Poly:
        return self.dims(name)[1]


def node_dims(op: str, args: tuple, kid_dims: list[Dims]) -> Dims:
    match op:
        case leaf if leaf in LEAF_DIMS:
            n, m = LEAF_DIMS[leaf]
            return Poly.const(n), Poly.const(m)
        case "Z" | "X":
            return args[0], args[1]
        case "nwire":
            return args[0], args[0]
        case "var":
            return args[1], args[2]
        case "stack":
            (a0, a1), (b0, b1) = kid_dims
            return a0 + b0, a1 + b1
        case "compose":
            (a0, a1), (b0, b1) = kid_dims
            if a1 != b0:
                raise SymDimError(f"compose of {a1} outputs into {b0} inputs")
            return a0, b1
        case "cast":
            if (args[0], args[1]) != kid_dims[0]:
                raise SymDimError(f"cast to ({args[0]}, {args[1]}) over {kid_dims[0]}")
            return args[0], args[1]
    raise ValueError(f"unknown op {op!r}")


def norm_args(t: Sym) -> tuple:
    """Sym args with every dimension expression replaced by its Poly."""
    match t.op:
        case "Z" | "X":
            return (Poly.from_expr(t.args[0]), Poly.from_expr(t.args[1]), t.args[2])
        case "var":
            return (t.args[0], Poly.from_expr(t.args[1]), Poly.from_expr(t.args[2]))
        case "nwire" | "cast":
            return tuple(Poly.from_expr(a) for a in t.args)
    return ()


# -- the e-graph -------------------------------------------------------------

@dataclass
class EGraph:
    parent: list[int] = field(default_factory=list)
    nodes: dict[int, dict[ENode, None]] = field(default_factory=dict)
    uses: dict[int, list[tuple[ENode, int]]] = field(default_factory=dict)
    analysis: dict[int, Dims] = field(default_factory=dict)
    hashcons: dict[ENode, int] = field(default_factory=dict)
    dirty: list[int] = field(default_factory=list)
    n_nodes: int = 0

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def canon(self, node: ENode) -> ENode:
        op, args, kids = node
        return (op, args, tuple(self.find(k) for k in kids))

    def dims(self, c: int) -> Dims:
        return self.analysis[self.find(c)]

    def classes(self) -> list[int]:
        return list(self.nodes)

    def add(self, node: ENode) -> int:
        node = self.canon(node)
        known = self.hashcons.get(node)
        if known is not None:
            return self.find(known)
        op, args, kids = node
        d = node_dims(op, args, [self.analysis[k] for k in kids])
        cid = len(self.parent)
        self.parent.append(cid)
        self.nodes[cid] = {node: None}
        self.uses[cid] = []
        self.analysis[cid] = d
        for k in set(kids):
            self.uses[k].append((node, cid))
        self.hashcons[node] = cid
        self.n_nodes += 1
        return cid

    def add_term(self, t: Sym) -> int:
        kids = tuple(self.add_term(k) for k in t.kids)
        return self.add((t.op, norm_args(t), kids))

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.analysis[a] != self.analysis[b]:
            da, db = self.analysis[a], self.analysis[b]
            raise InconsistentDims(
                f"merging classes of dims ({da[0]}, {da[1]}) and ({db[0]}, {db[1]})"
            )
        if len(self.uses[a]) < len(self.uses[b]):
            a, b = b, a
        self.parent[b] = a
        self.nodes[a].update(self.nodes.pop(b))
        self.uses[a].extend(self.uses.pop(b))
        del self.analysis[b]
        self.dirty.append(a)
        return True

    def equiv(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def rebuild(self):
        """Restore the hashcons and congruence invariants after unions."""
        while self.dirty:
            todo = {self.find(c) for c in self.dirty}
            self.dirty = []
            for c in sorted(todo):
                self._repair(self.find(c))
        for c, ns in self.nodes.items():
            self.nodes[c] = dict.fromkeys(self.canon(n) for n in ns)

    def _repair(self, c: int):
        old = self.uses[c]
        self.uses[c] = []
        for node, cid in old:
            self.hashcons.pop(node, None)
            self.hashcons[self.canon(node)] = self.find(cid)
        fresh: dict[ENode, int] = {}
        for node, cid in old:
            node = self.canon(node)
            if node in fresh:
                self.union(cid, fresh[node])
            fresh[node] = self.find(cid)
        self.uses[self.find(c)].extend(fresh.items())

    # -- e-matching -----------------------------------------------------------

    def bindings(self, values: dict) -> Bindings:
        return Bindings(values, self.dims)

    def ematch(self, pat: Pattern, c: int, b: dict) -> Iterator[dict]:
        c = self.find(c)
        if is_var(pat):
            if pat not in b:
                yield {**b, pat: c}
            elif self.find(b[pat]) == c:
                yield b
            return
        for op, args, kids in self.nodes[c]:
            if op != pat.op or len(kids) != len(pat.kids):
                continue
            b1 = _match_args(pat.args, args, b)
            if b1 is not None:
                yield from self._match_kids(pat.kids, kids, b1)

    def _match_kids(self, pats, kids, b) -> Iterator[dict]:
        if not pats:
            yield b
            return
        for b1 in self.ematch(pats[0], kids[0], b):
            yield from self._match_kids(pats[1:], kids[1:], b1)

    def instantiate(self, tmpl: Pattern, b: dict) -> int:
        if is_var(tmpl):
            return b[tmpl]
        bind = self.bindings(b)
        args = tuple(_arg_value(a, b, bind) for a in tmpl.args)
        kids = tuple(self.instantiate(k, b) for k in tmpl.kids)
        return self.add((tmpl.op, args, kids))


def _match_args(pats: tuple, args: tuple, b: dict) -> dict | None:
    if len(pats) != len(args):
        return None if pats else b
    for p, a in zip(pats, args):
        if is_var(p):
            if p in b and b[p] != a:
                return None
            b = {**b, p: a}
        elif p != a:
            return None
    return b


def _arg_value(a, b: dict, bind: Bindings):
    if is_var(a):
        return b[a]
    if callable(a):
        return a(bind)
    return a
