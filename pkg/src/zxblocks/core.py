"""Block-structured ZX-diagram terms.

A diagram is an immutable tree built from the leaf generators (``Empty``,
``Wire``, ``Box``, ``Cap``, ``Cup``, ``Swap`` and the two spider colours)
combined with ``Stack`` (parallel, top over bottom) and ``Compose``
(sequential, left to right). ``Cast`` re-annotates the dimensions of its
inner term and is well-formed only when the annotation agrees with them.

Dimensions are ``(inputs, outputs)`` pairs of plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .angle import ZERO, Angle, as_angle

Path = tuple[int, ...]


class ZXError(Exception):
    """Base class for diagram errors."""

    kind = "zx"


class DimError(ZXError):
    kind = "dim"


class ComposeMismatch(DimError):
    kind = "compose-mismatch"

    def __init__(self, expected: int, found: int, path: Path):
        self.expected, self.found, self.path = expected, found, tuple(path)
        super().__init__(
            f"compose at {format_path(self.path)}: second term must take "
            f"{expected} inputs, found {found}"
        )


class CastMismatch(DimError):
    kind = "cast-mismatch"

    def __init__(self, declared: tuple[int, int], actual: tuple[int, int], path: Path):
        self.declared, self.actual, self.path = declared, actual, tuple(path)
        super().__init__(
            f"cast at {format_path(self.path)}: declared {declared}, inner has {actual}"
        )


class PathInvalid(ZXError):
    kind = "path-invalid"


@dataclass(frozen=True)
class Empty:
    def __str__(self):
        return "empty"


@dataclass(frozen=True)
class Wire:
    def __str__(self):
        return "wire"


@dataclass(frozen=True)
class Box:
    def __str__(self):
        return "box"


@dataclass(frozen=True)
class Cap:
    def __str__(self):
        return "cap"


@dataclass(frozen=True)
class Cup:
    def __str__(self):
        return "cup"


@dataclass(frozen=True)
class Swap:
    def __str__(self):
        return "swap"


@dataclass(frozen=True)
class Z:
    n: int
    m: int
    alpha: Angle = ZERO

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_angle(self.alpha))
        if self.n < 0 or self.m < 0:
            raise ValueError("spider legs must be non-negative")


@dataclass(frozen=True)
class X:
    n: int
    m: int
    alpha: Angle = ZERO

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_angle(self.alpha))
        if self.n < 0 or self.m < 0:
            raise ValueError("spider legs must be non-negative")


@dataclass(frozen=True)
class Stack:
    left: Diagram
    right: Diagram


@dataclass(frozen=True)
class Compose:
    first: Diagram
    second: Diagram


@dataclass(frozen=True)
class Cast:
    n: int
    m: int
    inner: Diagram


Diagram = Union[Empty, Wire, Box, Cap, Cup, Swap, Z, X, Stack, Compose, Cast]

LEAF_DIMS = {Empty: (0, 0), Wire: (1, 1), Box: (1, 1), Cap: (2, 0), Cup: (0, 2), Swap: (2, 2)}
LEAVES = (Empty, Wire, Box, Cap, Cup, Swap)


def format_path(path: Path) -> str:
    return ".".join(map(str, path)) if path else "root"


def parse_path(text: str) -> Path:
    text = text.strip()
    if text in ("", "root", "."):
        return ()
    try:
        return tuple(int(p) for p in text.split("."))
    except ValueError:
        raise PathInvalid(f"bad path {text!r}") from None


def dims(d: Diagram, _path: Path = ()) -> tuple[int, int]:
    """Return ``(inputs, outputs)``, raising on ill-formed Compose/Cast."""
    match d:
        case Z(n, m, _) | X(n, m, _):
            return n, m
        case Stack(a, b):
            na, ma = dims(a, _path + (0,))
            nb, mb = dims(b, _path + (1,))
            return na + nb, ma + mb
        case Compose(a, b):
            na, ma = dims(a, _path + (0,))
            nb, mb = dims(b, _path + (1,))
            if ma != nb:
                raise ComposeMismatch(ma, nb, _path)
            return na, mb
        case Cast(n, m, inner):
            actual = dims(inner, _path + (0,))
            if actual != (n, m):
                raise CastMismatch((n, m), actual, _path)
            return n, m
    try:
        return LEAF_DIMS[type(d)]
    except KeyError:
        raise TypeError(f"not a diagram: {d!r}") from None


def is_well_formed(d: Diagram) -> bool:
    try:
        dims(d)
    except DimError:
        return False
    return True


def size(d: Diagram) -> int:
    """Number of constructors in the term."""
    match d:
        case Stack(a, b) | Compose(a, b):
            return 1 + size(a) + size(b)
        case Cast(_, _, inner):
            return 1 + size(inner)
    return 1


# -- derived constructions ---------------------------------------------------


def n_wire(n: int) -> Diagram:
    """``n`` wires, right-associated: Stack(Wire, Stack(Wire, ...))."""
    return n_stack1(n, Wire())


def n_stack1(n: int, d: Diagram) -> Diagram:
    if dims(d) != (1, 1):
        raise DimError(f"n_stack1 needs a 1->1 diagram, got {dims(d)}")
    if n < 0:
        raise DimError("negative stack count")
    if n == 0:
        return Empty()
    out = d
    for _ in range(n - 1):
        out = Stack(d, out)
    return out


def stack_all(parts: list[Diagram]) -> Diagram:
    """Right-associated stack of ``parts``; Empty when there are none."""
    if not parts:
        return Empty()
    return reduce(lambda acc, p: Stack(p, acc), reversed(parts[:-1]), parts[-1])


def compose_all(parts: list[Diagram]) -> Diagram:
    """Left-to-right sequential composition, left-associated."""
    if not parts:
        raise ValueError("compose_all needs at least one diagram")
    return reduce(Compose, parts)


def pad_top(k: int, d: Diagram) -> Diagram:
    return Stack(n_wire(k), d)


def pad_bot(k: int, d: Diagram) -> Diagram:
    return Stack(d, n_wire(k))


def pad(top: int, d: Diagram, bot: int) -> Diagram:
    """Pad with wires above and below, omitting zero-width padding."""
    if bot:
        d = pad_bot(bot, d)
    if top:
        d = pad_top(top, d)
    return d


def zx_shift(n: int) -> Diagram:
    """Cyclic shift moving wire 0 to wire n-1; the others move up by one.

    Built from adjacent swaps, top swap first.
    """
    if n < 1:
        raise DimError("zx_shift needs at least one wire")
    if n == 1:
        return Wire()
    return compose_all([pad(i, Swap(), n - i - 2) for i in range(n - 1)])


def a_swap(n: int) -> Diagram:
    """Exchange wire 0 and wire n-1 of an n-wire bundle."""
    if n < 2:
        raise DimError("a_swap needs at least two wires")
    return Compose(zx_shift(n), Stack(transpose(zx_shift(n - 1)), Wire()))


# -- meta transforms ---------------------------------------------------------


def colorswap(d: Diagram) -> Diagram:
    match d:
        case Z(n, m, a):
            return X(n, m, a)
        case X(n, m, a):
            return Z(n, m, a)
        case Stack(a, b):
            return Stack(colorswap(a), colorswap(b))
        case Compose(a, b):
            return Compose(colorswap(a), colorswap(b))
        case Cast(n, m, inner):
            return Cast(n, m, colorswap(inner))
    return d


def transpose(d: Diagram) -> Diagram:
    match d:
        case Z(n, m, a):
            return Z(m, n, a)
        case X(n, m, a):
            return X(m, n, a)
        case Cap():
            return Cup()
        case Cup():
            return Cap()
        case Stack(a, b):
            return Stack(transpose(a), transpose(b))
        case Compose(a, b):
            return Compose(transpose(b), transpose(a))
        case Cast(n, m, inner):
            return Cast(m, n, transpose(inner))
    return d


def conjugate(d: Diagram) -> Diagram:
    """Negate every spider phase."""
    match d:
        case Z(n, m, a):
            return Z(n, m, -a)
        case X(n, m, a):
            return X(n, m, -a)
        case Stack(a, b):
            return Stack(conjugate(a), conjugate(b))
        case Compose(a, b):
            return Compose(conjugate(a), conjugate(b))
        case Cast(n, m, inner):
            return Cast(n, m, conjugate(inner))
    return d


def adjoint(d: Diagram) -> Diagram:
    return conjugate(transpose(d))


# -- subterm addressing ------------------------------------------------------


def children(d: Diagram) -> tuple[Diagram, ...]:
    match d:
        case Stack(a, b):
            return (a, b)
        case Compose(a, b):
            return (a, b)
        case Cast(_, _, inner):
            return (inner,)
    return ()


def subterm_at(d: Diagram, path: Path) -> Diagram:
    cur = d
    for depth, sel in enumerate(path):
        kids = children(cur)
        if not 0 <= sel < len(kids):
            raise PathInvalid(
                f"path {format_path(tuple(path))}: no child {sel} at depth {depth}"
            )
        cur = kids[sel]
    return cur


def replace_at(d: Diagram, path: Path, new: Diagram) -> Diagram:
    if not path:
        return new
    sel, rest = path[0], path[1:]
    kids = children(d)
    if not 0 <= sel < len(kids):
        raise PathInvalid(f"no child {sel} under {type(d).__name__}")
    match d:
        case Stack(a, b):
            return Stack(replace_at(a, rest, new), b) if sel == 0 else Stack(a, replace_at(b, rest, new))
        case Compose(a, b):
            return Compose(replace_at(a, rest, new), b) if sel == 0 else Compose(a, replace_at(b, rest, new))
        case Cast(n, m, inner):
            return Cast(n, m, replace_at(inner, rest, new))
    raise PathInvalid(f"cannot descend into {type(d).__name__}")


def iter_paths(d: Diagram, _prefix: Path = ()):
    """Yield ``(path, subterm)`` in pre-order."""
    yield _prefix, d
    for i, c in enumerate(children(d)):
        yield from iter_paths(c, _prefix + (i,))


def find_subterm(d: Diagram, target: Diagram) -> Path | None:
    for path, sub in iter_paths(d):
        if sub == target:
            return path
    return None
