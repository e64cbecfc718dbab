"""Nested-box rendering of block diagrams as SVG or ASCII.

Composition runs left to right and stacking top to bottom, matching how
the terms are read. Every Stack, Compose and Cast gets a dashed frame so
the block structure stays visible; the dash styles differ per construct.
"""

from __future__ import annotations

from dataclasses import dataclass
from html import escape

from .acdc.dimexpr import Poly
from .acdc.terms import Sym, lift, sym_dims
from .angle import Angle
from .core import dims

Z_FILL = "#2ecc71"
X_FILL = "#e74c3c"
BOX_STROKE = "#f1c40f"
VAR_FILL = "#d6eaf8"
DASHES = {"stack": "6 3", "compose": "2 2", "cast": "8 3 2 3"}

PAD = 0.2  # frame padding, in layout units
GAP = 0.2  # space between siblings
LABEL = 0.4  # room for a cast's dimension label
MARGIN = 2.0  # pixels around the outermost frame


@dataclass(frozen=True)
class Node:
    kind: str  # Z X wire box cap cup swap empty nwire var stack compose cast
    label: str
    x: float
    y: float
    w: float
    h: float
    ins: int = 0
    outs: int = 0
    children: tuple[Node, ...] = ()


@dataclass(frozen=True)
class Scene:
    root: Node
    width: float
    height: float
    scale: float


def _count(p: Poly) -> int:
    """Wires to draw for a dimension; symbolic ones draw as two."""
    return p.constant if p.is_const else 2


def _label(t: Sym) -> str:
    match t.op:
        case "Z" | "X":
            a: Angle = t.args[2]
            return "" if a == Angle() else a.label()
        case "nwire":
            return str(Poly.from_expr(t.args[0]))
        case "var":
            return t.args[0]
        case "cast":
            n, m = (Poly.from_expr(a) for a in t.args)
            return f"{n}→{m}"
        case "box":
            return "H"
    return ""


def _natural(t: Sym) -> tuple[float, float]:
    match t.op:
        case "compose":
            (wa, ha), (wb, hb) = (_natural(k) for k in t.kids)
            return wa + wb + GAP + 2 * PAD, max(ha, hb) + 2 * PAD
        case "stack":
            (wa, ha), (wb, hb) = (_natural(k) for k in t.kids)
            return max(wa, wb) + 2 * PAD, ha + hb + GAP + 2 * PAD
        case "cast":
            w, h = _natural(t.kids[0])
            return w + 2 * PAD, h + 2 * PAD + LABEL
    n, m = sym_dims(t)
    return 1.0, float(max(1, _count(n), _count(m)))


def _place(t: Sym, x: float, y: float, w: float, h: float) -> Node:
    n, m = sym_dims(t)
    label = _label(t)
    ins, outs = _count(n), _count(m)
    match t.op:
        case "compose":
            a, b = t.kids
            wa, wb = _natural(a)[0], _natural(b)[0]
            inner = w - 2 * PAD - GAP
            w1 = inner * wa / (wa + wb)
            kids = (
                _place(a, x + PAD, y + PAD, w1, h - 2 * PAD),
                _place(b, x + PAD + w1 + GAP, y + PAD, inner - w1, h - 2 * PAD),
            )
        case "stack":
            a, b = t.kids
            ha, hb = _natural(a)[1], _natural(b)[1]
            inner = h - 2 * PAD - GAP
            h1 = inner * ha / (ha + hb)
            kids = (
                _place(a, x + PAD, y + PAD, w - 2 * PAD, h1),
                _place(b, x + PAD, y + PAD + h1 + GAP, w - 2 * PAD, inner - h1),
            )
        case "cast":
            kids = (_place(t.kids[0], x + PAD, y + PAD + LABEL, w - 2 * PAD, h - 2 * PAD - LABEL),)
        case _:
            kids = ()
    return Node(t.op, label, x, y, w, h, ins, outs, kids)


def layout(d, scale: float = 40.0) -> Scene:
    """Lay out a concrete or symbolic diagram; ``scale`` is pixels per unit."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    if isinstance(d, Sym):
        sym_dims(d)
        t = d
    else:
        dims(d)
        t = lift(d)
    w, h = _natural(t)
    return Scene(_place(t, 0.0, 0.0, w, h), w, h, scale)


# -- SVG ---------------------------------------------------------------------

def _f(v: float) -> str:
    return f"{v:.2f}"


def _ports(y: float, h: float, k: int) -> list[float]:
    return [y + h * (i + 1) / (k + 1) for i in range(k)]


def _svg_leaf(n: Node, s: float) -> list[str]:
    x, y, w, h = n.x * s, n.y * s, n.w * s, n.h * s
    cx, cy = x + w / 2, y + h / 2
    out = []
    line = '<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000" stroke-width="1.5"/>'
    match n.kind:
        case "Z" | "X" | "box" | "var":
            for py in _ports(y, h, n.ins):
                out.append(line.format(_f(x), _f(py), _f(cx), _f(cy)))
            for py in _ports(y, h, n.outs):
                out.append(line.format(_f(cx), _f(cy), _f(x + w), _f(py)))
            r = min(w, h) * 0.3
            if n.kind in ("Z", "X"):
                fill = Z_FILL if n.kind == "Z" else X_FILL
                out.append(
                    f'<circle class="zx-{n.kind}" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" '
                    f'fill="{fill}" stroke="#000"/>'
                )
            elif n.kind == "box":
                out.append(
                    f'<rect class="zx-box" x="{_f(cx - r)}" y="{_f(cy - r)}" width="{_f(2 * r)}" '
                    f'height="{_f(2 * r)}" fill="#fff" stroke="{BOX_STROKE}" stroke-width="2"/>'
                )
            else:
                out.append(
                    f'<rect class="zx-var" x="{_f(x + w * 0.15)}" y="{_f(y + h * 0.1)}" '
                    f'width="{_f(w * 0.7)}" height="{_f(h * 0.8)}" fill="{VAR_FILL}" stroke="#000"/>'
                )
        case "wire" | "nwire":
            for py in _ports(y, h, n.ins):
                out.append(line.format(_f(x), _f(py), _f(x + w), _f(py)))
        case "swap":
            p0, p1 = _ports(y, h, 2)
            out.append(line.format(_f(x), _f(p0), _f(x + w), _f(p1)))
            out.append(line.format(_f(x), _f(p1), _f(x + w), _f(p0)))
        case "cap" | "cup":
            p0, p1 = _ports(y, h, 2)
            edge, bulge = (x, x + w * 0.8) if n.kind == "cap" else (x + w, x + w * 0.2)
            out.append(
                f'<path class="zx-{n.kind}" d="M {_f(edge)} {_f(p0)} C {_f(bulge)} {_f(p0)} '
                f'{_f(bulge)} {_f(p1)} {_f(edge)} {_f(p1)}" fill="none" stroke="#000" stroke-width="1.5"/>'
            )
        case "empty":
            out.append(
                f'<rect class="zx-empty" x="{_f(x + w * 0.3)}" y="{_f(y + h * 0.3)}" '
                f'width="{_f(w * 0.4)}" height="{_f(h * 0.4)}" fill="none" stroke="#999" '
                f'stroke-dasharray="1 2"/>'
            )
    if n.label:
        # spider phases sit under the node; other labels are centred on it
        ty = y + h - 3 if n.kind in ("Z", "X") else cy + s * 0.1
        out.append(
            f'<text x="{_f(cx)}" y="{_f(ty)}" font-size="{_f(s * 0.3)}" '
            f'text-anchor="middle" font-family="sans-serif">{escape(n.label)}</text>'
        )
    return out


def _svg_node(n: Node, s: float) -> list[str]:
    if n.kind not in DASHES:
        return _svg_leaf(n, s)
    out = [
        f'<rect class="zx-{n.kind}" x="{_f(n.x * s)}" y="{_f(n.y * s)}" width="{_f(n.w * s)}" '
        f'height="{_f(n.h * s)}" fill="none" stroke="#555" stroke-dasharray="{DASHES[n.kind]}"/>'
    ]
    if n.kind == "cast":
        out.append(
            f'<text x="{_f(n.x * s + 4)}" y="{_f((n.y + PAD + LABEL * 0.6) * s)}" '
            f'font-size="{_f(s * 0.3)}" font-family="sans-serif">cast {escape(n.label)}</text>'
        )
    for k in n.children:
        out.extend(_svg_node(k, s))
    return out


def to_svg(scene: Scene) -> str:
    s = scene.scale
    w, h = scene.width * s, scene.height * s
    body = "\n".join("  " + line for line in _svg_node(scene.root, s))
    m = MARGIN
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w + 2 * m)}" height="{_f(h + 2 * m)}" '
        f'viewBox="{_f(-m)} {_f(-m)} {_f(w + 2 * m)} {_f(h + 2 * m)}">\n{body}\n</svg>\n'
    )


# -- ASCII -------------------------------------------------------------------

# (horizontal, vertical) frame glyphs per construct
_FRAME = {"stack": ("┄", "┆"), "compose": ("╌", "╎"), "cast": ("─", "│")}


def _width(lines: list[str]) -> int:
    return max((len(line) for line in lines), default=0)


def _ascii_leaf(n: Node) -> list[str]:
    tag = f" {n.label}" if n.label and n.kind in ("Z", "X") else ""
    match n.kind:
        case "wire":
            return ["───"]
        case "nwire":
            if n.label.isdigit() and int(n.label) > 0:
                return ["───"] * int(n.label)
            return [f"═{n.label}═"]
        case "Z":
            return [f"─(Z{tag})─"]
        case "X":
            return [f"─(X{tag})─"]
        case "box":
            return ["─[H]─"]
        case "var":
            return [f"─[{n.label}]─"]
        case "cap":
            return ["─╮", "─╯"]
        case "cup":
            return ["╭─", "╰─"]
        case "swap":
            return ["─╲╱─", "─╱╲─"]
    return ["∅"]


def _ascii(n: Node) -> list[str]:
    if n.kind not in _FRAME:
        return _ascii_leaf(n)
    parts = [_ascii(k) for k in n.children]
    if n.kind == "compose":
        height = max(len(p) for p in parts)
        parts = [p + [" " * _width(p)] * (height - len(p)) for p in parts]
        body = [" ".join(p[i].ljust(_width(p)) for p in parts) for i in range(height)]
    else:
        body = [line for p in parts for line in p]
    width = _width(body)
    hz, vt = _FRAME[n.kind]
    title = f" cast {n.label} " if n.kind == "cast" else ""
    width = max(width, len(title))
    top = "┌" + title + hz * (width + 2 - len(title)) + "┐"
    bottom = "└" + hz * (width + 2) + "┘"
    return [top] + [f"{vt} {line.ljust(width)} {vt}" for line in body] + [bottom]


def to_ascii(scene: Scene) -> str:
    return "\n".join(_ascii(scene.root)) + "\n"
