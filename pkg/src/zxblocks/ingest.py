"""RzQ circuits: the ``.zxc`` line format, translation to diagrams, and a
plain state-vector style unitary builder used as an independent oracle.

Qubits are 0-indexed; qubit 0 is the top wire and the most significant bit
of a basis index, matching the diagram semantics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angle import PI, Angle, AngleSyntaxError, parse_angle
from .core import (
    Box,
    Compose,
    Diagram,
    Stack,
    Swap,
    Wire,
    X,
    Z,
    ZXError,
    a_swap,
    compose_all,
    n_wire,
    pad,
)


class CircuitError(ZXError):
    kind = "circuit"

    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class CircuitSyntaxError(CircuitError):
    kind = "circuit-syntax"


class QubitIndexError(CircuitError):
    kind = "qubit-index"


@dataclass(frozen=True)
class Gate:
    name: str  # h | x | z | t | rz | cnot
    qubits: tuple[int, ...]
    angle: Angle | None = None

    def __str__(self) -> str:
        qs = " ".join(map(str, self.qubits))
        if self.name == "rz":
            return f"rz {self.angle} {qs}"
        return f"{self.name} {qs}"


@dataclass(frozen=True)
class Circuit:
    qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.qubits < 1:
            raise CircuitError("a circuit needs at least one qubit")
        for g in self.gates:
            _check_gate(g, self.qubits)

    def __add__(self, other: Circuit) -> Circuit:
        if other.qubits != self.qubits:
            raise CircuitError("cannot concatenate circuits of different widths")
        return Circuit(self.qubits, self.gates + other.gates)

    def to_text(self) -> str:
        return "\n".join([f"qubits {self.qubits}"] + [str(g) for g in self.gates]) + "\n"


def _check_gate(g: Gate, n: int, line: int | None = None):
    for q in g.qubits:
        if not 0 <= q < n:
            raise QubitIndexError(f"qubit {q} out of range for {n} qubits", line)
    if g.name == "cnot" and g.qubits[0] == g.qubits[1]:
        raise QubitIndexError("cnot control and target coincide", line)


def parse_circuit(text: str) -> Circuit:
    n = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        op = toks[0].lower()
        if n is None:
            if op != "qubits" or len(toks) != 2 or not toks[1].isdigit():
                raise CircuitSyntaxError("first statement must be 'qubits N'", lineno)
            n = int(toks[1])
            if n < 1:
                raise CircuitSyntaxError("qubit count must be positive", lineno)
            continue
        args = toks[1:]
        try:
            if op in ("h", "x", "z", "t") and len(args) == 1:
                g = Gate(op, (int(args[0]),))
            elif op == "rz" and len(args) >= 2:
                g = Gate("rz", (int(args[-1]),), parse_angle("".join(args[:-1])))
            elif op == "cnot" and len(args) == 2:
                g = Gate("cnot", (int(args[0]), int(args[1])))
            else:
                raise CircuitSyntaxError(f"cannot parse {raw.strip()!r}", lineno)
        except (ValueError, AngleSyntaxError):
            raise CircuitSyntaxError(f"bad argument in {raw.strip()!r}", lineno) from None
        _check_gate(g, n, lineno)
        gates.append(g)
    if n is None:
        raise CircuitSyntaxError("missing 'qubits N' header")
    return Circuit(n, tuple(gates))


# -- translation -------------------------------------------------------------

CNOT_BODY = Compose(Stack(Z(1, 2), Wire()), Stack(Wire(), X(2, 1)))


def gate_body(g: Gate) -> Diagram:
    match g.name:
        case "h":
            return Box()
        case "x":
            return X(1, 1, PI)
        case "z":
            return Z(1, 1, PI)
        case "t":
            return Z(1, 1, Angle(1, 4))
        case "rz":
            return Z(1, 1, g.angle)
    raise CircuitError(f"no single-wire body for {g.name}")


def _cnot_block(control: int, target: int) -> Diagram:
    """A CNOT on a contiguous block of wires whose ends are control/target."""
    width = abs(control - target) + 1
    body = CNOT_BODY if control < target else Compose(Swap(), Compose(CNOT_BODY, Swap()))
    if width == 2:
        return body
    # bring the far end next to the near one, act, and move it back
    if control < target:
        route = Stack(Wire(), a_swap(width - 1))
        return compose_all([route, Stack(body, n_wire(width - 2)), route])
    route = Stack(a_swap(width - 1), Wire())
    return compose_all([route, Stack(n_wire(width - 2), body), route])


def gate_to_zx(g: Gate, n: int) -> Diagram:
    """An n->n diagram applying ``g``."""
    _check_gate(g, n)
    if g.name == "cnot":
        c, t = g.qubits
        lo, hi = min(c, t), max(c, t)
        return pad(lo, _cnot_block(c, t), n - hi - 1)
    (q,) = g.qubits
    return pad(q, gate_body(g), n - q - 1)


def ingest(c: Circuit) -> Diagram:
    if not c.gates:
        return n_wire(c.qubits)
    return compose_all([gate_to_zx(g, c.qubits) for g in c.gates])


# -- unitary oracle ----------------------------------------------------------

_GATE_MATRICES = {
    "h": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "t": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex),
}


def _bit(idx: np.ndarray, q: int, n: int) -> np.ndarray:
    return (idx >> (n - 1 - q)) & 1


def gate_unitary(g: Gate, n: int) -> np.ndarray:
    dim = 2**n
    idx = np.arange(dim)
    if g.name == "cnot":
        c, t = g.qubits
        dst = idx ^ (_bit(idx, c, n) << (n - 1 - t))
        out = np.zeros((dim, dim), dtype=complex)
        out[dst, idx] = 1
        return out
    (q,) = g.qubits
    if g.name == "rz":
        u = np.diag([1, np.exp(1j * g.angle.value)]).astype(complex)
    else:
        u = _GATE_MATRICES[g.name]
    rows, cols = np.meshgrid(idx, idx, indexing="ij")
    mask = (rows ^ cols) & ~(1 << (n - 1 - q)) == 0
    return np.where(mask, u[_bit(rows, q, n), _bit(cols, q, n)], 0).astype(complex)


def unitary(c: Circuit) -> np.ndarray:
    out = np.eye(2**c.qubits, dtype=complex)
    for g in c.gates:
        out = gate_unitary(g, c.qubits) @ out
    return out


# -- peephole identities -----------------------------------------------------

PEEPHOLE: tuple[tuple[str, str, str], ...] = (
    ("h_h", "qubits 1\nh 0\nh 0", "qubits 1"),
    ("cnot_cnot", "qubits 2\ncnot 0 1\ncnot 0 1", "qubits 2"),
    ("rz_merge", "qubits 1\nrz pi/4 0\nrz 3pi/8 0", "qubits 1\nrz 5pi/8 0"),
    ("x_x", "qubits 1\nx 0\nx 0", "qubits 1"),
    ("x_through_cnot", "qubits 2\ncnot 0 1\nx 0\ncnot 0 1", "qubits 2\nx 0\nx 1"),
    ("rz_control_commute", "qubits 2\nrz pi/3 0\ncnot 0 1", "qubits 2\ncnot 0 1\nrz pi/3 0"),
)
