"""Dense matrix semantics of diagrams.

A diagram with ``n`` inputs and ``m`` outputs evaluates to a complex
``2**m x 2**n`` array. The top wire of a stack is the most significant bit
of a basis-state index, i.e. the left Kronecker factor.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .angle import Angle, as_angle
from .core import (
    Box,
    Cap,
    Cast,
    Compose,
    Cup,
    Diagram,
    Empty,
    Stack,
    Swap,
    Wire,
    X,
    Z,
    ZXError,
    dims,
)

CMatrix = np.ndarray

H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
KET0 = np.array([[1], [0]], dtype=complex)
KET1 = np.array([[0], [1]], dtype=complex)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
    dtype=complex,
)
CAP = np.array([[1, 0, 0, 1]], dtype=complex)
CUP = CAP.T.copy()


class ShapeMismatch(ZXError):
    kind = "shape-mismatch"


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product; row index is ``a_row * b.rows + b_row``."""
    return np.kron(a, b)


def matmul(a: CMatrix, b: CMatrix) -> CMatrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron_power(m: CMatrix, k: int) -> CMatrix:
    return reduce(kron, [m] * k, np.ones((1, 1), dtype=complex))


def identity(n_qubits: int) -> CMatrix:
    return np.eye(2**n_qubits, dtype=complex)


def z_matrix_direct(n: int, m: int, alpha: Angle) -> CMatrix:
    alpha = as_angle(alpha)
    out = np.zeros((2**m, 2**n), dtype=complex)
    out[0, 0] += 1
    out[-1, -1] += alpha.phase()
    return out


def z_matrix_braket(n: int, m: int, alpha: Angle) -> CMatrix:
    """|0..0><0..0| + e^{ia} |1..1><1..1| from Kronecker powers of kets."""
    alpha = as_angle(alpha)
    zeros = kron_power(KET0, m) @ kron_power(KET0, n).T
    ones = kron_power(KET1, m) @ kron_power(KET1, n).T
    return zeros + alpha.phase() * ones


def _plus_minus(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Columns 0 and 2**k - 1 of H^{(x)k}: |+..+> and |-..->."""
    plus = np.full(2**k, 2.0 ** (-k / 2), dtype=complex)
    minus = np.array([1.0], dtype=complex)
    for _ in range(k):
        minus = np.kron(minus, np.array([1, -1], dtype=complex) / np.sqrt(2))
    return plus, minus


def x_matrix(n: int, m: int, alpha: Angle) -> CMatrix:
    """H^{(x)m} Z H^{(x)n}, using that Z has only two non-zero entries."""
    alpha = as_angle(alpha)
    p_out, m_out = _plus_minus(m)
    p_in, m_in = _plus_minus(n)
    return np.outer(p_out, p_in) + alpha.phase() * np.outer(m_out, m_in)


_LEAVES = {
    Empty: np.ones((1, 1), dtype=complex),
    Wire: np.eye(2, dtype=complex),
    Box: H,
    Cap: CAP,
    Cup: CUP,
    Swap: SWAP,
}


def _eval(d: Diagram, z_matrix) -> CMatrix:
    match d:
        case Z(n, m, a):
            return z_matrix(n, m, a)
        case X(n, m, a):
            return x_matrix(n, m, a)
        case Stack(a, b):
            return kron(_eval(a, z_matrix), _eval(b, z_matrix))
        case Compose(a, b):
            return matmul(_eval(b, z_matrix), _eval(a, z_matrix))
        case Cast(_, _, inner):
            return _eval(inner, z_matrix)
    return _LEAVES[type(d)].copy()


def evaluate(d: Diagram, braket: bool = False) -> CMatrix:
    """Semantics of a well-formed diagram as a ``2**out x 2**in`` array.

    ``braket`` switches Z spiders to the ket-product construction.
    """
    dims(d)
    return _eval(d, z_matrix_braket if braket else z_matrix_direct)


def format_matrix(mat: CMatrix) -> str:
    """``rows cols`` header then one row per line, entries as ``a+bi``."""
    lines = [f"{mat.shape[0]} {mat.shape[1]}"]
    for row in mat:
        lines.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}i" for z in row))
    return "\n".join(lines)


def parse_matrix(text: str) -> CMatrix:
    lines = text.strip().splitlines()
    rows, cols = map(int, lines[0].split())
    entries = [complex(tok.replace("i", "j")) for line in lines[1:] for tok in line.split()]
    if len(entries) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
    return np.array(entries, dtype=complex).reshape(rows, cols)


def permutation_matrix(n_qubits: int, perm: list[int]) -> CMatrix:
    """Matrix moving the content of wire ``i`` to wire ``perm[i]``."""
    size = 2**n_qubits
    out = np.zeros((size, size), dtype=complex)
    for src in range(size):
        bits = [(src >> (n_qubits - 1 - i)) & 1 for i in range(n_qubits)]
        dst_bits = [0] * n_qubits
        for i, b in enumerate(bits):
            dst_bits[perm[i]] = b
        dst = 0
        for b in dst_bits:
            dst = (dst << 1) | b
        out[dst, src] = 1
    return out
