"""Exact evaluation for diagrams whose phases are multiples of pi/4.

Every such matrix lies in ``Z[w] / sqrt(2)^s`` with ``w = exp(i pi/4)``. A
matrix is stored as four integer coefficient arrays over the basis
``1, w, w^2, w^3`` (using ``w^4 = -1``) together with the exponent ``s``.
Since that basis is linearly independent over the rationals, two values are
equal exactly when their coefficients agree once the scales are aligned.

This is an independent route to the semantics: it shares no code with the
floating-point evaluator beyond the term types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .angle import Angle
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
    dims,
)

_LIMIT = 2**52  # keep int64 products far from overflow


class InexactAngle(ValueError):
    pass


@dataclass(frozen=True)
class ExactMatrix:
    coeffs: np.ndarray  # int64, shape (4, rows, cols)
    scale: int = 0  # value = sum_k coeffs[k] w^k / sqrt(2)^scale

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape[1:]

    @classmethod
    def integer(cls, mat, scale: int = 0) -> ExactMatrix:
        mat = np.asarray(mat, dtype=np.int64)
        coeffs = np.zeros((4,) + mat.shape, dtype=np.int64)
        coeffs[0] = mat
        return cls(coeffs, scale)

    def _combine(self, other: ExactMatrix, op) -> ExactMatrix:
        a, b = self.coeffs, other.coeffs
        out = None
        for i in range(4):
            for j in range(4):
                term = op(a[i], b[j])
                if out is None:
                    out = np.zeros((4,) + term.shape, dtype=np.int64)
                k = i + j
                if k < 4:
                    out[k] += term
                else:
                    out[k - 4] -= term
        if out.size and np.max(np.abs(out)) > _LIMIT:
            raise OverflowError("exact coefficients grew too large")
        return ExactMatrix(out, self.scale + other.scale)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return self._combine(other, np.matmul)

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        return self._combine(other, np.kron)

    def times_sqrt2(self) -> ExactMatrix:
        # sqrt(2) = w - w^3
        c = self.coeffs
        out = np.stack([c[1] - c[3], c[0] + c[2], c[1] + c[3], c[2] - c[0]])
        return ExactMatrix(out, self.scale)

    def rescaled(self, scale: int) -> ExactMatrix:
        """The same value written with a larger scale exponent."""
        if scale < self.scale:
            raise ValueError("can only raise the scale")
        out = self
        for _ in range(scale - self.scale):
            out = out.times_sqrt2()
        return ExactMatrix(out.coeffs, scale)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix) or self.shape != other.shape:
            return False
        s = max(self.scale, other.scale)
        return bool(np.array_equal(self.rescaled(s).coeffs, other.rescaled(s).coeffs))

    __hash__ = None

    def to_complex(self) -> np.ndarray:
        w = np.exp(1j * np.pi / 4)
        total = sum(self.coeffs[k] * w**k for k in range(4))
        return np.asarray(total, dtype=complex) / np.sqrt(2) ** self.scale


def _omega_power(k: int) -> ExactMatrix:
    k %= 8
    coeffs = np.zeros((4, 1, 1), dtype=np.int64)
    coeffs[k % 4, 0, 0] = 1 if k < 4 else -1
    return ExactMatrix(coeffs)


def eighths(alpha: Angle) -> int:
    """The phase as a multiple of pi/4, or ``InexactAngle``."""
    if not alpha.exact:
        raise InexactAngle(f"{alpha} is not an exact multiple of pi")
    q = Fraction(alpha.num, alpha.den) * 4
    if q.denominator != 1:
        raise InexactAngle(f"{alpha} is not a multiple of pi/4")
    return int(q) % 8


def _z(n: int, m: int, alpha: Angle) -> ExactMatrix:
    k = eighths(alpha)
    coeffs = np.zeros((4, 2**m, 2**n), dtype=np.int64)
    coeffs[0, 0, 0] += 1
    coeffs += np.pad(
        _omega_power(k).coeffs, ((0, 0), (2**m - 1, 0), (2**n - 1, 0))
    )
    return ExactMatrix(coeffs)


_H = ExactMatrix.integer([[1, 1], [1, -1]], scale=1)


def _hadamards(k: int) -> ExactMatrix:
    out = ExactMatrix.integer([[1]])
    for _ in range(k):
        out = out.kron(_H)
    return out


def _leaf(d: Diagram) -> ExactMatrix:
    match d:
        case Empty():
            return ExactMatrix.integer([[1]])
        case Wire():
            return ExactMatrix.integer(np.eye(2))
        case Box():
            return _H
        case Cap():
            return ExactMatrix.integer([[1, 0, 0, 1]])
        case Cup():
            return ExactMatrix.integer([[1], [0], [0], [1]])
        case Swap():
            return ExactMatrix.integer([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    raise TypeError(f"not a leaf: {d!r}")


def _go(d: Diagram) -> ExactMatrix:
    match d:
        case Z(n, m, alpha):
            return _z(n, m, alpha)
        case X(n, m, alpha):
            return _hadamards(m) @ _z(n, m, alpha) @ _hadamards(n)
        case Stack(a, b):
            return _go(a).kron(_go(b))
        case Compose(a, b):
            return _go(b) @ _go(a)
        case Cast(_, _, inner):
            return _go(inner)
    return _leaf(d)


def exact_eval(d: Diagram) -> ExactMatrix:
    """Exact semantics; raises ``InexactAngle`` for other phases."""
    dims(d)
    return _go(d)


def is_exact(d: Diagram) -> bool:
    try:
        exact_eval(d)
    except (InexactAngle, OverflowError):
        return False
    return True
