"""Proportionality: ``[[d0]] = c [[d1]]`` for some non-zero scalar ``c``."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import Diagram, dims
from .semantics import CMatrix, evaluate

DEFAULT_TOL = 1e-9


class Verdict(enum.Enum):
    PROPORTIONAL = "proportional"
    NOT_PROPORTIONAL = "not-proportional"
    SHAPE_MISMATCH = "shape-mismatch"


@dataclass(frozen=True)
class PropResult:
    verdict: Verdict
    scalar: complex | None = None
    reason: str = ""
    index: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.verdict is Verdict.PROPORTIONAL

    def __str__(self) -> str:
        if self:
            c = self.scalar
            return f"proportional c={c.real:.17g}{c.imag:+.17g}i"
        return self.verdict.value


def proportional_matrices(a: CMatrix, b: CMatrix, tol: float = DEFAULT_TOL) -> PropResult:
    """Decide ``a = c * b`` with ``c != 0``, returning the witness ``c``.

    The witness is read off at the entry where ``b`` has the largest modulus.
    Two zero matrices are proportional with witness 1.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return PropResult(Verdict.SHAPE_MISMATCH, reason=f"{a.shape} vs {b.shape}")
    max_a = float(np.max(np.abs(a))) if a.size else 0.0
    idx = np.unravel_index(int(np.argmax(np.abs(b))), b.shape) if b.size else (0, 0)
    max_b = abs(b[idx]) if b.size else 0.0
    if max_b <= tol:
        if max_a <= tol:
            return PropResult(Verdict.PROPORTIONAL, 1 + 0j, "both zero")
        return PropResult(Verdict.NOT_PROPORTIONAL, reason="second matrix is zero")
    c = complex(a[idx] / b[idx])
    if abs(c) <= tol:
        return PropResult(Verdict.NOT_PROPORTIONAL, reason="witness is zero", index=tuple(map(int, idx)))
    resid = np.abs(a - c * b)
    bound = tol * max(1.0, max_a)
    bad = np.argwhere(resid > bound)
    if len(bad):
        i, j = map(int, bad[0])
        return PropResult(
            Verdict.NOT_PROPORTIONAL,
            reason=f"entry ({i},{j}) off by {resid[i, j]:.3g}",
            index=(i, j),
        )
    return PropResult(Verdict.PROPORTIONAL, c)


def proportional(d0: Diagram, d1: Diagram, tol: float = DEFAULT_TOL) -> PropResult:
    s0, s1 = dims(d0), dims(d1)
    if s0 != s1:
        return PropResult(Verdict.SHAPE_MISMATCH, reason=f"dims {s0} vs {s1}")
    return proportional_matrices(evaluate(d0), evaluate(d1), tol)
