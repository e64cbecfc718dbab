"""Random well-formed diagrams for sampling and property tests."""

from __future__ import annotations

import random

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
    n_wire,
)

SAMPLE_ANGLES = tuple(Angle.pi(f) for f in ("0", "1/4", "1/2", "1", "5/4", "3/2"))
EIGHTHS = tuple(Angle(k, 4) for k in range(8))


def random_angle(rng: random.Random, p_table: float = 0.7) -> Angle:
    """Mostly from the fixed sample table, otherwise a random rational of pi."""
    if rng.random() < p_table:
        return rng.choice(SAMPLE_ANGLES)
    den = rng.randint(1, 12)
    return Angle(rng.randint(0, 2 * den - 1), den)


def _leaf(rng: random.Random, n: int, m: int, angles=None) -> Diagram:
    fixed = {
        (0, 0): [Empty()],
        (1, 1): [Wire(), Box()],
        (2, 0): [Cap()],
        (0, 2): [Cup()],
        (2, 2): [Swap(), n_wire(2)],
    }.get((n, m), [])
    if n == m and n > 2 and rng.random() < 0.2:
        return n_wire(n)
    if fixed and rng.random() < 0.5:
        return rng.choice(fixed)
    cls = rng.choice((Z, X))
    return cls(n, m, rng.choice(angles) if angles else random_angle(rng))


def random_with_dims(
    rng: random.Random, n: int, m: int, size: int = 4, max_wires: int = 5, angles=None
) -> Diagram:
    """A random term with exactly ``n`` inputs and ``m`` outputs.

    ``size`` bounds the number of internal Stack/Compose/Cast nodes and
    ``max_wires`` bounds the width of any intermediate composition. Spider
    phases come from ``angles`` when given.
    """
    if size <= 1:
        return _leaf(rng, n, m, angles)
    roll = rng.random()
    if roll < 0.4:
        mid = rng.randint(0, max(max_wires, 1))
        k = rng.randint(1, size - 1)
        return Compose(
            random_with_dims(rng, n, mid, k, max_wires, angles),
            random_with_dims(rng, mid, m, size - k, max_wires, angles),
        )
    if roll < 0.85 and (n + m) > 0:
        n1, m1 = rng.randint(0, n), rng.randint(0, m)
        k = rng.randint(1, size - 1)
        return Stack(
            random_with_dims(rng, n1, m1, k, max_wires, angles),
            random_with_dims(rng, n - n1, m - m1, size - k, max_wires, angles),
        )
    if roll < 0.92:
        return Cast(n, m, random_with_dims(rng, n, m, size - 1, max_wires, angles))
    return _leaf(rng, n, m, angles)


def random_diagram(rng: random.Random, max_wires: int = 5, size: int = 8, angles=None) -> Diagram:
    n, m = rng.randint(0, max_wires), rng.randint(0, max_wires)
    return random_with_dims(rng, n, m, rng.randint(1, size), max_wires, angles)

