import random

import numpy as np
import pytest
from conftest import diagrams, seeds
from hypothesis import given
from hypothesis import strategies as st

from zxblocks.angle import PI, ZERO
from zxblocks.core import Box, Compose, Stack, Swap, Wire, X, Z, dims, n_wire
from zxblocks.generate import random_with_dims
from zxblocks.prop import Verdict, proportional, proportional_matrices
from zxblocks.semantics import H, evaluate


def test_matrix_examples():
    r = proportional_matrices(np.eye(2), np.eye(2))
    assert r and r.scalar == 1
    r = proportional_matrices(2j * H, H)
    assert r and r.scalar == pytest.approx(2j)
    r = proportional_matrices(evaluate(Wire()), evaluate(Box()))
    assert r.verdict is Verdict.NOT_PROPORTIONAL
    assert r.index is not None


def test_diagram_examples():
    assert proportional(Z(1, 1, ZERO), Wire()).scalar == pytest.approx(1)
    assert proportional(X(1, 1, ZERO), Wire()).scalar == pytest.approx(1)
    assert proportional(Compose(Swap(), Swap()), n_wire(2)).scalar == pytest.approx(1)
    assert not proportional(Z(1, 1, PI), X(1, 1, PI))
    assert not proportional(Swap(), n_wire(2))


def test_shape_mismatch():
    assert proportional(Wire(), Swap()).verdict is Verdict.SHAPE_MISMATCH
    assert proportional_matrices(np.eye(2), np.eye(4)).verdict is Verdict.SHAPE_MISMATCH


def test_zero_policy():
    zero = np.zeros((2, 2))
    assert proportional_matrices(zero, zero).scalar == 1
    assert not proportional_matrices(np.eye(2), zero)
    assert not proportional_matrices(zero, np.eye(2))


def test_relative_tolerance_on_large_matrices():
    big = 1e6 * np.eye(2)
    assert proportional_matrices(big + 1e-5, big)
    assert not proportional_matrices(big + np.diag([0, 1e-1]), big)


def test_str():
    assert str(proportional(Wire(), Wire())) == "proportional c=1+0i"
    assert str(proportional(Wire(), Box())) == "not-proportional"


def _nonzero(d):
    return float(np.max(np.abs(evaluate(d)))) > 1e-6


@st.composite
def scaled_pairs(draw):
    """A random term and a proportional variant made by stacking on a scalar."""
    d = draw(diagrams(max_wires=4, size=6))
    rng = random.Random(draw(seeds))
    scalar = random_with_dims(rng, 0, 0, size=3, max_wires=3)
    return d, Stack(d, scalar), Stack(scalar, d)


@given(scaled_pairs())
def test_equivalence_relation(triple):
    a, b, c = triple
    if not all(_nonzero(x) for x in triple):
        return
    ra = proportional(a, a)
    assert ra and ra.scalar == pytest.approx(1)
    rab, rba = proportional(a, b), proportional(b, a)
    assert rab and rba
    assert rba.scalar == pytest.approx(1 / rab.scalar, rel=1e-9)
    rbc, rac = proportional(b, c), proportional(a, c)
    assert rbc and rac
    assert rac.scalar == pytest.approx(rab.scalar * rbc.scalar, rel=1e-9)


@given(scaled_pairs(), seeds)
def test_congruence(triple, seed):
    a, b, _ = triple
    if not (_nonzero(a) and _nonzero(b)):
        return
    rng = random.Random(seed)
    _, m = dims(a)
    e = random_with_dims(rng, rng.randint(0, 2), rng.randint(0, 2), size=3, max_wires=3)
    assert proportional(Stack(a, e), Stack(b, e)) or not _nonzero(Stack(a, e))
    f = random_with_dims(rng, m, rng.randint(0, 3), size=3, max_wires=3)
    if _nonzero(Compose(a, f)):
        r = proportional(Compose(a, f), Compose(b, f))
        assert r and r.scalar == pytest.approx(proportional(a, b).scalar, rel=1e-9)
