import random

import numpy as np
import pytest
from conftest import seeds
from hypothesis import given

from zxblocks.angle import Angle
from zxblocks.core import Box, Compose, Stack, Wire, X, Z
from zxblocks.exact import ExactMatrix, InexactAngle, eighths, exact_eval, is_exact
from zxblocks.generate import EIGHTHS, random_diagram
from zxblocks.semantics import evaluate


def test_eighths():
    assert eighths(Angle(3, 4)) == 3
    assert eighths(Angle(-1, 4)) == 7
    with pytest.raises(InexactAngle):
        eighths(Angle(1, 3))
    with pytest.raises(InexactAngle):
        eighths(Angle.radians(0.25))


def test_sqrt2_scaling_is_exact():
    h = exact_eval(Box())
    assert (h @ h) == ExactMatrix.integer(np.eye(2))
    assert h.times_sqrt2().rescaled(3) == h.times_sqrt2()
    assert np.allclose(h.times_sqrt2().to_complex(), [[1, 1], [1, -1]])


def test_equality_is_value_equality():
    # pi/4 + pi/4 + pi/2 = pi, so two Z(pi/4) and a Z(pi/2) compose to Z(pi)
    quarter = Z(1, 1, Angle(1, 4))
    d = Compose(Compose(quarter, quarter), Z(1, 1, Angle(1, 2)))
    assert exact_eval(d) == exact_eval(Z(1, 1, Angle(1, 1)))
    assert exact_eval(d) != exact_eval(Wire())


def test_is_exact():
    assert is_exact(Stack(X(1, 2, Angle(5, 4)), Box()))
    assert not is_exact(Z(1, 1, Angle(1, 3)))


@given(seeds)
def test_agrees_with_float_evaluator(seed):
    d = random_diagram(random.Random(seed), max_wires=4, size=7, angles=EIGHTHS)
    assert np.allclose(exact_eval(d).to_complex(), evaluate(d), atol=1e-10)
