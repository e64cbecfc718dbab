import itertools
import math

import numpy as np
import pytest
from conftest import close, diagrams, diagrams_with_dims
from hypothesis import given
from hypothesis import strategies as st

from zxblocks.angle import PI, ZERO, Angle
from zxblocks.core import (
    Box,
    Cap,
    Cast,
    Compose,
    Cup,
    Empty,
    Stack,
    Swap,
    Wire,
    X,
    Z,
    colorswap,
    dims,
)
from zxblocks.generate import SAMPLE_ANGLES
from zxblocks.semantics import (
    H,
    ShapeMismatch,
    evaluate,
    format_matrix,
    identity,
    kron,
    matmul,
    parse_matrix,
    permutation_matrix,
    x_matrix,
    z_matrix_braket,
    z_matrix_direct,
)

I2 = np.eye(2)


def outer_z(n, m, alpha):
    """Brute-force |0..0><0..0| + e^{ia}|1..1><1..1| from basis indices."""
    out = np.zeros((2**m, 2**n), dtype=complex)
    for r, c in itertools.product(range(2**m), range(2**n)):
        if r == 0 and c == 0:
            out[r, c] += 1
        if r == 2**m - 1 and c == 2**n - 1:
            out[r, c] += complex(math.cos(alpha.value), math.sin(alpha.value))
    return out


def test_leaf_clauses():
    assert np.array_equal(evaluate(Empty()), [[1]])
    assert np.array_equal(evaluate(Wire()), I2)
    assert np.array_equal(evaluate(Box()), np.array([[1, 1], [1, -1]]) / math.sqrt(2))
    assert np.array_equal(evaluate(Cap()), [[1, 0, 0, 1]])
    assert np.array_equal(evaluate(Cup()), [[1], [0], [0], [1]])
    swap = np.zeros((4, 4))
    for i in range(4):
        swap[((i & 1) << 1) | (i >> 1), i] = 1
    assert np.array_equal(evaluate(Swap()), swap)


def test_spider_clauses():
    assert np.array_equal(evaluate(Z(1, 1, ZERO)), I2)
    assert np.array_equal(evaluate(Z(0, 0, PI)), [[0]])
    m = evaluate(Z(2, 1, Angle(1, 2)))
    expected = np.zeros((2, 4), dtype=complex)
    expected[0, 0], expected[1, 3] = 1, 1j
    assert np.array_equal(m, expected)
    hh = np.kron(H, H)
    assert close(evaluate(X(2, 2, Angle(1, 3))), hh @ z_matrix_direct(2, 2, Angle(1, 3)) @ hh)


def test_combinator_clauses():
    assert close(evaluate(Compose(Box(), Box())), I2)
    assert close(evaluate(Stack(Wire(), Box())), np.kron(I2, H))
    a, b = Z(1, 2, Angle(1, 4)), X(2, 1, PI)
    assert close(evaluate(Compose(a, b)), evaluate(b) @ evaluate(a))
    assert np.array_equal(evaluate(Cast(2, 2, Swap())), evaluate(Swap()))
    assert np.array_equal(evaluate(Compose(Swap(), Swap())), np.eye(4))


def test_stack_puts_top_wire_first():
    # flipping the top wire of |00> gives |10>, basis index 2
    top_flip = evaluate(Stack(X(1, 1, PI), Wire()))
    assert close(top_flip @ np.eye(4)[:, 0], np.eye(4)[:, 2])


def test_z_direct_examples():
    assert np.array_equal(z_matrix_direct(1, 1, ZERO), I2)
    assert np.array_equal(z_matrix_direct(0, 0, PI), [[0]])
    assert close(z_matrix_direct(2, 1, Angle(1, 2)), outer_z(2, 1, Angle(1, 2)))


def test_z_braket_examples():
    assert np.array_equal(z_matrix_braket(1, 1, ZERO), z_matrix_direct(1, 1, ZERO))
    assert np.array_equal(z_matrix_braket(3, 2, Angle(1, 4)), z_matrix_direct(3, 2, Angle(1, 4)))
    assert np.array_equal(z_matrix_braket(0, 1, ZERO), [[1], [1]])


@pytest.mark.parametrize("n, m", list(itertools.product(range(5), repeat=2)))
def test_z_constructions_agree(n, m):
    for alpha in SAMPLE_ANGLES:
        assert close(z_matrix_direct(n, m, alpha), z_matrix_braket(n, m, alpha), 1e-12)
        assert close(z_matrix_direct(n, m, alpha), outer_z(n, m, alpha), 1e-12)


@pytest.mark.parametrize("n, m", [(0, 0), (1, 2), (3, 1), (2, 2)])
def test_x_matrix_is_hadamard_conjugate(n, m):
    hn, hm = np.ones((1, 1)), np.ones((1, 1))
    for _ in range(n):
        hn = np.kron(hn, H)
    for _ in range(m):
        hm = np.kron(hm, H)
    alpha = Angle(5, 4)
    assert close(x_matrix(n, m, alpha), hm @ z_matrix_direct(n, m, alpha) @ hn)


def test_kron_and_matmul():
    m = np.arange(6, dtype=complex).reshape(2, 3)
    assert np.array_equal(kron(np.ones((1, 1)), m), m)
    assert np.array_equal(matmul(np.eye(2), m), m)
    assert kron(H, H)[0, 3] == pytest.approx(0.5)
    with pytest.raises(ShapeMismatch):
        matmul(m, m)


def test_kron_row_index_convention():
    a = np.arange(4).reshape(2, 2)
    b = np.arange(9).reshape(3, 3)
    k = kron(a, b)
    for ar, br, ac, bc in itertools.product(range(2), range(3), range(2), range(3)):
        assert k[ar * 3 + br, ac * 3 + bc] == a[ar, ac] * b[br, bc]


def test_permutation_matrix_moves_wires():
    assert np.array_equal(permutation_matrix(2, [1, 0]), evaluate(Swap()))
    assert np.array_equal(permutation_matrix(3, [0, 1, 2]), identity(3))


def test_matrix_dump_round_trip():
    m = evaluate(Stack(Z(1, 1, Angle(1, 3)), Box()))
    text = format_matrix(m)
    assert text.splitlines()[0] == "4 4"
    assert np.array_equal(parse_matrix(text), m)


def test_braket_switch_agrees():
    d = Compose(Stack(Z(1, 2, Angle(1, 4)), Wire()), Stack(Wire(), X(2, 1, PI)))
    assert close(evaluate(d), evaluate(d, braket=True))


@given(diagrams(max_wires=6, size=8))
def test_shape_soundness(d):
    n, m = dims(d)
    assert evaluate(d).shape == (2**m, 2**n)


@st.composite
def distributive_quads(draw):
    i, j, k = (draw(st.integers(0, 2)) for _ in range(3))
    p, q, r = (draw(st.integers(0, 2)) for _ in range(3))
    a = draw(diagrams_with_dims(i, j))
    b = draw(diagrams_with_dims(j, k))
    c = draw(diagrams_with_dims(p, q))
    d = draw(diagrams_with_dims(q, r))
    return a, b, c, d


@given(distributive_quads())
def test_functoriality(quad):
    a, b, c, d = quad
    lhs = evaluate(Compose(Stack(a, c), Stack(b, d)))
    rhs = evaluate(Stack(Compose(a, b), Compose(c, d)))
    assert close(lhs, rhs, 1e-9)


@given(diagrams(max_wires=3, size=5))
def test_colorswap_is_hadamard_conjugation(d):
    n, m = dims(d)
    hn, hm = np.ones((1, 1)), np.ones((1, 1))
    for _ in range(n):
        hn = np.kron(hn, H)
    for _ in range(m):
        hm = np.kron(hm, H)
    assert close(evaluate(colorswap(d)), hm @ evaluate(d) @ hn, 1e-9)
