import itertools

import numpy as np
import pytest

from zxblocks.angle import ZERO, Angle
from zxblocks.core import Compose, Cup, Z, dims
from zxblocks.proofs import Proof, bell_prep, z_absolute_fusion
from zxblocks.prop import proportional
from zxblocks.semantics import evaluate


@pytest.mark.parametrize(
    "n, m, o", [t for t in itertools.product(range(4), range(1, 4), range(4))]
)
def test_fusion_chain_reaches_the_fused_spider(n, m, o):
    alpha, beta = Angle(1, 4), Angle(3, 2)
    proof = z_absolute_fusion(n, m, o, alpha, beta)
    assert proof.start == Compose(Z(n, m, alpha), Z(m, o, beta))
    assert proof.current == Z(n, o, alpha + beta)
    for step in proof.steps:
        assert dims(step.result) == (n, o)
    assert all(proof.check())


def test_fusion_chain_uses_the_planned_steps():
    proof = z_absolute_fusion(1, 2, 1)
    rules = [s.rule for s in proof.steps]
    assert rules[:2] == ["transpose:grow_Z_top_left", "grow_Z_top_left"]
    assert "spider_fusion" in rules
    assert rules[-1] == "absolute_fusion"
    assert len(z_absolute_fusion(1, 1, 1).steps) == 1


def test_fusion_chain_needs_a_shared_wire():
    with pytest.raises(ValueError):
        z_absolute_fusion(1, 0, 1)


def test_proof_log_is_replayable():
    proof = z_absolute_fusion(2, 3, 1, Angle(1, 2), ZERO)
    replay = Proof(proof.start)
    for s in proof.steps:
        replay.apply(s.rule, s.params, s.path, s.direction)
    assert replay.current == proof.current


def test_bell_prep_is_a_cup():
    d = bell_prep()
    assert dims(d) == (0, 2)
    r = proportional(d, Cup())
    assert r
    state = evaluate(d)[:, 0]
    assert np.allclose(state / state[0], [1, 0, 0, 1])
