import random
from pathlib import Path

import pytest

from zxblocks.acdc.dimexpr import Poly
from zxblocks.acdc.equiv import refute, struct_equiv
from zxblocks.acdc.gen import perturb, random_sym
from zxblocks.acdc.laws import LAWS, check_law, get_law, instantiate_law
from zxblocks.acdc.terms import (
    cast,
    compose,
    leaf,
    lift,
    meta,
    nwire,
    parse_sym,
    spider,
    stack,
)
from zxblocks.angle import Angle
from zxblocks.core import Box, Compose, Swap, Wire, X, Z, n_wire
from zxblocks.exact import exact_eval

ACDC = Path(__file__).resolve().parent.parent / "corpus" / "acdc"


def load(name):
    return parse_sym((ACDC / f"{name}.zx").read_text())


EQUAL_PAIRS = [
    ("assoc_ex", load("assoc_ex_lhs"), load("assoc_ex_rhs")),
    ("stack_assoc", load("stack_assoc_lhs"), load("stack_assoc_rhs")),
    ("identity", load("identity_lhs"), load("identity_rhs")),
    (
        "compose_chain",
        compose(compose(meta("a", 1, 2), meta("b", 2, "n")), meta("c", "n", 0)),
        compose(meta("a", 1, 2), compose(meta("b", 2, "n"), meta("c", "n", 0))),
    ),
    ("nwire_merge", stack(nwire("n"), stack(leaf("wire"), leaf("empty"))), nwire(Poly.var("n") + Poly.const(1))),
]

# semantically proportional, structurally different
NOT_PROVED_PAIRS = [
    ("swap_vs_nwire2", load("swap"), load("nwire2")),
    ("swap_swap", lift(Compose(Swap(), Swap())), lift(n_wire(2))),
    ("blank_z", lift(Z(1, 1)), lift(Wire())),
    ("blank_x", lift(X(1, 1)), lift(Wire())),
    ("box_box", lift(Compose(Box(), Box())), lift(Wire())),
    ("fusion", lift(Compose(Z(1, 1, Angle(1, 4)), Z(1, 1, Angle(1, 2)))), lift(Z(1, 1, Angle(3, 4)))),
    ("yanking", load("yank_lhs"), load("yank_rhs")),
]


def test_reflexivity_needs_no_iterations():
    t = load("assoc_ex_lhs")
    r = struct_equiv(t, t)
    assert r.equal and r.stats.iterations == 0
    assert str(r).startswith("Equal (equal; iterations=0")


@pytest.mark.parametrize("name, t1, t2", EQUAL_PAIRS, ids=[p[0] for p in EQUAL_PAIRS])
def test_equal_pairs(name, t1, t2):
    r = struct_equiv(t1, t2)
    assert r.equal, str(r)
    assert r.log
    assert struct_equiv(t2, t1).equal


@pytest.mark.parametrize("name, t1, t2", NOT_PROVED_PAIRS, ids=[p[0] for p in NOT_PROVED_PAIRS])
def test_not_proved_pairs(name, t1, t2):
    r = struct_equiv(t1, t2)
    assert not r.equal
    assert r.verdict == "NotProved"
    assert r.stats.stop == "saturated"


def test_dim_mismatch_is_not_proved():
    r = struct_equiv(nwire("n"), nwire("k"))
    assert not r.equal and r.stats.stop == "dim-mismatch"


def test_budgets_stop_early():
    t1, t2 = load("stack_assoc_lhs"), load("stack_assoc_rhs")
    assert struct_equiv(t1, t2, max_iters=0).stats.stop == "iter-limit"
    t = compose(compose(compose(meta("a", 1, 1), meta("b", 1, 1)), meta("c", 1, 1)), meta("d", 1, 1))
    r = struct_equiv(t, leaf("wire"), max_nodes=5)
    assert r.stats.stop == "node-limit"


@pytest.mark.parametrize("name, t1, t2", EQUAL_PAIRS, ids=[p[0] for p in EQUAL_PAIRS])
def test_budget_monotonicity(name, t1, t2):
    first = next(k for k in range(31) if struct_equiv(t1, t2, max_iters=k).equal)
    assert all(struct_equiv(t1, t2, max_iters=k).equal for k in range(first, first + 5))
    assert struct_equiv(t1, t2, max_nodes=10**6).equal


@pytest.mark.parametrize("seed", range(3))
def test_verdict_ignores_law_order(seed):
    laws = list(LAWS)
    random.Random(seed).shuffle(laws)
    for _, t1, t2 in EQUAL_PAIRS:
        assert struct_equiv(t1, t2, laws=tuple(laws)).equal
    for _, t1, t2 in NOT_PROVED_PAIRS:
        assert not struct_equiv(t1, t2, laws=tuple(laws)).equal


@pytest.mark.parametrize("seed", range(10))
def test_random_perturbations_are_equal(seed):
    rng = random.Random(seed)
    n = Poly.var("n")
    t = random_sym(rng, n, n + Poly.const(1), size=5)
    p = perturb(rng, t, p=0.4)
    assert struct_equiv(t, p).equal


@pytest.mark.parametrize("law", LAWS, ids=[law.name for law in LAWS])
def test_law_bridge_is_exact(law):
    report = check_law(law, samples=10)
    assert report.ok, report.failures


def test_bridge_instances_are_concrete():
    lhs, rhs = instantiate_law(get_law("stack_compose_distr"), random.Random(0))
    assert exact_eval(lhs) == exact_eval(rhs)


def test_refute_finds_counterexamples():
    cex = refute(load("swap"), load("nwire2"))
    assert cex is not None and "differ" in cex.detail
    assert refute(load("assoc_ex_lhs"), load("assoc_ex_rhs")) is None
    assert refute(nwire("n"), nwire("k")).detail == "dimensions differ symbolically"


def test_refute_with_inexact_phases_uses_tolerance():
    t1 = spider("Z", 1, 1, Angle(1, 3))
    assert refute(t1, t1) is None
    assert refute(t1, spider("Z", 1, 1, Angle(2, 3))) is not None


def test_cast_laws():
    inner = stack(meta("a", 1, 2), meta("b", 1, 1))
    assert struct_equiv(cast(2, 3, cast(2, 3, inner)), inner).equal
