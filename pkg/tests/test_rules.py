import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zxblocks.angle import PI, ZERO, Angle
from zxblocks.core import (
    Compose,
    DimError,
    PathInvalid,
    Stack,
    Wire,
    X,
    Z,
    dims,
    subterm_at,
)
from zxblocks.fmt import to_sexp
from zxblocks.prop import proportional
from zxblocks.rules import (
    CATALOG,
    STRUCTURAL,
    NoMatch,
    Rule,
    RuleError,
    all_rules,
    apply_at,
    check_rule,
    get_rule,
    sample_params,
)


def test_catalog_size_and_names_are_unique():
    names = [r.name for r in all_rules()]
    assert len(names) == 3 * (len(CATALOG) + len(STRUCTURAL)) == 72
    assert len(set(names)) == len(names)
    assert "colorswap:hopf" in names and "transpose:yanking" in names


def test_fusion_at_root():
    d = Compose(Z(1, 1, Angle(1, 4)), Z(1, 1, Angle(1, 4)))
    params = {"n": 1, "m": 1, "alpha": "pi/4", "beta": "pi/4"}
    out = apply_at(d, get_rule("absolute_fusion"), params)
    assert out == Z(1, 1, Angle(1, 2))
    assert proportional(d, out)


def test_hopf_right_to_left():
    d = Stack(Wire(), Compose(X(1, 0, ZERO), Z(0, 1, ZERO)))
    out = apply_at(d, get_rule("hopf"), {}, (1,), "r2l")
    assert subterm_at(out, (1,)) == Compose(X(1, 2, ZERO), Z(2, 1, ZERO))
    assert dims(out) == dims(d)


def test_apply_errors():
    rule = get_rule("wire_removal")
    with pytest.raises(PathInvalid):
        apply_at(Z(1, 1), rule, {}, (0,))
    with pytest.raises(NoMatch) as err:
        apply_at(Wire(), rule, {}, ())
    assert "expected (Z 1 1 0)" in str(err.value)
    with pytest.raises(RuleError):
        apply_at(Z(1, 1), rule, {}, (), "sideways")
    with pytest.raises(RuleError):
        get_rule("no_such_rule")


def test_parameter_validation():
    rule = get_rule("grow_Z_top_left")
    with pytest.raises(RuleError, match="missing"):
        rule.instantiate({"n": 1, "m": 1})
    with pytest.raises(RuleError, match="out of range"):
        rule.instantiate({"n": 0, "m": 1, "alpha": 0})
    with pytest.raises(RuleError, match="unknown"):
        rule.instantiate({"n": 1, "m": 1, "alpha": 0, "beta": 0})
    with pytest.raises(RuleError, match="one of"):
        get_rule("state_copy").instantiate({"k": 2, "m": 1})


def test_corrupted_rule_is_caught():
    broken = Rule(
        "fusion_without_angle_sum",
        get_rule("absolute_fusion").params,
        lambda p: Compose(Z(p["n"], 1, p["alpha"]), Z(1, p["m"], p["beta"])),
        lambda p: Z(p["n"], p["m"], p["alpha"]),
    )
    report = check_rule(broken, samples=30, max_dim=3)
    assert not report.ok
    assert report.failures[0].params


def test_dim_changing_rule_is_reported():
    broken = Rule("grows", (), lambda p: Wire(), lambda p: Stack(Wire(), Wire()))
    report = check_rule(broken, samples=3)
    assert len(report.failures) == 3
    with pytest.raises(DimError):
        apply_at(Wire(), broken, {})


@pytest.mark.parametrize(
    "name, samples, max_dim",
    [("absolute_fusion", 50, 4), ("hopf", 20, 3), ("spider_fusion", 30, 3), ("bi_pi", 30, 4)],
)
def test_named_rules_pass(name, samples, max_dim):
    assert check_rule(get_rule(name), samples, max_dim).ok


def test_harness_is_seeded():
    a = check_rule(get_rule("bi_pi"), 10, 3, seed=5)
    b = check_rule(get_rule("bi_pi"), 10, 3, seed=5)
    assert a.skipped == b.skipped and a.failures == b.failures


def test_zero_scalar_corner_is_skipped():
    rule = get_rule("absolute_fusion")
    assert not rule.admissible({"n": 0, "m": 0, "alpha": Angle(1, 2), "beta": Angle(1, 2)})
    assert rule.admissible({"n": 0, "m": 1, "alpha": PI, "beta": ZERO})


@given(st.sampled_from(all_rules()), st.integers(0, 2**32 - 1))
def test_sides_have_equal_dims_and_apply_both_ways(rule, seed):
    rng = random.Random(seed)
    params = sample_params(rule, rng, 3)
    if rule.admissible and not rule.admissible(params):
        return
    lhs, rhs = rule.instantiate(params)
    assert dims(lhs) == dims(rhs)
    context = Stack(Wire(), lhs)
    out = apply_at(context, rule, params, (1,))
    assert out == Stack(Wire(), rhs)
    assert apply_at(out, rule, params, (1,), "r2l") == context


def test_rewrite_result_is_printable():
    out = apply_at(Compose(Z(1, 1), Z(1, 1)), get_rule("absolute_fusion"), {"n": 1, "m": 1, "alpha": 0, "beta": 0})
    assert to_sexp(out) == "(Z 1 1 0)"
