import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from quadtile import Instance, QNum, Reason, as_rational, classify, dehn_area, feasible_t1, feasible_t2, pair_preconditions
from quadtile.errors import BoundaryViolated, PairPreconditionViolated, RadicandMismatch, TooFewRatios

import gen

PHI = QNum(F(1, 2), F(1, 2), 5)
THIRD = QNum(F(1, 3), 1, 5)


def inst(p, *pairs):
    return Instance.from_components(p, pairs)


@pytest.mark.parametrize("instance, case", [
    (inst(5, (F(1, 2), F(1, 2))), 3),
    (inst(2, (2, 1), (1, 1)), 1),
    (inst(2, (1, F(1, 2)), (3, 1)), 2),
])
def test_classify(instance, case):
    assert classify(instance) == case


def test_instance_validation():
    with pytest.raises(ValueError):
        inst(5, (F(1, 2), F(-1, 2)))
    with pytest.raises(RadicandMismatch):
        Instance(5, (QNum(1, 1, 2),))
    with pytest.raises(ValueError):
        Instance(5, ())


def test_feasible_t1_worked_examples(fig1):
    _, z, one = fig1
    d = feasible_t1(one, z)
    assert (d.feasible, d.case, d.witness, d.boundary) == (True, 3, 0, False)

    two = Instance(5, (PHI, THIRD))
    d = feasible_t1(two, QNum(1, 1, 5))
    assert d.feasible and d.boundary and d.bound == 1 and d.slope == 1
    d = feasible_t1(two, QNum(2, 1, 5))
    assert not d.feasible and d.reason is Reason.BOUND_EXCEEDED


def test_feasible_t1_case_one_accepts_any_positive_target():
    i = inst(2, (2, 1), (1, 1))
    for z in (QNum(1, 0, 2), QNum(5, 4, 2), QNum(-1, 1, 2), QNum(F(1, 50), 0, 2)):
        d = feasible_t1(i, z)
        assert d.feasible and d.case == 1 and d.witness == (0, 1)
    assert feasible_t1(i, QNum(1, -1, 2)).reason is Reason.NONPOSITIVE_TARGET


def test_wrong_side_target():
    # case 3 needs f > 0; 3 - sqrt 5 is positive with f < 0
    d = feasible_t1(Instance(5, (PHI,)), QNum(3, -1, 5))
    assert not d.feasible and d.reason is Reason.WRONG_SIDE


def test_argmax_ties_take_lowest_index():
    i = Instance(5, (QNum(1, 2, 5), PHI, THIRD))   # bounds 1/2, 1, 1/3
    assert feasible_t1(i, QNum(0, 1, 5)).witness == 1
    i = Instance(5, (THIRD, PHI, QNum(2, 2, 5)))   # bounds 1/3, 1, 1
    assert feasible_t1(i, QNum(0, 1, 5)).witness == 1


def test_pair_preconditions_examples():
    assert pair_preconditions(Instance(5, (PHI, THIRD))).ok
    c = pair_preconditions(inst(5, (F(1, 2), F(1, 2)), (1, 1)))
    assert (c.ok, c.pair, c.kind) == (False, (0, 1), "quotient")
    c = pair_preconditions(inst(2, (1, 1), (-1, 1)))
    assert (c.ok, c.pair, c.kind) == (False, (0, 1), "product")
    with pytest.raises(TooFewRatios):
        pair_preconditions(Instance(5, (PHI,)))


@settings(max_examples=300)
@given(st.integers(0, 10**9))
def test_pair_preconditions_match_expanded_values(seed):
    rng = random.Random(seed)
    p = rng.choice((2, 3, 5))
    prof = gen.Profile(core_num=3, core_dens=(1, 2), wide=0.0)
    xs = [gen.ratio_for_sign(rng, p, rng.choice((1, -1)), prof) for _ in range(rng.randint(2, 3))]
    # force some rational quotients and products
    if rng.random() < 0.3:
        xs.append(xs[0] * rng.randint(2, 3))
    if rng.random() < 0.3:
        xs.append(xs[0].reciprocal() * rng.randint(1, 3))
    i = Instance(p, tuple(xs))
    expected = all(
        as_rational(xs[a] / xs[b]) is None and as_rational(xs[a] * xs[b]) is None
        for a in range(len(xs)) for b in range(a + 1, len(xs))
    )
    assert pair_preconditions(i).ok == expected


def test_feasible_t2_examples():
    two = Instance(5, (PHI, THIRD))
    assert feasible_t2(two, QNum(F(1, 2), 1, 5)).feasible
    d = feasible_t2(two, QNum(1, 1, 5))
    assert not d.feasible and d.boundary and d.reason is Reason.BOUND_EQUALITY
    mixed = inst(2, (2, 1), (1, 1))
    assert feasible_t2(mixed, QNum(7, -4, 2)).feasible
    with pytest.raises(PairPreconditionViolated):
        feasible_t2(inst(5, (F(1, 2), F(1, 2)), (1, 1)), QNum(1, 1, 5))
    with pytest.raises(TooFewRatios):
        feasible_t2(Instance(5, (PHI,)), QNum(1, 1, 5))


def _random_decision_inputs(seed, diverse=False):
    rng = random.Random(seed)
    case = rng.choice((1, 2, 3))
    i = gen.instance(rng, case, diverse=diverse)
    z = gen.qnum(rng, i.p)
    while z.sign() <= 0:
        z = gen.qnum(rng, i.p)
    return i, z


@settings(max_examples=300)
@given(st.integers(0, 10**9))
def test_accepted_targets_have_case_conjugate_sign(seed):
    i, z = _random_decision_inputs(seed)
    d = feasible_t1(i, z)
    if d.feasible and d.case != 1:
        assert z.conj().sign() == (1 if d.case == 2 else -1)


@settings(max_examples=300)
@given(st.integers(0, 10**9))
def test_strict_implies_plain(seed):
    i, z = _random_decision_inputs(seed, diverse=True)
    d2, d1 = feasible_t2(i, z), feasible_t1(i, z)
    if d2.feasible:
        assert d1.feasible
    assert d2.boundary == (d1.feasible and not d2.feasible)


@settings(max_examples=300)
@given(st.integers(0, 10**9), st.integers(0, 7))
def test_reciprocal_invariance(seed, mask):
    i, z = _random_decision_inputs(seed)
    xs = tuple(x.reciprocal() if mask >> k & 1 else x for k, x in enumerate(i.ratios))
    flipped = Instance(i.p, xs)
    assert classify(flipped) == classify(i)
    assert feasible_t1(flipped, z).feasible == feasible_t1(i, z).feasible
    assert feasible_t1(i, z.reciprocal()).feasible == feasible_t1(i, z).feasible


def test_dehn_area_examples():
    x1 = QNum(1, F(1, 2), 2)
    z = QNum(2, 1, 2)
    assert dehn_area(F(1, 3), x1, z) == F(4, 9)
    assert dehn_area(0, x1, z) == 0
    with pytest.raises(BoundaryViolated):
        dehn_area(1, x1, QNum(2, F(1, 3), 2))


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_dehn_area_factored_form(seed):
    rng = random.Random(seed)
    p = rng.choice(gen.BROAD.radicands)
    x1 = gen.ratio_for_sign(rng, p, 1)
    while x1.a <= 0 or x1.b <= 0:
        x1 = gen.ratio_for_sign(rng, p, 1)
    e = gen.rational(rng, signed=False, nonzero=True)
    f = e * x1.b / x1.a
    beta = gen.rational(rng)
    a1, b1 = x1.a, x1.b
    v = dehn_area(beta, x1, QNum(e, f, p))
    assert v == beta ** 2 * 2 * f * a1 * (a1 ** 2 - p * b1 ** 2) / b1 ** 2
    assert v >= 0 and (v == 0) == (beta == 0)
