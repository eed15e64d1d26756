"""Case classification and exact feasibility predicates.

Every ratio x = a + b*sqrt(p) is a positive element of Q(sqrt p).  The
signs of the conjugates a - b*sqrt(p) split instances into three cases:

1. mixed signs: every positive target is tileable;
2. all positive: the target e + f*sqrt(p) needs e > 0 and |f|/e bounded
   by max |b_i|/a_i;
3. all negative: it needs f > 0 and |e|/f bounded by max |a_i|/b_i.

Plain tilings accept equality in the bound.  Diverse tilings, which use
every ratio at least once, need strict inequality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

from .errors import BoundaryViolated, PairPreconditionViolated, RadicandMismatch, TooFewRatios
from .qfield import QNum


@dataclass(frozen=True)
class Instance:
    p: int
    ratios: tuple[QNum, ...]

    def __post_init__(self):
        object.__setattr__(self, "ratios", tuple(self.ratios))
        if not self.ratios:
            raise ValueError("an instance needs at least one ratio")
        for i, x in enumerate(self.ratios):
            if x.p != self.p:
                raise RadicandMismatch(f"ratio {i} uses sqrt({x.p}), instance uses sqrt({self.p})")
            if x.sign() <= 0:
                raise ValueError(f"ratio {i} is not positive: {x}")

    @classmethod
    def from_components(cls, p: int, pairs: Sequence[tuple]) -> Instance:
        return cls(p, tuple(QNum(a, b, p) for a, b in pairs))

    @property
    def n(self) -> int:
        return len(self.ratios)

    def __getitem__(self, i: int) -> QNum:
        return self.ratios[i]


class Reason(enum.Enum):
    OK = "ok"
    NONPOSITIVE_TARGET = "target is not positive"
    WRONG_SIDE = "target conjugate has the wrong sign"
    BOUND_EXCEEDED = "target slope exceeds the bound"
    BOUND_EQUALITY = "target slope equals the bound; a diverse tiling needs strict inequality"


Witness = Union[int, tuple[int, int], None]


@dataclass(frozen=True)
class Decision:
    feasible: bool
    case: int
    witness: Witness
    boundary: bool
    reason: Reason
    bound: Optional[Fraction] = None
    slope: Optional[Fraction] = None


def classify(instance: Instance) -> int:
    signs = {x.conj().sign() for x in instance.ratios}
    if len(signs) > 1:
        return 1
    return 2 if signs == {1} else 3


def opposed_pair(instance: Instance) -> tuple[int, int]:
    """Lexicographically first (i, j), i < j, with conjugates of opposite sign."""
    cs = [x.conj().sign() for x in instance.ratios]
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if cs[i] != cs[j]:
                return i, j
    raise ValueError("instance has no conjugate-sign-opposed pair")


def ratio_bound(x: QNum, case: int) -> Fraction:
    """|b|/a in case 2, |a|/b in case 3."""
    if case == 2:
        return abs(x.b) / x.a
    return abs(x.a) / x.b


def max_bound(instance: Instance, case: int) -> tuple[int, Fraction]:
    best, arg = None, None
    for i, x in enumerate(instance.ratios):
        v = ratio_bound(x, case)
        if best is None or v > best:
            best, arg = v, i
    return arg, best


def target_slope(z: QNum, case: int) -> Optional[Fraction]:
    """|f|/e in case 2, |e|/f in case 3; None when the leading part is not positive."""
    e, f = z.a, z.b
    if case == 2:
        return abs(f) / e if e > 0 else None
    return abs(e) / f if f > 0 else None


def feasible_t1(instance: Instance, z: QNum) -> Decision:
    if z.p != instance.p:
        raise RadicandMismatch(f"target uses sqrt({z.p}), instance uses sqrt({instance.p})")
    case = classify(instance)
    if z.sign() <= 0:
        return Decision(False, case, None, False, Reason.NONPOSITIVE_TARGET)
    if case == 1:
        return Decision(True, 1, opposed_pair(instance), False, Reason.OK)
    arg, bound = max_bound(instance, case)
    slope = target_slope(z, case)
    if slope is None:
        return Decision(False, case, arg, False, Reason.WRONG_SIDE, bound, None)
    if slope > bound:
        return Decision(False, case, arg, False, Reason.BOUND_EXCEEDED, bound, slope)
    return Decision(True, case, arg, slope == bound, Reason.OK, bound, slope)


class PairCheck(NamedTuple):
    ok: bool
    pair: Optional[tuple[int, int]] = None
    kind: Optional[str] = None


def pair_preconditions(instance: Instance) -> PairCheck:
    """Check that x_i/x_j and x_i*x_j are irrational for all i != j.

    x_i/x_j is rational iff a_i b_j = a_j b_i; x_i*x_j is rational iff
    a_i b_j + a_j b_i = 0.
    """
    if instance.n < 2:
        raise TooFewRatios(f"need at least two ratios, got {instance.n}")
    xs = instance.ratios
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            ai, bi, aj, bj = xs[i].a, xs[i].b, xs[j].a, xs[j].b
            if ai * bj == aj * bi:
                return PairCheck(False, (i, j), "quotient")
            if ai * bj + aj * bi == 0:
                return PairCheck(False, (i, j), "product")
    return PairCheck(True)


def feasible_t2(instance: Instance, z: QNum) -> Decision:
    check = pair_preconditions(instance)
    if not check.ok:
        raise PairPreconditionViolated(check.pair, check.kind)
    d = feasible_t1(instance, z)
    if d.feasible and d.boundary:
        return Decision(False, d.case, d.witness, True, Reason.BOUND_EQUALITY, d.bound, d.slope)
    return d


def dehn_area(beta, x1: QNum, z: QNum) -> Fraction:
    """Closed-form "area" of a beta-sided tile of aspect x1 at a boundary target.

    Only meaningful when f*a1 == e*b1, where it factors as
    beta^2 * 2 f a1 (a1^2 - p b1^2) / b1^2.
    """
    beta = Fraction(beta)
    a1, b1, e, f, p = x1.a, x1.b, z.a, z.b, x1.p
    if f * a1 != e * b1:
        raise BoundaryViolated(f"f*a1 = {f * a1} differs from e*b1 = {e * b1}")
    return beta * beta * (2 * f * a1 ** 3 / b1 ** 2 - p * f * a1 - p * e * b1)
