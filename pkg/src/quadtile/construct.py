"""Explicit tilings of a 1 x z rectangle.

The basic building block tiles 1 x z with copies of a single ratio x1 by
cutting it into two horizontal blocks: a grid of x1-shaped tiles at the
bottom and a grid of 1/x1-shaped tiles on top.  Everything else reduces to
it.  For mixed conjugate signs, two ratios are stacked into a composite
ratio with the right conjugate sign.  Diverse tilings either split the
target into one strip per ratio or pump the dominant ratio k times inside
a composite block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .decide import (
    Instance,
    classify,
    feasible_t1,
    feasible_t2,
    ratio_bound,
    target_slope,
)
from .errors import (
    CaseMismatch,
    DegenerateRatio,
    Infeasible,
    NotStrict,
    PairPreconditionViolated,
    SearchExhausted,
    TooFewRatios,
)
from .model import CompositeSpec, Rect, Tiling, concat, scale, substitute_all, translate, transpose
from .qfield import QNum, to_coprime_fraction

K_SCAN_CAP = 10**6
FRACTION_DEPTH_CAP = 10_000


@dataclass(frozen=True)
class GridCounts:
    x: int
    y: int
    u: int
    w: int

    @property
    def tiles(self) -> int:
        return self.x * self.y + self.u * self.w


@dataclass(frozen=True)
class NormalizedProblem:
    x1: QNum
    z: QNum
    case: int
    ratio_reciprocal: bool = False
    target_reciprocal: bool = False

    @property
    def transforms(self) -> frozenset[str]:
        out = set()
        if self.ratio_reciprocal:
            out.add("ratio_reciprocal")
        if self.target_reciprocal:
            out.add("target_reciprocal")
        return frozenset(out)


def normalize_inputs(x1: QNum, z: QNum, case: int) -> NormalizedProblem:
    """Make all four components of x1 and z nonnegative.

    A ratio and its reciprocal describe the same tile, and a 1 x (1/z)
    tiling transposes and rescales into a 1 x z one, so either may be
    inverted.  In case 3 (conjugates negative) inversion flips the sign of
    the rational part and keeps the sqrt(p) part positive; in case 2 it is
    the other way around.
    """
    if case not in (2, 3):
        raise CaseMismatch(f"normalization is defined for cases 2 and 3, not {case}")
    if x1.sign() <= 0 or z.sign() <= 0:
        raise ValueError("ratio and target must be positive")
    want = 1 if case == 2 else -1
    if x1.conj().sign() != want:
        raise CaseMismatch(f"conjugate of {x1} does not match case {case}")
    if z.conj().sign() != want:
        raise CaseMismatch(f"conjugate of target {z} does not match case {case}")
    flip_ratio = (x1.a < 0) if case == 3 else (x1.b < 0)
    flip_target = (z.a < 0) if case == 3 else (z.b < 0)
    return NormalizedProblem(
        x1.reciprocal() if flip_ratio else x1,
        z.reciprocal() if flip_target else z,
        case,
        flip_ratio,
        flip_target,
    )


def _second_block_factor(norm: NormalizedProblem) -> Fraction:
    """Rational height factor of the upper block, in units of 1/x1."""
    a1, b1, e, f, p = norm.x1.a, norm.x1.b, norm.z.a, norm.z.b, norm.x1.p
    if norm.case == 3:
        return (p * b1 * b1 - a1 * a1) * (f * a1 - e * b1) / (2 * a1 * b1)
    return (a1 * a1 - p * b1 * b1) * (e * b1 - f * a1) / (2 * a1 * b1)


def block_heights(norm: NormalizedProblem) -> tuple[QNum, QNum]:
    """Heights of the lower (x1-grid) and upper (1/x1-grid) blocks."""
    a1, b1, e, f = norm.x1.a, norm.x1.b, norm.z.a, norm.z.b
    if a1 == 0 or b1 == 0:
        raise DegenerateRatio(f"ratio {norm.x1} has a zero component")
    lower = norm.x1 * ((f * a1 + e * b1) / (2 * a1 * b1))
    upper = _second_block_factor(norm) / norm.x1
    return lower, upper


def grid_counts(norm: NormalizedProblem) -> GridCounts:
    a1, b1, e, f = norm.x1.a, norm.x1.b, norm.z.a, norm.z.b
    if a1 == 0 or b1 == 0:
        raise DegenerateRatio(f"ratio {norm.x1} has a zero component")
    y, x = to_coprime_fraction((f * a1 + e * b1) / (2 * a1 * b1))
    second = _second_block_factor(norm)
    if second < 0:
        raise Infeasible(f"target {norm.z} lies outside the range of ratio {norm.x1}")
    u, w = to_coprime_fraction(second) if second else (0, 1)
    return GridCounts(x, y, u, w)


def _grid(p: int, x0: QNum, y0: QNum, cols: int, rows: int, tw: QNum, th: QNum) -> list[Rect]:
    out = []
    for r in range(rows):
        y = y0 + th * r
        for c in range(cols):
            out.append(Rect(x0 + tw * c, y, tw, th))
    return out


def _single_ratio_feasible(x1: QNum, z: QNum, case: int) -> bool:
    slope = target_slope(z, case)
    return slope is not None and slope <= ratio_bound(x1, case)


def single_ratio_tiling(x1: QNum, z: QNum, case: int) -> Tiling:
    """Tile 1 x z with rectangles of aspect x1 (in either orientation)."""
    p = x1.p
    if case not in (2, 3) or x1.conj().sign() != (1 if case == 2 else -1):
        raise CaseMismatch(f"ratio {x1} does not belong to case {case}")
    if z.sign() <= 0 or not _single_ratio_feasible(x1, z, case):
        raise Infeasible(f"1 x {z} cannot be tiled by ratio {x1}")
    zero, one = QNum(0, 0, p), QNum(1, 0, p)

    if (case == 3 and x1.a == 0) or (case == 2 and x1.b == 0):
        # bound is 0, so z/x1 is rational: a plain grid
        y, x = to_coprime_fraction((z / x1).as_rational())
        tiles = _grid(p, zero, zero, x, y, one / x, x1 / x)
        return Tiling(Rect(zero, zero, one, z), tuple(tiles), p)

    norm = normalize_inputs(x1, z, case)
    g = grid_counts(norm)
    X = norm.x1
    tiles = _grid(p, zero, zero, g.x, g.y, one / g.x, X / g.x)
    if g.u:
        base = X * Fraction(g.y, g.x)
        tiles += _grid(p, zero, base, g.w, g.u, one / g.w, (X * g.w).reciprocal())
    t = Tiling(Rect(zero, zero, one, norm.z), tuple(tiles), p)
    if norm.target_reciprocal:
        t = scale(transpose(t), z, z)
    return t


def composite_block(spec: CompositeSpec, instance: Instance) -> Tiling:
    """Stack strips of the listed ratios into a 1 x s block."""
    p = instance.p
    zero, one = QNum(0, 0, p), QNum(1, 0, p)
    D = spec.D
    tw = one / D
    y = zero
    tiles = []
    for i, count in spec.parts:
        th = instance.ratios[i] / D
        for _ in range(count):
            tiles += _grid(p, zero, y, D, 1, tw, th)
            y = y + th
    return Tiling(Rect(zero, zero, one, y), tuple(tiles), p)


# -- composite ratio for mixed conjugate signs ------------------------------

@dataclass(frozen=True)
class _Interval:
    """Set of q > 0 between lo and hi; hi None means unbounded."""

    lo: QNum
    lo_closed: bool
    hi: Optional[QNum]
    hi_closed: bool

    def empty(self) -> bool:
        if self.hi is None:
            return False
        c = (self.lo - self.hi).sign()
        return c > 0 or (c == 0 and not (self.lo_closed and self.hi_closed))

    def meet(self, other: Optional[_Interval]) -> Optional[_Interval]:
        if other is None:
            return None
        c = (self.lo - other.lo).sign()
        if c > 0:
            lo, lc = self.lo, self.lo_closed
        elif c < 0:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi is None:
            hi, hc = other.hi, other.hi_closed
        elif other.hi is None:
            hi, hc = self.hi, self.hi_closed
        else:
            c = (self.hi - other.hi).sign()
            if c < 0:
                hi, hc = self.hi, self.hi_closed
            elif c > 0:
                hi, hc = other.hi, other.hi_closed
            else:
                hi, hc = self.hi, self.hi_closed and other.hi_closed
        out = _Interval(lo, lc, hi, hc)
        return None if out.empty() else out


def _positive(p: int) -> _Interval:
    return _Interval(QNum(0, 0, p), False, None, False)


def _halfline(alpha: QNum, beta: QNum, strict: bool) -> Optional[_Interval]:
    """{q > 0 : alpha*q + beta > 0} (or >= 0 when not strict)."""
    p = alpha.p
    sa = alpha.sign()
    if sa == 0:
        sb = beta.sign()
        return _positive(p) if (sb > 0 or (sb == 0 and not strict)) else None
    root = -beta / alpha
    if sa > 0:
        if root.sign() < 0:
            return _positive(p)
        return _Interval(root, not strict and root.sign() > 0, None, False)
    if root.sign() <= 0:
        return None
    return _Interval(QNum(0, 0, p), False, root, not strict)


def simplest_fraction(iv: _Interval, max_depth: int = FRACTION_DEPTH_CAP) -> tuple[int, int]:
    """The fraction M/N in the interval with the smallest M and N.

    Walks the Stern-Brocot tree by continued-fraction terms; every other
    fraction in the interval has a larger numerator and denominator.
    """
    terms = []
    lo, lc, hi, hc = iv.lo, iv.lo_closed, iv.hi, iv.hi_closed
    for _ in range(max_depth):
        fl = lo.floor()
        c = fl if (lc and lo == fl) else fl + 1
        if hi is None or (hi - c).sign() > 0 or (hi == c and hc):
            terms.append(c)
            break
        terms.append(fl)
        frac_lo = lo - fl
        lo, lc, hi, hc = (hi - fl).reciprocal(), hc, (frac_lo.reciprocal() if frac_lo else None), lc
    else:
        raise SearchExhausted("continued-fraction depth cap reached")
    num, den = terms[-1], 1
    for t in reversed(terms[:-1]):
        num, den = t * num + den, num
    return num, den


def _composite_ok(s: QNum, z: QNum) -> bool:
    cz = z.conj().sign()
    if s.conj().sign() != cz:
        return False
    return _single_ratio_feasible(s, z, 3 if cz < 0 else 2)


def choose_composite(xi: QNum, xj: QNum, z: QNum, i: int = 0, j: int = 1) -> CompositeSpec:
    """Smallest (M, N), by M+N then M, with s = M*xi + N*xj usable for z.

    Usable means conj(s) has the sign of conj(z) and s alone can tile the
    1 x z rectangle.  Requires conj(xi) < 0 < conj(xj).
    """
    if not (xi.conj().sign() < 0 < xj.conj().sign()):
        raise CaseMismatch("choose_composite needs conj(xi) < 0 < conj(xj)")
    if z.sign() <= 0:
        raise ValueError(f"target must be positive: {z}")
    p = z.p
    ci, cj = xi.conj(), xj.conj()
    ai, bi, aj, bj = xi.a, xi.b, xj.a, xj.b
    e, f = z.a, z.b

    def q(v) -> QNum:
        return QNum.rational(v, p)

    # q = M/N.  The conjugate-sign condition is one half-line; the slope
    # condition |lead_s| >= lam * base_s splits on the sign of lead_s.
    if z.conj().sign() < 0:
        lam = abs(e) / f
        side = _positive(p).meet(_halfline(-ci, -cj, True))
        lead_i, lead_j, base_i, base_j = ai, aj, bi, bj
    else:
        lam = abs(f) / e
        side = _positive(p).meet(_halfline(ci, cj, True))
        lead_i, lead_j, base_i, base_j = bi, bj, ai, aj
    pieces = []
    if side is not None:
        for sgn in (1, -1):
            half = _halfline(q(sgn * lead_i - lam * base_i), q(sgn * lead_j - lam * base_j), False)
            pieces.append(side.meet(half))

    best = None
    for iv in pieces:
        if iv is None:
            continue
        M, N = simplest_fraction(iv)
        if best is None or (M + N, M) < (best[0] + best[1], best[0]):
            best = (M, N)
    if best is None or not _composite_ok(xi * best[0] + xj * best[1], z):
        raise SearchExhausted(f"no composite of {xi} and {xj} fits target {z}")
    return CompositeSpec(((i, best[0]), (j, best[1])))


def case1_tiling(i: int, j: int, instance: Instance, z: QNum) -> Tiling:
    """Tile 1 x z with ratios x_i and x_j whose conjugates have opposite signs."""
    xi, xj = instance.ratios[i], instance.ratios[j]
    if xi.conj().sign() > 0:
        i, j, xi, xj = j, i, xj, xi
    if not (xi.conj().sign() < 0 < xj.conj().sign()):
        raise CaseMismatch(f"ratios {i} and {j} have conjugates of the same sign")
    spec = choose_composite(xi, xj, z, i, j)
    block = composite_block(spec, instance)
    s = block.bounds.h
    host = single_ratio_tiling(s, z, 3 if z.conj().sign() < 0 else 2)
    return substitute_all(host, block)


def theorem1_tiling(instance: Instance, z: QNum) -> Tiling:
    """Tile 1 x z with rectangles whose aspects come from the instance."""
    d = feasible_t1(instance, z)
    if not d.feasible:
        raise Infeasible(f"no tiling of 1 x {z}: {d.reason.value}", d)
    if d.case == 1:
        return case1_tiling(*d.witness, instance, z)
    return single_ratio_tiling(instance.ratios[d.witness], z, d.case)


# -- diverse tilings --------------------------------------------------------

def _first_k(alpha: Fraction, beta: Fraction) -> Optional[int]:
    """Smallest integer k >= 1 with alpha*k + beta > 0."""
    if alpha > 0:
        root = -beta / alpha
        return max(1, math.floor(root) + 1)
    return 1 if alpha + beta > 0 else None


def _k_ok(k: int, x1: QNum, rest: QNum, lam: Fraction, case: int) -> bool:
    r = x1 * k + rest
    want = 1 if case == 2 else -1
    return r.conj().sign() == want and ratio_bound(r, case) > lam


def choose_k(instance: Instance, z: QNum, pivot: int, cap: int = K_SCAN_CAP) -> int:
    """Smallest k >= 1 such that k*x_pivot + (sum of the others) strictly fits z."""
    case = classify(instance)
    if case == 1:
        raise CaseMismatch("choose_k applies to cases 2 and 3")
    lam = target_slope(z, case)
    if lam is None:
        raise Infeasible(f"target {z} lies on the wrong side for case {case}")
    x1 = instance.ratios[pivot]
    bound = ratio_bound(x1, case)
    if bound == lam:
        raise NotStrict(f"target {z} sits on the bound of ratio {pivot}")
    if bound < lam:
        raise Infeasible(f"ratio {pivot} bound {bound} is below target slope {lam}")
    rest = QNum(0, 0, instance.p)
    for i, x in enumerate(instance.ratios):
        if i != pivot:
            rest = rest + x
    # slope condition |k*lead + L| > lam*(k*base + B), linear in k on each side
    if case == 2:
        lead, L, base, B = x1.b, rest.b, x1.a, rest.a
    else:
        lead, L, base, B = x1.a, rest.a, x1.b, rest.b
    starts = [
        _first_k(lead - lam * base, L - lam * B),
        _first_k(-lead - lam * base, -L - lam * B),
    ]
    starts = [k for k in starts if k is not None]
    if not starts:
        raise SearchExhausted("slope condition never holds")
    k = min(starts)
    while k <= cap:
        if _k_ok(k, x1, rest, lam, case):
            return k
        k += 1
    raise SearchExhausted(f"no admissible k up to {cap}")


def _diverse_decision(instance: Instance, z: QNum):
    try:
        d = feasible_t2(instance, z)
    except (TooFewRatios, PairPreconditionViolated) as exc:
        raise Infeasible(f"no diverse tiling: {exc}") from exc
    if not d.feasible:
        raise Infeasible(f"no diverse tiling of 1 x {z}: {d.reason.value}", d)
    return d


def _strip_tiling(instance: Instance, z: QNum, pair: tuple[int, int]) -> Tiling:
    """One vertical strip per ratio; each gets one flat x_k tile at the bottom."""
    p, n = instance.p, instance.n
    zero, one = QNum(0, 0, p), QNum(1, 0, p)
    width = one / n
    parts = []
    for k, xk in enumerate(instance.ratios):
        short = xk if xk < one else xk.reciprocal()
        h = short / n
        x0 = width * k
        parts.append(Tiling(Rect(x0, zero, width, h), (Rect(x0, zero, width, h),), p))
        rest = z - h
        if rest.sign() > 0:
            filler = case1_tiling(pair[0], pair[1], instance, rest * n)
            parts.append(translate(scale(filler, width, width), x0, h))
    return concat(Rect(zero, zero, one, z), parts, p)


def diverse_tiling(instance: Instance, z: QNum) -> Tiling:
    """Tile 1 x z using every ratio of the instance at least once."""
    d = _diverse_decision(instance, z)
    if d.case == 1:
        if z < 1:
            t = _strip_tiling(instance, z.reciprocal(), d.witness)
            return scale(transpose(t), z, z)
        return _strip_tiling(instance, z, d.witness)
    pivot = d.witness
    k = choose_k(instance, z, pivot)
    spec = CompositeSpec(((pivot, k),) + tuple((i, 1) for i in range(instance.n) if i != pivot))
    block = composite_block(spec, instance)
    host = single_ratio_tiling(block.bounds.h, z, d.case)
    return substitute_all(host, block)
