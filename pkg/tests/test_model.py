from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from quadtile import Instance, QNum, Rect, Tiling, scale, single_ratio_tiling, substitute, translate, transpose, verify_tiling
from quadtile.errors import AspectMismatch, NonPositiveScale
from quadtile.model import concat, substitute_all, unit_tiling


def q(a, b=0, p=5):
    return QNum(a, b, p)


@pytest.fixture
def fig1_tiling(fig1):
    x1, z, _ = fig1
    return single_ratio_tiling(x1, z, 3)


def test_rect_rejects_flat_sides():
    with pytest.raises(ValueError):
        Rect(q(0), q(0), q(0), q(1))
    with pytest.raises(ValueError):
        Rect(q(0), q(0), q(1), q(F(1, 2), F(-1, 2)))


def test_rect_ratio_either_orientation(phi):
    r = Rect(q(0), q(0), q(2), phi * 2)
    assert r.aspect == phi and r.has_ratio(phi)
    assert transpose(Tiling(r, (r,), 5)).tiles[0].has_ratio(phi)
    assert not r.has_ratio(phi + 1)


def test_translate(fig1_tiling):
    t = fig1_tiling
    assert translate(t, q(0), q(0)) == t
    assert translate(translate(t, q(1), q(0)), q(-1), q(0)) == t
    moved = translate(t, q(F(1, 2)), q(0))
    assert moved.bounds.x0 == t.bounds.x0 + F(1, 2)
    assert len(moved) == len(t)


def test_scale(fig1_tiling):
    t = fig1_tiling
    assert scale(t, q(1), q(1)) == t
    big = scale(t, q(2), q(2))
    assert [r.aspect for r in big.tiles] == [r.aspect for r in t.tiles]
    u = scale(unit_tiling(q(1)), q(2), q(3))
    assert (u.bounds.w, u.bounds.h) == (q(2), q(3))
    with pytest.raises(NonPositiveScale):
        scale(t, q(-1), q(1))
    with pytest.raises(NonPositiveScale):
        scale(t, q(1), q(F(1, 2), F(-1, 2)))


def test_transpose(fig1, fig1_tiling):
    x1, z, inst = fig1
    t = fig1_tiling
    assert transpose(transpose(t)) == t
    tt = transpose(t)
    assert (tt.bounds.w, tt.bounds.h) == (z, q(1))
    assert verify_tiling(tt, inst).valid


def test_substitute_trivial(fig1_tiling):
    t = fig1_tiling
    r = t.tiles[0]
    same = unit_tiling(r.aspect)
    assert substitute(t, 0, same) == t
    # the same shape given in transposed orientation fits as well
    assert substitute(t, 0, transpose(same)) == t


def test_substitute_half_split(fig1, fig1_tiling, phi):
    t = fig1_tiling
    r = t.tiles[0]
    one, half = q(1), q(F(1, 2))
    lo = Rect(q(0), q(0), one, r.aspect * half)
    hi = Rect(q(0), r.aspect * half, one, r.aspect * half)
    split = Tiling(Rect(q(0), q(0), one, r.aspect), (lo, hi), 5)
    out = substitute(t, 0, split)
    assert len(out) == 27
    assert out.total_area() == t.total_area() == t.bounds.area
    rep = verify_tiling(out, Instance(5, (phi, phi / 2)))
    assert rep.valid and rep.counts == (25, 2)


def test_substitute_aspect_mismatch(fig1_tiling):
    with pytest.raises(AspectMismatch):
        substitute(fig1_tiling, 0, unit_tiling(q(3)))


def test_substitute_all_and_concat(phi):
    host = Tiling(Rect(q(0), q(0), q(2), q(1)), (Rect(q(0), q(0), q(1), q(1)), Rect(q(1), q(0), q(1), q(1))), 5)
    sub = Tiling(Rect(q(0), q(0), q(1), q(1)), (Rect(q(0), q(0), q(1), q(F(1, 2))), Rect(q(0), q(F(1, 2)), q(1), q(F(1, 2)))), 5)
    out = substitute_all(host, sub)
    assert len(out) == 4 and out.total_area() == out.bounds.area
    assert verify_tiling(out, Instance(5, (q(F(1, 2)),))).valid
    whole = concat(host.bounds, [Tiling(host.tiles[0], host.tiles[:1], 5), Tiling(host.tiles[1], host.tiles[1:], 5)], 5)
    assert whole == host


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 25), st.integers(1, 6), st.integers(1, 6), st.sampled_from(["translate", "scale", "transpose", "substitute"]))
def test_affine_maps_preserve_validity(fig1, idx, k, m, op):
    x1, z, inst = fig1
    t = single_ratio_tiling(x1, z, 3)
    if op == "translate":
        out = translate(t, q(F(k, m), 1), q(-k, F(1, m)))
    elif op == "scale":
        out = scale(t, q(F(k, m), F(1, m)), q(F(k, m), F(1, m)))
    elif op == "transpose":
        out = transpose(t)
    else:
        # an m x m grid of x1 tiles has aspect x1 itself
        cells = tuple(Rect(q(c), x1 * r, q(1), x1) for r in range(m) for c in range(m))
        out = substitute(t, idx, Tiling(Rect(q(0), q(0), q(m), x1 * m), cells, 5))
    assert verify_tiling(out, inst).valid
    assert out.total_area() == out.bounds.area
