"""Placed rectangles, tilings, and the exact affine maps used to compose them.

Coordinates live in Q(sqrt p).  The origin is the lower-left corner and
y grows upward; renderers flip the axis themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AspectMismatch, NonPositiveScale, RadicandMismatch
from .qfield import QNum


@dataclass(frozen=True, slots=True)
class Rect:
    x0: QNum
    y0: QNum
    w: QNum
    h: QNum

    def __post_init__(self):
        if self.w.sign() <= 0 or self.h.sign() <= 0:
            raise ValueError(f"rectangle sides must be positive: {self.w}, {self.h}")

    @property
    def x1(self) -> QNum:
        return self.x0 + self.w

    @property
    def y1(self) -> QNum:
        return self.y0 + self.h

    @property
    def aspect(self) -> QNum:
        """h / w."""
        return self.h / self.w

    @property
    def area(self) -> QNum:
        return self.w * self.h

    def has_ratio(self, x: QNum) -> bool:
        """True if the rectangle has aspect x in either orientation."""
        return self.h == x * self.w or self.w == x * self.h


@dataclass(frozen=True, slots=True)
class Tiling:
    bounds: Rect
    tiles: tuple[Rect, ...]
    p: int

    def __len__(self) -> int:
        return len(self.tiles)

    def total_area(self) -> QNum:
        acc = QNum(0, 0, self.p)
        for r in self.tiles:
            acc = acc + r.area
        return acc


@dataclass(frozen=True, slots=True)
class CompositeSpec:
    """A 1 x s block of stacked strips: ``count`` strips of each ``ratio_index``.

    Every strip is cut into ``D`` equal tiles, so the block has aspect
    s = sum(count_i * x_i) / D.
    """

    parts: tuple[tuple[int, int], ...]
    D: int = 1

    def __post_init__(self):
        if not self.parts:
            raise ValueError("composite needs at least one part")
        if any(c < 1 for _, c in self.parts) or self.D < 1:
            raise ValueError("part counts and D must be positive")

    def ratio(self, ratios) -> QNum:
        s = sum((ratios[i] * c for i, c in self.parts[1:]), ratios[self.parts[0][0]] * self.parts[0][1])
        return s / self.D


def zero(p: int) -> QNum:
    return QNum(0, 0, p)


def one(p: int) -> QNum:
    return QNum(1, 0, p)


def unit_tiling(z: QNum) -> Tiling:
    """The 1 x z rectangle as a single tile."""
    r = Rect(zero(z.p), zero(z.p), one(z.p), z)
    return Tiling(r, (r,), z.p)


def translate(t: Tiling, dx: QNum, dy: QNum) -> Tiling:
    def mv(r: Rect) -> Rect:
        return Rect(r.x0 + dx, r.y0 + dy, r.w, r.h)

    return Tiling(mv(t.bounds), tuple(mv(r) for r in t.tiles), t.p)


def scale(t: Tiling, sx: QNum, sy: QNum) -> Tiling:
    if _as_q(sx, t.p).sign() <= 0 or _as_q(sy, t.p).sign() <= 0:
        raise NonPositiveScale(f"scale factors must be positive: {sx}, {sy}")

    def sc(r: Rect) -> Rect:
        return Rect(r.x0 * sx, r.y0 * sy, r.w * sx, r.h * sy)

    return Tiling(sc(t.bounds), tuple(sc(r) for r in t.tiles), t.p)


def transpose(t: Tiling) -> Tiling:
    def tr(r: Rect) -> Rect:
        return Rect(r.y0, r.x0, r.h, r.w)

    return Tiling(tr(t.bounds), tuple(tr(r) for r in t.tiles), t.p)


def _as_q(v, p: int) -> QNum:
    return v if isinstance(v, QNum) else QNum(v, 0, p)


def _fit(sub: Tiling, target: Rect) -> list[Rect]:
    """Place ``sub`` (transposed if needed) exactly onto ``target``."""
    b = sub.bounds
    if target.h * b.w == b.h * target.w:
        swap = False
    elif target.h * b.h == b.w * target.w:
        swap = True
    else:
        raise AspectMismatch(f"block aspect {b.aspect} does not fit tile aspect {target.aspect}")
    tiles = sub.tiles
    bx0, by0, bw = b.x0, b.y0, b.w
    if swap:
        tiles = tuple(Rect(r.y0, r.x0, r.h, r.w) for r in tiles)
        bx0, by0, bw = b.y0, b.x0, b.h
    k = target.w / bw
    ox, oy = target.x0, target.y0
    return [
        Rect(ox + (r.x0 - bx0) * k, oy + (r.y0 - by0) * k, r.w * k, r.h * k)
        for r in tiles
    ]


def substitute(host: Tiling, tile_index: int, sub: Tiling) -> Tiling:
    if host.p != sub.p:
        raise RadicandMismatch(f"sqrt({host.p}) vs sqrt({sub.p})")
    tiles = list(host.tiles)
    tiles[tile_index:tile_index + 1] = _fit(sub, tiles[tile_index])
    return Tiling(host.bounds, tuple(tiles), host.p)


def substitute_all(host: Tiling, sub: Tiling) -> Tiling:
    """Replace every host tile by a copy of ``sub``, keeping host order."""
    if host.p != sub.p:
        raise RadicandMismatch(f"sqrt({host.p}) vs sqrt({sub.p})")
    out: list[Rect] = []
    for r in host.tiles:
        out.extend(_fit(sub, r))
    return Tiling(host.bounds, tuple(out), host.p)


def concat(bounds: Rect, parts: list[Tiling], p: int) -> Tiling:
    """Union of tilings assumed to partition ``bounds``."""
    return Tiling(bounds, tuple(r for t in parts for r in t.tiles), p)
