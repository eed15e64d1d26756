"""Exact verification of tilings.

``verify_tiling`` sorts every distinct x and y coordinate once with exact
comparisons and replaces coordinates by their ranks, so the sweep itself
runs on small integers.  Each vertical slab between consecutive x edges
must be covered by the tiles spanning it with abutting, non-overlapping
y intervals.  ``oracle_check`` is a slower, independent test used to
cross-check the sweep.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional

from .decide import Instance
from .errors import RadicandMismatch
from .model import Tiling
from .qfield import QNum


@dataclass(frozen=True)
class Violation:
    code: str  # "outside", "gap", "overlap", "ratio", "diversity"
    tiles: tuple[int, ...]
    x: Optional[tuple[QNum, QNum]] = None
    y: Optional[QNum] = None

    def describe(self) -> str:
        parts = [self.code]
        if self.x is not None:
            parts.append(f"in slab x=[{self.x[0]}, {self.x[1]}]")
        if self.y is not None:
            parts.append(f"at y={self.y}")
        if self.tiles:
            parts.append("tiles " + ",".join(str(i) for i in self.tiles))
        return " ".join(parts)


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    cover_ok: bool
    overlap_ok: bool
    ratios_ok: bool
    diversity_ok: Optional[bool]
    counts: tuple[int, ...] = ()
    first_violation: Optional[Violation] = field(default=None)


def _ranks(values: dict) -> tuple[list[QNum], dict]:
    """Sort exact values; map each value's integer triple to its rank."""
    ordered = sorted(values.values(), key=functools.cmp_to_key(lambda u, v: (u - v).sign()))
    return ordered, {v.parts: i for i, v in enumerate(ordered)}


def _sweep(t: Tiling) -> tuple[bool, bool, Optional[Violation]]:
    b = t.bounds
    edges = [(b.x0, b.x1, b.y0, b.y1)] + [(r.x0, r.x1, r.y0, r.y1) for r in t.tiles]
    xs = {v.parts: v for e in edges for v in e[:2]}
    ys = {v.parts: v for e in edges for v in e[2:]}
    xord, xr = _ranks(xs)
    yord, yr = _ranks(ys)
    ranked = [(xr[x0.parts], xr[x1.parts], yr[y0.parts], yr[y1.parts]) for x0, x1, y0, y1 in edges]
    (bx0, bx1, by0, by1), spans = ranked[0], ranked[1:]

    cover_ok = overlap_ok = True
    first: Optional[Violation] = None
    starts: dict[int, list[int]] = {}
    ends: dict[int, list[int]] = {}
    for i, s in enumerate(spans):
        if s[0] < bx0 or s[1] > bx1 or s[2] < by0 or s[3] > by1:
            cover_ok = False
            if first is None:
                first = Violation("outside", (i,))
        starts.setdefault(s[0], []).append(i)
        ends.setdefault(s[1], []).append(i)

    active: set[int] = set()
    for slab in range(bx1):
        active.difference_update(ends.get(slab, ()))
        active.update(starts.get(slab, ()))
        if slab < bx0:
            continue
        cursor, prev = by0, None
        for y0, y1, i in sorted((spans[i][2], spans[i][3], i) for i in active):
            if y0 > cursor:
                cover_ok = False
                if first is None:
                    first = Violation("gap", (i,), (xord[slab], xord[slab + 1]), yord[cursor])
            elif y0 < cursor and prev is not None:
                overlap_ok = False
                if first is None:
                    first = Violation("overlap", (prev, i), (xord[slab], xord[slab + 1]), yord[y0])
            if y1 > cursor:
                cursor, prev = y1, i
        if cursor < by1:
            cover_ok = False
            if first is None:
                tiles = (prev,) if prev is not None else ()
                first = Violation("gap", tiles, (xord[slab], xord[slab + 1]), yord[cursor])
    return cover_ok, overlap_ok, first


def match_ratio(r, ratios) -> Optional[int]:
    """Index of the first ratio the rectangle matches in either orientation."""
    for k, x in enumerate(ratios):
        if r.has_ratio(x):
            return k
    return None


def verify_tiling(t: Tiling, instance: Instance, diverse: bool = False) -> VerifyReport:
    if t.p != instance.p:
        raise RadicandMismatch(f"tiling uses sqrt({t.p}), instance uses sqrt({instance.p})")
    cover_ok, overlap_ok, first = _sweep(t)

    counts = [0] * instance.n
    ratios_ok = True
    for i, r in enumerate(t.tiles):
        k = match_ratio(r, instance.ratios)
        if k is None:
            ratios_ok = False
            if first is None:
                first = Violation("ratio", (i,))
        else:
            counts[k] += 1

    diversity_ok = None
    if diverse:
        diversity_ok = all(counts)
        if not diversity_ok and first is None:
            first = Violation("diversity", tuple(k for k, c in enumerate(counts) if not c))
    valid = cover_ok and overlap_ok and ratios_ok and diversity_ok is not False
    return VerifyReport(valid, cover_ok, overlap_ok, ratios_ok, diversity_ok, tuple(counts), first)


def oracle_check(t: Tiling) -> bool:
    """Area identity, containment and pairwise interior-disjointness.

    For axis-parallel rectangles these three together are equivalent to
    an exact cover of the bounds.  Pairs are enumerated in x0 order so a
    pair is skipped only once its x ranges are known to be disjoint.
    """
    b = t.bounds
    if t.total_area() != b.area:
        return False
    bx1, by1 = b.x1, b.y1
    for r in t.tiles:
        if r.x0 < b.x0 or r.y0 < b.y0 or r.x1 > bx1 or r.y1 > by1:
            return False
    boxes = sorted(
        ((r.x0, r.x1, r.y0, r.y1) for r in t.tiles),
        key=functools.cmp_to_key(lambda u, v: (u[0] - v[0]).sign()),
    )
    for i, (ax0, ax1, ay0, ay1) in enumerate(boxes):
        for bx0, bx1_, by0, by1_ in boxes[i + 1:]:
            if not bx0 < ax1:
                break
            if ay0 < by1_ and by0 < ay1:
                return False
    return True
