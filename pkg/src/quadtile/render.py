"""SVG output for tilings.

All coordinates pass through :func:`approx`, which rounds exactly using
integer square roots, so the documents never carry float artifacts and
are byte-identical between runs.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .decide import Instance
from .model import Tiling
from .qfield import QNum
from .verify import match_ratio

PALETTE = (
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
    "#b07aa1", "#edc948", "#76b7b2", "#ff9da7",
)
UNMATCHED = "#bab0ac"


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    precision: int = 12
    show_labels: bool = False

    def __post_init__(self):
        if self.width_px <= 0:
            raise ValueError("width_px must be positive")
        if self.precision < 6:
            raise ValueError("precision must be at least 6")


def approx(x: QNum, digits: int) -> str:
    """Decimal string of x rounded to ``digits`` places, ties away from zero."""
    neg = x.sign() < 0
    n = ((abs(x) * 10**digits) + Fraction(1, 2)).floor()
    s = str(n).rjust(digits + 1, "0")
    body = f"{s[:-digits]}.{s[-digits:]}" if digits else s
    return f"-{body}" if neg and n else body


def _shape_keys(t: Tiling, instance: Optional[Instance]) -> list[Optional[int]]:
    if instance is not None:
        return [match_ratio(r, instance.ratios) for r in t.tiles]
    seen: dict[QNum, int] = {}
    keys = []
    for r in t.tiles:
        a = r.aspect
        if a < 1:
            a = a.reciprocal()
        keys.append(seen.setdefault(a, len(seen)))
    return keys


def to_svg(t: Tiling, opts: RenderOptions = RenderOptions(), instance: Optional[Instance] = None) -> str:
    b = t.bounds
    k = QNum(opts.width_px, 0, t.p) / b.w
    d = opts.precision

    def px(v: QNum) -> str:
        return approx(v * k, d)

    width, height = str(opts.width_px), px(b.h)
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "version": "1.1",
        "width": width,
        "height": height,
        "viewBox": f"0 0 {width} {height}",
    })
    tiles = ET.SubElement(svg, "g", {"stroke": "#000000", "stroke-width": "0.5"})
    labels = ET.SubElement(svg, "g", {"font-family": "sans-serif", "text-anchor": "middle"}) if opts.show_labels else None
    top = b.y1
    for r, key in zip(t.tiles, _shape_keys(t, instance)):
        fill = UNMATCHED if key is None else PALETTE[key % len(PALETTE)]
        ET.SubElement(tiles, "rect", {
            "x": px(r.x0 - b.x0),
            "y": px(top - r.y1),
            "width": px(r.w),
            "height": px(r.h),
            "fill": fill,
        })
        if labels is not None:
            side = r.w if r.w < r.h else r.h
            text = ET.SubElement(labels, "text", {
                "x": px(r.x0 - b.x0 + r.w / 2),
                "y": px(top - r.y1 + r.h / 2),
                "font-size": px(side / 3),
                "dominant-baseline": "middle",
            })
            text.text = "?" if key is None else f"x{key + 1}"
    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"
