"""Command line front end: ``quadtile decide | tile | verify | render``.

Instance files::

    p 5
    ratio 1/2 1/2        # a_i b_i, one line per ratio
    target 7/24 23/24    # e f

Tiling files carry the square-free radicand, the bounds (width, height)
and one ``rect x0 y0 w h`` line per tile, numbers written as ``A/B+C/D*s``.

Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .construct import diverse_tiling, theorem1_tiling
from .decide import Decision, Instance, Reason, feasible_t1, feasible_t2
from .errors import Infeasible, TilingError
from .model import Rect, Tiling
from .qfield import QNum, format_qnum, normalize_radicand, parse_qnum
from .render import RenderOptions, to_svg
from .verify import verify_tiling

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


class FormatError(ValueError):
    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")


@dataclass(frozen=True)
class InstanceFile:
    instance: Instance
    target: QNum
    p_in: Fraction
    scale: Fraction


def _rational(tok: str, path, lineno: int) -> Fraction:
    if not _RATIONAL_RE.match(tok):
        raise FormatError(path, lineno, f"not a rational: {tok!r}")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise FormatError(path, lineno, f"zero denominator: {tok!r}") from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_instance(text: str, path="<instance>") -> InstanceFile:
    p_line = target = None
    ratios = []
    for lineno, toks in _lines(text):
        key, args = toks[0], toks[1:]
        if key == "p" and len(args) == 1:
            if p_line is not None:
                raise FormatError(path, lineno, "duplicate p line")
            p_line = (lineno, _rational(args[0], path, lineno))
        elif key == "ratio" and len(args) == 2:
            ratios.append((lineno, _rational(args[0], path, lineno), _rational(args[1], path, lineno)))
        elif key == "target" and len(args) == 2:
            if target is not None:
                raise FormatError(path, lineno, "duplicate target line")
            target = (lineno, _rational(args[0], path, lineno), _rational(args[1], path, lineno))
        else:
            raise FormatError(path, lineno, f"unrecognized line: {' '.join(toks)!r}")
    if p_line is None:
        raise FormatError(path, 0, "missing p line")
    if not ratios:
        raise FormatError(path, 0, "no ratio lines")
    if target is None:
        raise FormatError(path, 0, "missing target line")
    try:
        p, k = normalize_radicand(p_line[1])
    except TilingError as exc:
        raise FormatError(path, p_line[0], f"{type(exc).__name__}: {exc}") from None
    xs = []
    for lineno, a, b in ratios:
        x = QNum(a, b * k, p)
        if x.sign() <= 0:
            raise FormatError(path, lineno, f"ratio {x} is not positive")
        xs.append(x)
    z = QNum(target[1], target[2] * k, p)
    if z.sign() <= 0:
        raise FormatError(path, target[0], f"target {z} is not positive")
    return InstanceFile(Instance(p, tuple(xs)), z, p_line[1], k)


def serialize_tiling(t: Tiling) -> str:
    b = t.bounds
    if b.x0 or b.y0:
        raise ValueError("tiling files require bounds anchored at the origin")
    out = [f"p {t.p}", f"bounds {format_qnum(b.w)} {format_qnum(b.h)}"]
    for r in t.tiles:
        out.append("rect " + " ".join(format_qnum(v) for v in (r.x0, r.y0, r.w, r.h)))
    return "\n".join(out) + "\n"


def parse_tiling(text: str, path="<tiling>") -> Tiling:
    p = bounds = None
    tiles = []
    for lineno, toks in _lines(text):
        key, args = toks[0], toks[1:]
        try:
            if key == "p" and len(args) == 1 and p is None:
                p = int(args[0])
                if normalize_radicand(p) != (p, 1):
                    raise ValueError(f"radicand {p} is not square-free")
            elif p is None:
                raise ValueError("p line must come first")
            elif key == "bounds" and len(args) == 2 and bounds is None:
                zero = QNum(0, 0, p)
                bounds = Rect(zero, zero, parse_qnum(args[0], p), parse_qnum(args[1], p))
            elif key == "rect" and len(args) == 4 and bounds is not None:
                tiles.append(Rect(*(parse_qnum(a, p) for a in args)))
            else:
                raise ValueError(f"unexpected line: {' '.join(toks)!r}")
        except (ValueError, TilingError) as exc:
            raise FormatError(path, lineno, str(exc)) from None
    if bounds is None:
        raise FormatError(path, 0, "missing p or bounds line")
    return Tiling(bounds, tuple(tiles), p)


# -- commands ----------------------------------------------------------------

def _describe(d: Decision, diverse: bool) -> list[str]:
    lines = [f"case {d.case} {'feasible' if d.feasible else 'infeasible'}"]
    if isinstance(d.witness, tuple):
        lines.append(f"witness: ratios {d.witness[0] + 1} and {d.witness[1] + 1}")
    elif d.witness is not None:
        lines.append(f"witness: ratio {d.witness + 1}")
    if d.bound is not None:
        lines.append(f"bound: {d.bound}")
    if d.slope is not None:
        lines.append(f"target slope: {d.slope}")
    if d.boundary and diverse:
        lines.append("boundary: plain tiling feasible, diverse tiling infeasible")
    else:
        lines.append(f"boundary: {'yes' if d.boundary else 'no'}")
    if d.reason is not Reason.OK:
        lines.append(f"reason: {d.reason.value}")
    return lines


def _decide(inst: InstanceFile, diverse: bool) -> Decision:
    if diverse:
        return feasible_t2(inst.instance, inst.target)
    return feasible_t1(inst.instance, inst.target)


def cmd_decide(args) -> int:
    inst = parse_instance(_read(args.instance), args.instance)
    d = _decide(inst, args.diverse)
    print("\n".join(_describe(d, args.diverse)))
    return EXIT_OK if d.feasible else EXIT_NO


def cmd_tile(args) -> int:
    inst = parse_instance(_read(args.instance), args.instance)
    d = _decide(inst, args.diverse)
    if not d.feasible:
        print("\n".join(_describe(d, args.diverse)), file=sys.stderr)
        return EXIT_NO
    build = diverse_tiling if args.diverse else theorem1_tiling
    try:
        t = build(inst.instance, inst.target)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_NO
    _write(args.output, serialize_tiling(t))
    return EXIT_OK


def cmd_verify(args) -> int:
    t = parse_tiling(_read(args.tiling), args.tiling)
    inst = parse_instance(_read(args.instance), args.instance)
    if t.p != inst.instance.p:
        print(f"error: tiling uses sqrt({t.p}), instance uses sqrt({inst.instance.p})", file=sys.stderr)
        return EXIT_ERROR
    rep = verify_tiling(t, inst.instance, args.diverse)
    ok = {True: "ok", False: "FAIL", None: "not checked"}
    print(f"valid: {'yes' if rep.valid else 'no'}")
    print(f"tiles: {len(t)}")
    print(f"cover: {ok[rep.cover_ok]}")
    print(f"overlap: {ok[rep.overlap_ok]}")
    print(f"ratios: {ok[rep.ratios_ok]}")
    print(f"diversity: {ok[rep.diversity_ok]}")
    print("counts: " + " ".join(str(c) for c in rep.counts))
    if rep.first_violation is not None:
        print(f"violation: {rep.first_violation.describe()}")
    return EXIT_OK if rep.valid else EXIT_NO


def cmd_render(args) -> int:
    t = parse_tiling(_read(args.tiling), args.tiling)
    instance = None
    if args.instance:
        instance = parse_instance(_read(args.instance), args.instance).instance
    opts = RenderOptions(width_px=args.width, show_labels=args.labels)
    _write(args.output, to_svg(t, opts, instance))
    return EXIT_OK


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadtile", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether the target is tileable")
    p.add_argument("instance")
    p.add_argument("--diverse", action="store_true", help="require every ratio to appear")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("tile", help="construct a tiling file")
    p.add_argument("instance")
    p.add_argument("--diverse", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("verify", help="check a tiling file against an instance")
    p.add_argument("tiling")
    p.add_argument("--instance", required=True)
    p.add_argument("--diverse", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an SVG picture of a tiling")
    p.add_argument("tiling")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--instance", default=None, help="color tiles by the instance's ratio order")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (FormatError, OSError, TilingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
