"""Exact tilings of rectangles by rectangles with aspect ratios in Q(sqrt p)."""

from .construct import (
    GridCounts,
    NormalizedProblem,
    block_heights,
    case1_tiling,
    choose_composite,
    choose_k,
    composite_block,
    diverse_tiling,
    grid_counts,
    normalize_inputs,
    single_ratio_tiling,
    theorem1_tiling,
)
from .decide import (
    Decision,
    Instance,
    Reason,
    classify,
    dehn_area,
    feasible_t1,
    feasible_t2,
    pair_preconditions,
)
from .model import CompositeSpec, Rect, Tiling, scale, substitute, translate, transpose
from .qfield import QNum, arith, as_rational, conj, normalize_radicand, sign, to_coprime_fraction
from .render import RenderOptions, approx, to_svg
from .verify import VerifyReport, oracle_check, verify_tiling

__all__ = [
    "CompositeSpec", "Decision", "GridCounts", "Instance", "NormalizedProblem", "QNum",
    "Reason", "Rect", "RenderOptions", "Tiling", "VerifyReport", "approx", "arith",
    "as_rational", "block_heights", "case1_tiling", "choose_composite", "choose_k",
    "classify", "composite_block", "conj", "dehn_area", "diverse_tiling", "feasible_t1",
    "feasible_t2", "grid_counts", "normalize_inputs", "normalize_radicand", "oracle_check",
    "pair_preconditions", "scale", "sign", "single_ratio_tiling", "substitute",
    "theorem1_tiling", "to_coprime_fraction", "to_svg", "translate", "transpose",
    "verify_tiling",
]
