"""Sampled signals and the ten sign-aware multiset binary operations, as
pointwise kernels and as rectangle-rule aggregations over signal pairs.

Aggregation is a plain left-to-right sum so that results are bit-identical
across runs, platforms with the same float semantics, and thread counts.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .signs import sign


class MsetOpKind(Enum):
    """Tags for the ten binary operations; see :func:`kernel` for formulas."""

    CAP = "cap"                # min(x, y): plain intersection
    CUP = "cup"                # max(x, y): plain union
    SCAP = "scap"              # sx*sy * min(|x|, |y|): signed intersection
    SCUP = "scup"              # sx*sy * max(|x|, |y|): signed union
    SCAP_MINUS = "scap_minus"  # opposite-sign-gated intersection magnitude
    SCAP_PLUS = "scap_plus"    # same-sign-gated intersection magnitude
    SCUP_MINUS = "scup_minus"  # opposite-sign-gated union magnitude
    SCUP_PLUS = "scup_plus"    # same-sign-gated union magnitude
    ACAP = "acap"              # min(|x|, |y|): intersection of absolutes
    ACUP = "acup"              # max(|x|, |y|): union of absolutes


@dataclass(frozen=True)
class Signal:
    """A uniformly sampled real sequence with sample spacing ``dx``.

    ``dx`` defaults to 1 so plain vectors and discretized functions share
    one type.  Samples must be finite and the signal nonempty; two signals
    enter a binary operation only with equal length and equal dx.
    """

    values: tuple[float, ...]
    dx: float = 1.0

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("signal needs at least one sample")
        for v in vals:
            if not math.isfinite(v):
                raise ValueError(f"signal samples must be finite, got {v!r}")
        dx = float(self.dx)
        if not math.isfinite(dx) or dx <= 0:
            raise ValueError(f"sample spacing must be a positive finite real, got {dx!r}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "dx", dx)

    def __len__(self) -> int:
        return len(self.values)


def require_compatible(f: Signal, g: Signal) -> None:
    """Raise unless f and g share length and sample spacing."""
    if len(f.values) != len(g.values):
        raise ValueError(f"signal lengths differ: {len(f.values)} vs {len(g.values)}")
    if f.dx != g.dx:
        raise ValueError(f"sample spacings differ: {f.dx!r} vs {g.dx!r}")


def kernel(kind: MsetOpKind, x: float, y: float) -> float:
    """Pointwise integrand of one multiset operation at the pair (x, y).

    The signed forms multiply min/max of the absolute values by the sign
    product; the half forms replace the sign product by the same-sign or
    opposite-sign gate, so SCAP == SCAP_PLUS - SCAP_MINUS pointwise (and
    likewise for SCUP).
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"kernel() requires finite operands, got ({x!r}, {y!r})")
    if kind is MsetOpKind.CAP:
        return min(x, y)
    if kind is MsetOpKind.CUP:
        return max(x, y)
    ax = abs(x)
    ay = abs(y)
    if kind is MsetOpKind.ACAP:
        return min(ax, ay)
    if kind is MsetOpKind.ACUP:
        return max(ax, ay)
    sx = sign(x)
    sy = sign(y)
    if kind is MsetOpKind.SCAP:
        return sx * sy * min(ax, ay)
    if kind is MsetOpKind.SCUP:
        return sx * sy * max(ax, ay)
    if kind is MsetOpKind.SCAP_PLUS:
        return abs(sx + sy) / 2.0 * min(ax, ay)
    if kind is MsetOpKind.SCAP_MINUS:
        return abs(sx - sy) / 2.0 * min(ax, ay)
    if kind is MsetOpKind.SCUP_PLUS:
        return abs(sx + sy) / 2.0 * max(ax, ay)
    if kind is MsetOpKind.SCUP_MINUS:
        return abs(sx - sy) / 2.0 * max(ax, ay)
    raise ValueError(f"unknown operation kind: {kind!r}")


def aggregate(kind: MsetOpKind, f: Signal, g: Signal) -> float:
    """dx times the left-to-right sum of the pointwise kernel over the pair."""
    require_compatible(f, g)
    total = 0.0
    for x, y in zip(f.values, g.values):
        total += kernel(kind, x, y)
    return f.dx * total


def abs_mass(f: Signal) -> float:
    """dx times the sum of absolute sample values; the operand's total magnitude."""
    total = 0.0
    for v in f.values:
        total += abs(v)
    return f.dx * total
