"""Similarity indices over signal pairs: inner-product geometry, the
real-valued Jaccard family, interiority, and coincidence.

Zero-denominator conventions keep every index total: a ratio over two
identically zero signals is 0 for the Jaccard family and 1 for interiority
(vacuous containment), so coincidence stays 0 through its Jaccard factor.
"""

import math
from dataclasses import dataclass

from .msetops import MsetOpKind, Signal, abs_mass, aggregate, kernel, require_compatible


@dataclass(frozen=True)
class SimilarityReport:
    """Every index for one operand pair, as assembled by :func:`report`."""

    jaccard: float
    interiority: float
    coincidence: float
    cosine: float
    inner: float
    norm_f: float
    norm_g: float
    euclidean: float


def inner(f: Signal, g: Signal) -> float:
    """Inner product dx * sum(f_i * g_i), summed left to right."""
    require_compatible(f, g)
    total = 0.0
    for a, b in zip(f.values, g.values):
        total += a * b
    return f.dx * total


def norm(f: Signal) -> float:
    """Euclidean norm, the square root of the self inner product."""
    return math.sqrt(inner(f, f))


def euclidean(f: Signal, g: Signal) -> float:
    """Euclidean distance: the norm of the pointwise difference."""
    require_compatible(f, g)
    total = 0.0
    for a, b in zip(f.values, g.values):
        d = a - b
        total += d * d
    return math.sqrt(f.dx * total)


def cosine(f: Signal, g: Signal) -> float:
    """Cosine similarity; undefined (raises) for a zero-norm operand."""
    nf = norm(f)
    ng = norm(g)
    if nf == 0.0 or ng == 0.0:
        raise ValueError("cosine similarity is undefined for a zero-norm operand")
    return inner(f, g) / (nf * ng)


def jaccard(f: Signal, g: Signal) -> float:
    """Real-valued Jaccard index: signed intersection over union of absolutes.

    Ranges over [-1, 1]: +1 when f == g, -1 when f == -g, 0 when both
    signals are identically zero (the only case with a zero denominator).
    For all-nonnegative samples this reduces to the classic sum-of-min over
    sum-of-max multiset ratio.
    """
    den = aggregate(MsetOpKind.ACUP, f, g)
    if den == 0.0:
        return 0.0
    return aggregate(MsetOpKind.SCAP, f, g) / den


def jaccard_alt(f: Signal, g: Signal) -> float:
    """Inner product over the squared union of absolutes.

    Agrees with :func:`jaccard` for length-1 operands, where the inner
    product factors exactly into signed intersection times union of
    absolutes; for longer signals the two generally differ because that
    factorization holds pointwise, not for the aggregates (f=(2,1),
    g=(1,2) gives jaccard 0.5 but jaccard_alt 0.25).
    """
    den = aggregate(MsetOpKind.ACUP, f, g)
    den_sq = den * den
    if den_sq == 0.0:
        # covers identically zero signals and operands so small that the
        # square underflows; the numerator underflows at the same scale
        return 0.0
    return inner(f, g) / den_sq


def interiority(f: Signal, g: Signal) -> float:
    """Containment of the smaller operand: sign-blind intersection mass over
    the smaller absolute mass.

    Returns 1 when the smaller mass is zero: a zero-mass operand is
    vacuously contained.
    """
    den = min(abs_mass(f), abs_mass(g))
    if den == 0.0:
        return 1.0
    return aggregate(MsetOpKind.ACAP, f, g) / den


def coincidence(f: Signal, g: Signal) -> float:
    """Product of the real-valued Jaccard and interiority indices."""
    return jaccard(f, g) * interiority(f, g)


def signed_power(value: float, exponent: int) -> float:
    """|value| ** exponent, keeping the sign of value for odd exponents."""
    if not isinstance(exponent, int) or exponent < 1:
        raise ValueError(f"exponent must be a positive integer, got {exponent!r}")
    p = abs(value) ** exponent
    return math.copysign(p, value) if exponent % 2 else p


def jaccard_power(f: Signal, g: Signal, d: int) -> float:
    """Sharpened Jaccard: the Jaccard ratio raised to the power d, sign kept
    for odd d.

    Odd powers steepen the crests, converging to the generalized Kronecker
    delta as d grows; even powers fold the anti-crest up to +1.
    """
    return signed_power(jaccard(f, g), d)


def split_intersection(f: Signal, g: Signal, alpha: float) -> float:
    """Signed intersection with its same-sign and opposite-sign parts reweighted.

    Aggregates 2*alpha*(same-sign part) - 2*(1-alpha)*(opposite-sign part)
    in a single pointwise pass, so alpha = 0.5 reproduces the plain signed
    intersection bit for bit.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    require_compatible(f, g)
    wp = 2.0 * alpha
    wm = 2.0 * (1.0 - alpha)
    total = 0.0
    for x, y in zip(f.values, g.values):
        total += wp * kernel(MsetOpKind.SCAP_PLUS, x, y) \
            - wm * kernel(MsetOpKind.SCAP_MINUS, x, y)
    return f.dx * total


def report(f: Signal, g: Signal) -> SimilarityReport:
    """Compute every index for one operand pair."""
    return SimilarityReport(
        jaccard=jaccard(f, g),
        interiority=interiority(f, g),
        coincidence=coincidence(f, g),
        cosine=cosine(f, g),
        inner=inner(f, g),
        norm_f=norm(f),
        norm_g=norm(g),
        euclidean=euclidean(f, g),
    )
