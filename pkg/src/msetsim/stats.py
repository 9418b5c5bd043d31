"""Sample statistics and the sign-split (double) inner product and Pearson
coefficient.

Variance and covariance use the unbiased 1/(N-1) normalization throughout,
so the double Pearson parts recombine to the plain coefficient at
alpha = 0.5.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from .msetops import Signal, require_compatible
from .signs import sign


class SampleStats(NamedTuple):
    mean: float
    variance: float
    std: float
    n: int


def mean(v: Signal) -> float:
    """Arithmetic mean of the samples."""
    total = 0.0
    for x in v.values:
        total += x
    return total / len(v.values)


def sample_stats(v: Signal) -> SampleStats:
    """Mean, unbiased variance, and standard deviation; needs >= 2 samples."""
    n = len(v.values)
    if n < 2:
        raise ValueError("variance needs at least 2 samples")
    m = mean(v)
    total = 0.0
    for x in v.values:
        d = x - m
        total += d * d
    var = total / (n - 1)
    return SampleStats(m, var, math.sqrt(var), n)


def standardize(v: Signal) -> Signal:
    """Affine-map the samples to zero mean and unit standard deviation."""
    st = sample_stats(v)
    if st.std == 0.0:
        raise ValueError("cannot standardize a zero-variance signal")
    return Signal(tuple((x - st.mean) / st.std for x in v.values), v.dx)


def covariance(x: Signal, y: Signal) -> float:
    """Unbiased sample covariance of two equal-length signals."""
    n = len(x.values)
    if len(y.values) != n:
        raise ValueError(f"signal lengths differ: {n} vs {len(y.values)}")
    if n < 2:
        raise ValueError("covariance needs at least 2 samples")
    mx = mean(x)
    my = mean(y)
    total = 0.0
    for a, b in zip(x.values, y.values):
        total += (a - mx) * (b - my)
    return total / (n - 1)


def pearson(x: Signal, y: Signal) -> float:
    """Pearson correlation coefficient.

    Cauchy-Schwarz bounds the true value by 1, so the result is clamped to
    [-1, 1] only to absorb rounding excursions.
    """
    sx = sample_stats(x)
    sy = sample_stats(y)
    if sx.std == 0.0 or sy.std == 0.0:
        raise ValueError("pearson correlation is undefined for a zero-variance operand")
    r = covariance(x, y) / (sx.std * sy.std)
    return min(1.0, max(-1.0, r))


@dataclass(frozen=True)
class SplitProduct:
    """An inner product split into its same-sign (>= 0) and opposite-sign
    (<= 0) parts; the two parts add back to the plain inner product."""

    same_sign: float
    opposite_sign: float

    def combined(self, alpha: float) -> float:
        """The mix 2*alpha*same_sign + 2*(1-alpha)*opposite_sign; alpha = 0.5
        recovers the plain inner product."""
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
        return 2.0 * alpha * self.same_sign + 2.0 * (1.0 - alpha) * self.opposite_sign


def split_inner(f: Signal, g: Signal) -> SplitProduct:
    """Split the inner product into the contributions of same-signed and
    opposite-signed sample pairs.

    Pairs with a zero sample sit on the gate boundary (half weight in each
    gate) but contribute zero to both parts since their product is zero.
    """
    require_compatible(f, g)
    plus = 0.0
    minus = 0.0
    for x, y in zip(f.values, g.values):
        p = x * y
        sx = sign(x)
        sy = sign(y)
        plus += abs(sx + sy) / 2.0 * p
        minus += abs(sx - sy) / 2.0 * p
    return SplitProduct(f.dx * plus, f.dx * minus)


class DoublePearson(NamedTuple):
    p_plus: float
    p_minus: float
    p_alpha: float


def double_pearson(x: Signal, y: Signal, alpha: float) -> DoublePearson:
    """Pearson correlation split into same-sign and opposite-sign parts of
    the standardized operands, plus their alpha-mix.

    p_plus >= 0 collects sample pairs lying on the same side of their means
    and p_minus <= 0 the opposite-side pairs; p_alpha at alpha = 0.5
    recovers the plain Pearson coefficient.  The parts expose structure the
    plain coefficient hides: a cloud mixing y = x with y = -x branches has
    Pearson near 0 but a strongly negative p_minus, while a single branch
    has p_minus = 0.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    n = len(x.values)
    if len(y.values) != n:
        raise ValueError(f"signal lengths differ: {n} vs {len(y.values)}")
    xs = standardize(x)
    ys = standardize(y)
    # unit spacing: the split is a vector statistic like the coefficient itself
    sp = split_inner(Signal(xs.values), Signal(ys.values))
    p_plus = sp.same_sign / (n - 1)
    p_minus = sp.opposite_sign / (n - 1)
    p_alpha = 2.0 * alpha * p_plus + 2.0 * (1.0 - alpha) * p_minus
    return DoublePearson(p_plus, p_minus, p_alpha)
