"""Sliding-window application of a similarity index: valid-mode template
matching profiles over 1-D signals.

Valid mode only: every window lies fully inside the signal, no boundary
padding, so window scores are exactly the index values they claim to be.
"""

from dataclasses import dataclass
from enum import Enum

from .indices import coincidence, cosine, inner, jaccard, norm
from .msetops import Signal
from .stats import pearson, sample_stats


class SlideIndex(Enum):
    INNER = "inner"
    JACCARD = "jaccard"
    COINCIDENCE = "coincidence"
    PEARSON = "pearson"
    COSINE = "cosine"


@dataclass(frozen=True)
class MatchProfile:
    """Scores of one index over every valid window placement.

    ``lags`` runs 0 .. len(signal) - len(template) inclusive; ``best_lag``
    is the smallest lag attaining the maximum score.  ``degenerate_lags``
    lists windows where pearson or cosine was undefined and the score was
    set to 0 to keep the profile total.
    """

    lags: tuple[int, ...]
    scores: tuple[float, ...]
    best_lag: int
    best_score: float
    degenerate_lags: tuple[int, ...] = ()


_SCORERS = {
    SlideIndex.INNER: inner,
    SlideIndex.JACCARD: jaccard,
    SlideIndex.COINCIDENCE: coincidence,
    SlideIndex.PEARSON: pearson,
    SlideIndex.COSINE: cosine,
}


def _degenerate(index: SlideIndex, sig: Signal) -> bool:
    if index is SlideIndex.PEARSON:
        return len(sig.values) < 2 or sample_stats(sig).variance == 0.0
    if index is SlideIndex.COSINE:
        return norm(sig) == 0.0
    return False


def slide(template: Signal, signal: Signal, index: SlideIndex) -> MatchProfile:
    """Score the template against every valid window of the signal."""
    m = len(template.values)
    if m > len(signal.values):
        raise ValueError(
            f"template (length {m}) must not be longer than the signal "
            f"(length {len(signal.values)})")
    if template.dx != signal.dx:
        raise ValueError(f"sample spacings differ: {template.dx!r} vs {signal.dx!r}")

    score_fn = _SCORERS[index]
    template_degenerate = _degenerate(index, template)
    lags = tuple(range(len(signal.values) - m + 1))
    scores = []
    flagged = []
    for k in lags:
        window = Signal(signal.values[k:k + m], signal.dx)
        if template_degenerate or _degenerate(index, window):
            scores.append(0.0)
            flagged.append(k)
        else:
            scores.append(score_fn(template, window))
    best_lag = 0
    best_score = scores[0]
    for k, s in zip(lags[1:], scores[1:]):
        if s > best_score:  # strict: ties keep the smallest lag
            best_lag = k
            best_score = s
    return MatchProfile(lags, tuple(scores), best_lag, best_score, tuple(flagged))
