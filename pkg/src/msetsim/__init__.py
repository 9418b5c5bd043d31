"""Sign-aware multiset similarity for sampled real signals.

The package generalizes min/max multiset intersection and union to signed
sample values, builds the real-valued Jaccard, interiority, and coincidence
indices on top of them, splits inner products and Pearson correlation by
operand sign agreement, slides any index along a signal for template
matching, and renders the indices' scalar surfaces over (x, y) grids.
"""

from .fields import FieldExpr, GridSpec, PolarProbe, ScalarField, field, jr_value, probe
from .indices import (
    SimilarityReport,
    coincidence,
    cosine,
    euclidean,
    inner,
    interiority,
    jaccard,
    jaccard_alt,
    jaccard_power,
    norm,
    report,
    signed_power,
    split_intersection,
)
from .io import ColumnSelector, HeatmapRange, fmt, read_csv, write_field_csv, write_pgm
from .msetops import MsetOpKind, Signal, abs_mass, aggregate, kernel, require_compatible
from .signs import SignTuple, conjoint_signs, gen_kronecker, sign
from .sliding import MatchProfile, SlideIndex, slide
from .stats import (
    DoublePearson,
    SampleStats,
    SplitProduct,
    covariance,
    double_pearson,
    mean,
    pearson,
    sample_stats,
    split_inner,
    standardize,
)

__version__ = "0.1.0"

__all__ = [
    "ColumnSelector",
    "DoublePearson",
    "FieldExpr",
    "GridSpec",
    "HeatmapRange",
    "MatchProfile",
    "MsetOpKind",
    "PolarProbe",
    "SampleStats",
    "ScalarField",
    "SignTuple",
    "Signal",
    "SimilarityReport",
    "SlideIndex",
    "SplitProduct",
    "abs_mass",
    "aggregate",
    "coincidence",
    "conjoint_signs",
    "cosine",
    "covariance",
    "double_pearson",
    "euclidean",
    "field",
    "fmt",
    "gen_kronecker",
    "inner",
    "interiority",
    "jaccard",
    "jaccard_alt",
    "jaccard_power",
    "jr_value",
    "kernel",
    "mean",
    "norm",
    "pearson",
    "probe",
    "read_csv",
    "report",
    "require_compatible",
    "sample_stats",
    "sign",
    "signed_power",
    "slide",
    "split_inner",
    "split_intersection",
    "standardize",
    "write_field_csv",
    "write_pgm",
]
