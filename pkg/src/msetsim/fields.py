"""Scalar fields over rectangular (x, y) grids: the building-block surfaces
of the similarity indices and the signed-delta reference surface.

The lattice is endpoint-inclusive and, for ranges symmetric about zero,
exactly negation-symmetric, so the crests x = +-y land on representable
lattice points and surface symmetries hold bit for bit.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .indices import signed_power
from .msetops import MsetOpKind, kernel
from .signs import gen_kronecker


class FieldExpr(Enum):
    A1 = "a1"         # signed intersection: sx*sy * min(|x|, |y|)
    A2 = "a2"         # union of absolutes: max(|x|, |y|)
    A3 = "a3"         # product x*y (the scalar inner product)
    A4 = "a4"         # squared union of absolutes
    A5 = "a5"         # intersection of absolutes: min(|x|, |y|)
    JR = "jr"         # A1/A2, 0 at the origin
    JR_POW = "jrpow"  # sign-preserving power of JR
    KRON = "kron"     # generalized Kronecker delta


@dataclass(frozen=True)
class GridSpec:
    """Endpoint-inclusive rectangular evaluation lattice.

    Point (i, j) sits at x = x_min + i*(x_max - x_min)/(nx - 1) and likewise
    for y.  The float realization blends both endpoints instead of stepping
    from x_min, so grids symmetric about zero negate exactly (x at index i
    is bitwise -x at index nx-1-i); the naive stepping form does not have
    that property.
    """

    x_min: float = -2.0
    x_max: float = 2.0
    y_min: float = -2.0
    y_max: float = 2.0
    nx: int = 401
    ny: int = 401

    def __post_init__(self):
        for name in ("x_min", "x_max", "y_min", "y_max"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.x_min < self.x_max:
            raise ValueError(f"need x_min < x_max, got {self.x_min!r} >= {self.x_max!r}")
        if not self.y_min < self.y_max:
            raise ValueError(f"need y_min < y_max, got {self.y_min!r} >= {self.y_max!r}")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grids need at least 2 points per axis")

    def xs(self) -> tuple[float, ...]:
        return _lattice(self.x_min, self.x_max, self.nx)

    def ys(self) -> tuple[float, ...]:
        return _lattice(self.y_min, self.y_max, self.ny)


def _lattice(lo: float, hi: float, n: int) -> tuple[float, ...]:
    last = n - 1
    pts = [lo]
    for i in range(1, last):
        pts.append((lo * (last - i) + hi * i) / last)
    pts.append(hi)
    return tuple(pts)


@dataclass(frozen=True)
class ScalarField:
    """Row-major field values: rows run y_min upward, columns x_min upward."""

    spec: GridSpec
    values: tuple[float, ...]

    def at(self, ix: int, iy: int) -> float:
        return self.values[iy * self.spec.nx + ix]


@dataclass(frozen=True)
class PolarProbe:
    """A first-quadrant probe point below the identity crest, in polar form:
    angle alpha in [0, pi/4) up from the x-axis, radius rho > 0."""

    alpha: float
    rho: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha < math.pi / 4):
            raise ValueError(f"alpha must lie in [0, pi/4), got {self.alpha!r}")
        if not (math.isfinite(self.rho) and self.rho > 0):
            raise ValueError(f"rho must be positive, got {self.rho!r}")


def jr_value(x: float, y: float) -> float:
    """The scalar Jaccard surface: signed min over max of absolutes, 0 at
    the origin."""
    den = max(abs(x), abs(y))
    if den == 0.0:
        return 0.0
    return kernel(MsetOpKind.SCAP, x, y) / den


def _a1(x, y):
    return kernel(MsetOpKind.SCAP, x, y)


def _a2(x, y):
    return kernel(MsetOpKind.ACUP, x, y)


def _a3(x, y):
    return x * y


def _a4(x, y):
    m = kernel(MsetOpKind.ACUP, x, y)
    return m * m


def _a5(x, y):
    return kernel(MsetOpKind.ACAP, x, y)


def _kron(x, y):
    return float(gen_kronecker(x, y))


_CELLS = {
    FieldExpr.A1: _a1,
    FieldExpr.A2: _a2,
    FieldExpr.A3: _a3,
    FieldExpr.A4: _a4,
    FieldExpr.A5: _a5,
    FieldExpr.JR: jr_value,
    FieldExpr.KRON: _kron,
}


def field(expr: FieldExpr, spec: GridSpec, d: int | None = None,
          threads: int = 1) -> ScalarField:
    """Evaluate one surface over the lattice.

    ``d`` is the power for FieldExpr.JR_POW and ignored otherwise.
    ``threads`` caps the worker count; cells are independent and written to
    disjoint rows, so the result is identical for every thread count.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads!r}")
    if expr is FieldExpr.JR_POW:
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"JR_POW needs a positive integer power, got {d!r}")
        power = d

        def cell(x, y):
            return signed_power(jr_value(x, y), power)
    else:
        cell = _CELLS[expr]

    xs = spec.xs()
    ys = spec.ys()
    rows: list[list[float] | None] = [None] * spec.ny

    def eval_row(j: int) -> None:
        y = ys[j]
        rows[j] = [cell(x, y) for x in xs]

    if threads == 1:
        for j in range(spec.ny):
            eval_row(j)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(eval_row, range(spec.ny)))
    values: list[float] = []
    for row in rows:
        values.extend(row)
    return ScalarField(spec, tuple(values))


def probe(p: PolarProbe) -> float:
    """The scalar Jaccard surface at (rho cos alpha, rho sin alpha).

    The surface is conical: along any circle around the origin it equals
    tan(alpha), independent of the radius.
    """
    return jr_value(p.rho * math.cos(p.alpha), p.rho * math.sin(p.alpha))
