"""CSV signal ingestion and field export: numeric CSV in, field CSV and
binary PGM heatmaps out.

Every number is printed with 17 significant digits, the shortest length
guaranteed to parse back to the same binary64 value.
"""

import csv
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .fields import ScalarField
from .msetops import Signal

# a column is picked either by 0-based index or by header name
ColumnSelector = Union[int, str]


def fmt(v: float) -> str:
    """Format a float with 17 significant digits (round-trips exactly)."""
    return format(v, ".17g")


def _parses_as_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _resolve(selector: ColumnSelector, header: list[str] | None, path) -> int:
    if isinstance(selector, str):
        if header is None:
            raise ValueError(f"{path}: column name {selector!r} needs a header row")
        matches = [i for i, h in enumerate(header) if h.strip() == selector]
        if not matches:
            raise ValueError(f"{path}: column {selector!r} not found in header {header}")
        if len(matches) > 1:
            raise ValueError(f"{path}: column name {selector!r} is ambiguous")
        return matches[0]
    idx = int(selector)
    if idx < 0:
        raise ValueError(f"{path}: column index must be >= 0, got {idx}")
    return idx


def read_csv(path, selectors: Sequence[ColumnSelector],
             has_header: bool | None = None, dx: float = 1.0) -> list[Signal]:
    """Read one Signal per selected column, all sharing the spacing ``dx``.

    Selectors are 0-based column indices or header names; names require a
    header row.  With has_header=None the header is detected: any name
    selector implies a header, and for pure index selectors the first row
    counts as data exactly when all its selected cells parse as numbers.
    Fully empty rows are skipped; short (ragged) rows, blank cells, and
    unparseable or non-finite cells raise with the offending row number.
    """
    selectors = list(selectors)
    if not selectors:
        raise ValueError("at least one column selector is required")
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path}: file is empty")

    want_names = any(isinstance(s, str) for s in selectors)
    if has_header is None:
        if want_names:
            has_header = True
        else:
            first = rows[0]
            picked = [int(s) for s in selectors]
            has_header = not all(
                i < len(first) and _parses_as_number(first[i].strip()) for i in picked)
    elif want_names and not has_header:
        raise ValueError(f"{path}: column names need a header row")

    header = [h.strip() for h in rows[0]] if has_header else None
    data_start = 2 if has_header else 1
    data = rows[1:] if has_header else rows

    indices = [_resolve(s, header, path) for s in selectors]
    labels = [repr(s) for s in selectors]
    columns: list[list[float]] = [[] for _ in selectors]
    for row_no, record in enumerate(data, start=data_start):
        if not record:
            continue
        for slot, (idx, label) in enumerate(zip(indices, labels)):
            if idx >= len(record):
                raise ValueError(
                    f"{path}: row {row_no} has {len(record)} cell(s), "
                    f"column {label} needs index {idx}")
            cell = record[idx].strip()
            try:
                value = float(cell)
            except ValueError:
                raise ValueError(
                    f"{path}: row {row_no}, column {label}: "
                    f"cannot parse {cell!r} as a number") from None
            if not math.isfinite(value):
                raise ValueError(
                    f"{path}: row {row_no}, column {label}: non-finite value {cell!r}")
            columns[slot].append(value)
    if not columns[0]:
        raise ValueError(f"{path}: no data rows")
    return [Signal(tuple(col), dx) for col in columns]


def write_field_csv(fld: ScalarField, path) -> None:
    """Write "x,y,value" lines, one per cell, in row-major order (y from
    y_min upward, x from x_min upward within each row)."""
    xs = fld.spec.xs()
    ys = fld.spec.ys()
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write("x,y,value\n")
        k = 0
        for y in ys:
            for x in xs:
                fh.write(f"{fmt(x)},{fmt(y)},{fmt(fld.values[k])}\n")
                k += 1


@dataclass(frozen=True)
class HeatmapRange:
    """Grayscale mapping range: lo renders black, hi renders white."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise ValueError(f"need finite lo < hi, got {self.lo!r}, {self.hi!r}")


def write_pgm(fld: ScalarField, rng: HeatmapRange, path) -> None:
    """Render the field as a binary 8-bit PGM (P5); the top image row is the
    y_max row.

    pixel = round(255 * clamp((v - lo)/(hi - lo), 0, 1)), with halves
    rounded away from zero (so the midpoint value maps to 128).
    """
    nx = fld.spec.nx
    ny = fld.spec.ny
    span = rng.hi - rng.lo
    payload = bytearray(nx * ny)
    pos = 0
    for j in range(ny - 1, -1, -1):
        base = j * nx
        for i in range(nx):
            t = (fld.values[base + i] - rng.lo) / span
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            payload[pos] = int(255.0 * t + 0.5)
            pos += 1
    with open(path, "wb") as fh:
        fh.write(f"P5\n{nx} {ny}\n255\n".encode("ascii"))
        fh.write(bytes(payload))
