"""Uniform-grid functions on the line and the plane.

Conventions shared by the whole package:

- Cell-constant interpretation.  Value ``i`` of a 1D function is the
  constant on ``[origin + i*spacing, origin + (i+1)*spacing)``; a 2D
  function stores rows along y and columns along x, value ``[i, j]``
  being constant on the cell anchored at
  ``(origin_x + j*spacing, origin_y + i*spacing)``.
- Zero extension.  Outside its window a grid function is exactly zero,
  so every level set has finite measure.
- One spacing per function.  2D grids are square-celled; the cell
  measure is ``spacing`` in 1D and ``spacing**2`` in 2D.

Values are validated to be finite floats and frozen after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "DomainError",
    "SampledFunction1D",
    "SampledFunction2D",
    "GridCellMeasure",
    "GridFunction",
    "cell_measure",
    "section_x",
    "section_y",
    "sup_norm",
    "read_grid",
    "write_grid",
]


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


def _freeze(obj, name: str, arr: np.ndarray, ndim: int) -> None:
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim != ndim:
        raise DomainError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise DomainError(f"{name} must hold at least one cell")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    object.__setattr__(obj, "values", arr)


@dataclass(frozen=True)
class SampledFunction1D:
    """Cell-constant function on a uniform 1D grid, zero outside its window."""

    origin: float
    spacing: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not (np.isfinite(self.spacing) and self.spacing > 0):
            raise DomainError("spacing must be positive and finite")
        if not np.isfinite(self.origin):
            raise DomainError("origin must be finite")
        _freeze(self, "values", self.values, 1)

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def window_measure(self) -> float:
        return len(self) * self.spacing

    def __add__(self, other: "SampledFunction1D") -> "SampledFunction1D":
        if not isinstance(other, SampledFunction1D):
            return NotImplemented
        if (
            other.origin != self.origin
            or other.spacing != self.spacing
            or len(other) != len(self)
        ):
            raise DomainError("profiles must share origin, spacing and length")
        return SampledFunction1D(self.origin, self.spacing, self.values + other.values)


@dataclass(frozen=True)
class SampledFunction2D:
    """Cell-constant function on a uniform square-celled 2D grid."""

    origin_x: float
    origin_y: float
    spacing: float
    values: np.ndarray = field(repr=False)  # shape (nrows, ncols); rows run along y

    def __post_init__(self):
        if not (np.isfinite(self.spacing) and self.spacing > 0):
            raise DomainError("spacing must be positive and finite")
        if not (np.isfinite(self.origin_x) and np.isfinite(self.origin_y)):
            raise DomainError("origins must be finite")
        _freeze(self, "values", self.values, 2)

    @property
    def nrows(self) -> int:
        return self.values.shape[0]

    @property
    def ncols(self) -> int:
        return self.values.shape[1]

    def transpose(self) -> "SampledFunction2D":
        """Swap the axes: (x, y) -> (y, x)."""
        return SampledFunction2D(self.origin_y, self.origin_x, self.spacing, self.values.T)


@dataclass(frozen=True)
class GridCellMeasure:
    """Measure of one grid cell together with the grid dimension."""

    dim: int
    cell: float

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise DomainError("dim must be 1 or 2")
        if not (np.isfinite(self.cell) and self.cell > 0):
            raise DomainError("cell measure must be positive")


GridFunction = SampledFunction1D | SampledFunction2D


def cell_measure(f: GridFunction) -> GridCellMeasure:
    """Cell measure of a grid function: spacing in 1D, spacing**2 in 2D."""
    if isinstance(f, SampledFunction1D):
        return GridCellMeasure(1, f.spacing)
    if isinstance(f, SampledFunction2D):
        return GridCellMeasure(2, f.spacing * f.spacing)
    raise DomainError(f"not a grid function: {type(f).__name__}")


def section_x(f: SampledFunction2D, column_index: int) -> SampledFunction1D:
    """Section at fixed x: the 1D function y -> f(x_j, y) for column j."""
    j = int(column_index)
    if not 0 <= j < f.ncols:
        raise DomainError(f"column index {j} out of range [0, {f.ncols})")
    return SampledFunction1D(f.origin_y, f.spacing, f.values[:, j])


def section_y(f: SampledFunction2D, row_index: int) -> SampledFunction1D:
    """Section at fixed y: the 1D function x -> f(x, y_i) for row i."""
    i = int(row_index)
    if not 0 <= i < f.nrows:
        raise DomainError(f"row index {i} out of range [0, {f.nrows})")
    return SampledFunction1D(f.origin_x, f.spacing, f.values[i, :])


def sup_norm(f: GridFunction) -> float:
    """Essential sup of |f| (the max over cells; zero extension adds nothing)."""
    return float(np.abs(f.values).max())


def _fmt(x: float) -> str:
    # repr of a Python float is the shortest decimal that round-trips
    return repr(float(x))


def write_grid(f: GridFunction, path: str | Path) -> None:
    """Write a grid function in the plain-text grid format.

    1D header: ``GRID1 origin spacing n``; 2D header:
    ``GRID2 origin_x origin_y spacing ncols nrows``.  Values follow in
    row-major order, whitespace-separated.  Numbers are written as
    shortest round-trip decimals, so read_grid(write_grid(f)) is
    bit-exact.
    """
    path = Path(path)
    lines = []
    if isinstance(f, SampledFunction1D):
        lines.append(f"GRID1 {_fmt(f.origin)} {_fmt(f.spacing)} {len(f)}")
        lines.append(" ".join(_fmt(v) for v in f.values))
    elif isinstance(f, SampledFunction2D):
        lines.append(
            f"GRID2 {_fmt(f.origin_x)} {_fmt(f.origin_y)} {_fmt(f.spacing)} {f.ncols} {f.nrows}"
        )
        for row in f.values:
            lines.append(" ".join(_fmt(v) for v in row))
    else:
        raise DomainError(f"not a grid function: {type(f).__name__}")
    path.write_text("\n".join(lines) + "\n")


def read_grid(path: str | Path) -> GridFunction:
    """Read a grid function written by write_grid (or by hand)."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise DomainError("empty grid file")
    tag = tokens[0].upper()
    if tag == "GRID1":
        if len(tokens) < 4:
            raise DomainError("GRID1 header needs origin, spacing and length")
        origin, spacing = float(tokens[1]), float(tokens[2])
        n = int(tokens[3])
        data = tokens[4:]
        if len(data) != n:
            raise DomainError(f"expected {n} values, found {len(data)}")
        return SampledFunction1D(origin, spacing, np.array([float(t) for t in data]))
    if tag == "GRID2":
        if len(tokens) < 6:
            raise DomainError("GRID2 header needs origins, spacing and shape")
        ox, oy, spacing = float(tokens[1]), float(tokens[2]), float(tokens[3])
        ncols, nrows = int(tokens[4]), int(tokens[5])
        data = tokens[6:]
        if len(data) != ncols * nrows:
            raise DomainError(f"expected {ncols * nrows} values, found {len(data)}")
        vals = np.array([float(t) for t in data]).reshape(nrows, ncols)
        return SampledFunction2D(ox, oy, spacing, vals)
    raise DomainError(f"unknown grid header {tokens[0]!r}")
