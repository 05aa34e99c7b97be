"""Lattice model: pixel geometry, index/metric transforms, candidate windows.

The grid frame has its origin at the lower-left corner of the real area with
y increasing upward.  Row 0 is the *top* row, column 0 the leftmost column;
indices outside ``[0, rows) x [0, cols)`` address virtual squares.
"""

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple


@dataclass(frozen=True)
class GridSpec:
    """Physical lattice: square pixels of edge ``size`` separated by ``gap``."""

    size: float
    gap: float
    rows: int
    cols: int

    def __post_init__(self):
        if not self.size > 0:
            raise ValueError(f"size must be > 0, got {self.size}")
        if self.gap < 0:
            raise ValueError(f"gap must be >= 0, got {self.gap}")
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"rows/cols must be >= 1, got {self.rows}x{self.cols}")

    @property
    def pitch(self) -> float:
        return self.size + self.gap

    @property
    def fill_factor(self) -> float:
        return (self.size / self.pitch) ** 2


class PixelIndex(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Circle:
    """Circle in the grid frame.  The coverage pipeline requires radius > 2*size."""

    cx: float
    cy: float
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be > 0, got {self.radius}")


class GridRect(NamedTuple):
    """One pixel's bounds in the grid frame."""

    xl: float
    xr: float
    yb: float
    yt: float


@dataclass(frozen=True)
class IndexWindow:
    """Inclusive index ranges, already clamped to the real area.  May be empty."""

    row_min: int
    row_max: int
    col_min: int
    col_max: int

    @classmethod
    def empty(cls) -> "IndexWindow":
        return cls(0, -1, 0, -1)

    @property
    def is_empty(self) -> bool:
        return self.row_max < self.row_min or self.col_max < self.col_min

    def __len__(self) -> int:
        if self.is_empty:
            return 0
        return (self.row_max - self.row_min + 1) * (self.col_max - self.col_min + 1)

    def indices(self) -> Iterator[PixelIndex]:
        """Row-major iteration over the window."""
        if self.is_empty:
            return
        for r in range(self.row_min, self.row_max + 1):
            for c in range(self.col_min, self.col_max + 1):
                yield PixelIndex(r, c)

    def __contains__(self, idx) -> bool:
        r, c = idx
        return (self.row_min <= r <= self.row_max
                and self.col_min <= c <= self.col_max)


def grid_extent(grid: GridSpec) -> tuple[float, float]:
    """(width, height) of the real area: (n-1)*pitch + size per axis."""
    p = grid.pitch
    return (grid.cols - 1) * p + grid.size, (grid.rows - 1) * p + grid.size


def pixel_rect(grid: GridSpec, idx: PixelIndex) -> GridRect:
    """Bounds of the pixel at ``idx``.  Virtual indices are permitted."""
    p = grid.pitch
    xl = idx.col * p
    yt = (grid.rows - 1 - idx.row) * p + grid.size
    return GridRect(xl, xl + grid.size, yt - grid.size, yt)


def candidate_halfwidth(grid: GridSpec, radius: float) -> int:
    """Conservative window half-width K = ceil(radius / pitch).

    A pixel offset k >= K+1 from the hit cell is at least K*pitch >= radius
    away from the center, so the (2K+1)^2 window contains every pixel with
    positive intersection area.
    """
    return math.ceil(radius / grid.pitch)


def candidate_window(grid: GridSpec, circle: Circle) -> IndexWindow:
    """Clamped index window guaranteed to contain every intersected pixel."""
    p = grid.pitch
    _, height = grid_extent(grid)
    col_hit = math.floor(circle.cx / p)
    row_hit = math.floor((height - circle.cy) / p)
    k = candidate_halfwidth(grid, circle.radius)
    row_min = max(row_hit - k, 0)
    row_max = min(row_hit + k, grid.rows - 1)
    col_min = max(col_hit - k, 0)
    col_max = min(col_hit + k, grid.cols - 1)
    if row_max < row_min or col_max < col_min:
        return IndexWindow.empty()
    return IndexWindow(row_min, row_max, col_min, col_max)
