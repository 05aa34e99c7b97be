"""End-to-end pipeline: enumerate candidates, classify, dispatch, assemble.

``compute_coverage`` walks the conservative candidate window, recenters each
pixel to the circle frame, classifies its vertices, applies the cheap
all-coordinates-beyond-R rejection for (near-)all-outside pixels, computes
the exact area for the rest, and keeps the pixels that actually intersect.
"""

from dataclasses import dataclass

from .areas import intersection_area
from .classify import (ClassifyConfig, LocationCode, UnrealizableCodeError,
                       locate, to_centered)
from .grid import Circle, GridSpec, PixelIndex, candidate_window, pixel_rect
from .oracle import OracleConfig, rect_circle_area


class RadiusTooSmallError(ValueError):
    """The pipeline requires the radius to exceed twice the pixel size."""


@dataclass(frozen=True)
class CoverageEntry:
    index: PixelIndex
    code: LocationCode
    area: float
    fraction: float
    special: bool = False


@dataclass(frozen=True)
class CoverageMap:
    grid: GridSpec
    circle: Circle
    entries: tuple[CoverageEntry, ...]  # row-major, zero-area pixels omitted


def compute_coverage(grid: GridSpec, circle: Circle,
                     cfg: ClassifyConfig = ClassifyConfig()) -> CoverageMap:
    if not circle.radius > 2.0 * grid.size:
        raise RadiusTooSmallError(
            f"radius {circle.radius} must exceed twice the pixel size "
            f"{grid.size}")
    radius = circle.radius
    size = grid.size
    entries = []
    for idx in candidate_window(grid, circle).indices():
        rect = to_centered(pixel_rect(grid, idx), circle)
        code = locate(rect, radius, cfg)
        if sum(code) <= 1 and (abs(rect.x1) >= radius and abs(rect.x3) >= radius
                               and abs(rect.y1) >= radius
                               and abs(rect.y3) >= radius):
            continue  # whole rect in a closed quadrant beyond R: exactly empty
        try:
            result = intersection_area(rect, radius, size, code)
        except UnrealizableCodeError as exc:
            raise UnrealizableCodeError(exc.code, exc.rect, index=idx,
                                        reason=exc.reason) from exc
        if result.area > 0.0:
            entries.append(CoverageEntry(idx, code, result.area,
                                         min(result.area / (size * size), 1.0),
                                         result.special))
    return CoverageMap(grid, circle, tuple(entries))


def total_covered_area(cov: CoverageMap) -> float:
    return sum(e.area for e in cov.entries)


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    max_deviation: float
    worst_index: PixelIndex | None
    entry_failures: tuple[tuple[PixelIndex, float, float], ...]  # idx, closed, oracle
    outside_failures: tuple[tuple[PixelIndex, float], ...]       # idx, oracle
    entries_checked: int
    outside_scanned: int


def verify_map(cov: CoverageMap, cfg: OracleConfig = OracleConfig(),
               tol: float = 1e-8, outside_tol: float | None = None) -> VerificationReport:
    """Recompute every entry with the oracle and scan every real-area pixel
    outside the map for stray coverage.  Diagnostic only; never raises on a
    mismatch."""
    if outside_tol is None:
        outside_tol = tol
    mapped = {e.index: e for e in cov.entries}
    max_dev = 0.0
    worst = None
    entry_failures = []
    for e in cov.entries:
        ref = rect_circle_area(to_centered(pixel_rect(cov.grid, e.index),
                                           cov.circle), cov.circle.radius, cfg)
        dev = abs(e.area - ref)
        if dev > max_dev:
            max_dev, worst = dev, e.index
        if dev > tol:
            entry_failures.append((e.index, e.area, ref))

    outside_failures = []
    scanned = 0
    for r in range(cov.grid.rows):
        for c in range(cov.grid.cols):
            idx = PixelIndex(r, c)
            if idx in mapped:
                continue
            scanned += 1
            ref = rect_circle_area(to_centered(pixel_rect(cov.grid, idx),
                                               cov.circle), cov.circle.radius,
                                   cfg)
            if ref > outside_tol:
                outside_failures.append((idx, ref))

    return VerificationReport(
        passed=not entry_failures and not outside_failures,
        max_deviation=max_dev,
        worst_index=worst,
        entry_failures=tuple(entry_failures),
        outside_failures=tuple(outside_failures),
        entries_checked=len(cov.entries),
        outside_scanned=scanned,
    )
