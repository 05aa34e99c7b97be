"""Exact coverage of a circle on a grid of gapped square pixels.

Closed-form per-pixel intersection areas via exhaustive location-code case
analysis, validated against an independent quadrature oracle.
"""

from .areas import (CaseResult, GeometryDomainError, chord_length, family_of,
                    intersection_area, segment_area, ubar)
from .classify import (CenteredRect, ClassifyConfig, LocationCode,
                       UnrealizableCodeError, UNREALIZABLE_CODES, VertexClass,
                       locate, realizable, to_centered, vertex_class)
from .coverage import (CoverageEntry, CoverageMap, RadiusTooSmallError,
                       VerificationReport, compute_coverage,
                       total_covered_area, verify_map)
from .grid import (Circle, GridRect, GridSpec, IndexWindow, PixelIndex,
                   candidate_halfwidth, candidate_window, grid_extent,
                   pixel_rect)
from .oracle import OracleConfig, OracleConvergenceError, rect_circle_area

__all__ = [
    "CaseResult", "CenteredRect", "Circle", "ClassifyConfig", "CoverageEntry",
    "CoverageMap", "GeometryDomainError", "GridRect", "GridSpec",
    "IndexWindow", "LocationCode", "OracleConfig", "OracleConvergenceError",
    "PixelIndex", "RadiusTooSmallError", "UNREALIZABLE_CODES",
    "UnrealizableCodeError", "VerificationReport", "VertexClass",
    "candidate_halfwidth", "candidate_window", "chord_length",
    "compute_coverage", "family_of", "grid_extent", "intersection_area",
    "locate", "pixel_rect", "realizable", "rect_circle_area", "segment_area",
    "to_centered", "total_covered_area", "ubar", "verify_map", "vertex_class",
]

__version__ = "0.1.0"
