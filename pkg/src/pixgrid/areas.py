"""Closed-form circle/pixel intersection areas for every realizable code.

Every intersection shape decomposes into a circular segment plus at most a
triangle, trapezoid and rectangle.  Each family is implemented once, for a
canonical orientation:

* all vertices effectively outside  -> empty, or one segment (side test);
* one vertex inside (canonical ``2...``)   -> segment + right triangle;
* two adjacent vertices on          -> pure segment with chord = size;
* two adjacent vertices inside (canonical ``22..``) -> segment + trapezoid,
  with two exceptions: a vertex of the far edge on the circle splits into a
  "blue" (segment + trapezoid + rectangle) and a "red" (segment + trapezoid)
  sub-case, and the circle may cross the far edge twice (four boundary
  intersections), where the area is the square minus two corner slivers;
* three vertices inside (canonical ``2220``) -> segment + trapezoid + rectangle;
* everything of class 1/2 only      -> the full square.

Other orientations are rotated/reflected onto the canonical one.  Those
transforms only swap and negate coordinates, so they are exact in floating
point and the dispatcher is equivariant under the dihedral group to the bit.
"""

import math
import sys
from dataclasses import dataclass, field

from .classify import CenteredRect, LocationCode, UnrealizableCodeError, realizable

_EPS = sys.float_info.epsilon
# arcsin/sqrt arguments may overshoot their domain by a few roundings when
# chords are built from ubar; anything worse signals a dispatch bug.
_DOMAIN_SLACK = 4 * _EPS


class GeometryDomainError(Exception):
    """An area primitive was fed an argument outside its domain by more than
    rounding slack, indicating an inconsistent classification/dispatch."""


@dataclass(frozen=True)
class CaseResult:
    """Area of one pixel plus its decomposition into standard figures.

    ``parts`` holds (kind, value) pairs with kind in {segment, triangle,
    trapezoid, rectangle, square}; the area is their sum (triangles enter
    negatively in the four-intersection special case).
    """

    code: LocationCode
    area: float
    parts: tuple[tuple[str, float], ...] = field(default_factory=tuple)
    special: bool = False


def ubar(u: float, radius: float) -> float:
    """sqrt(R^2 - u^2): ordinate of the circle at abscissa u (and vice versa)."""
    r2 = radius * radius
    t = r2 - u * u
    if t < 0:
        if t < -_DOMAIN_SLACK * r2:
            raise GeometryDomainError(f"ubar: |u|={abs(u)} exceeds radius {radius}")
        t = 0.0
    return math.sqrt(t)


def chord_length(xa: float, xc: float, ya: float, yc: float) -> float:
    """Distance between two named circle/edge intersection points."""
    return math.hypot(xa - xc, ya - yc)


def segment_area(chord: float, radius: float) -> float:
    """Area of the minor circular segment over a chord of given length."""
    if chord < 0:
        raise GeometryDomainError(f"negative chord {chord}")
    z = chord / (2.0 * radius)
    if z > 1.0:
        if z > 1.0 + _DOMAIN_SLACK:
            raise GeometryDomainError(f"chord {chord} exceeds diameter {2 * radius}")
        z = 1.0
    return radius * radius * (math.asin(z) - z * math.sqrt(1.0 - z * z))


# --- code families ----------------------------------------------------------

def _rotations(digits: str) -> list[str]:
    return [digits[k:] + digits[:k] for k in range(4)]


_OUTSIDE = frozenset(["0000", "1000", "0100", "0010", "0001"])
_ONE_INSIDE = frozenset(
    d for canon in ("2000", "2100", "2001", "2101") for d in _rotations(canon))
_EDGE_ON = frozenset(_rotations("1100"))
_TWO_INSIDE = frozenset(
    d for canon in ("2200", "2210", "2201") for d in _rotations(canon))
_THREE_INSIDE = frozenset(_rotations("2220"))


def family_of(code: LocationCode) -> str | None:
    """Human-readable family label, or None for unrealizable codes."""
    if not realizable(code):
        return None
    d = code.digits
    if set(d) <= {"1", "2"}:
        return "full"
    if d in _OUTSIDE:
        return "outside/segment-or-empty"
    if d in _ONE_INSIDE:
        return "one-inside/segment+triangle"
    if d in _EDGE_ON:
        return "edge-on-chord/segment"
    if d in _TWO_INSIDE:
        return "two-inside/segment+trapezoid"
    if d in _THREE_INSIDE:
        return "three-inside/segment+trapezoid+rectangle"
    # Codes like 2110 or 0111: compatible with the sum identity but their
    # on-vertices force coordinate coincidences no square can satisfy.
    return "degenerate-contact/unreachable"


# --- canonical-frame transforms ---------------------------------------------

def _rot_ccw(rect: CenteredRect) -> CenteredRect:
    # (x, y) -> (-y, x); exact.
    return CenteredRect(-rect.y3, -rect.y1, rect.x1, rect.x3)


def _reflect_x(rect: CenteredRect) -> CenteredRect:
    # (x, y) -> (x, -y); exact.
    return CenteredRect(rect.x1, rect.x3, -rect.y3, -rect.y1)


# --- canonical family handlers ----------------------------------------------
# All handlers take a rect already normalized to the canonical orientation and
# return (parts, special).

def _outside_or_segment(rect, radius, size):
    x1, x3, y1, y3 = rect.x1, rect.x3, rect.y1, rect.y3
    hits = []
    # A side line within R yields a chord only if the perpendicular from the
    # center meets the side's span; otherwise both chord endpoints fall off
    # the edge (corner-outside constraints force same-sign empty overlap).
    if abs(y1) < radius <= abs(y3) and x1 < 0 < x3:
        hits.append(y1)  # bottom side crossed, square above the center
    if abs(y3) < radius <= abs(y1) and x1 < 0 < x3:
        hits.append(y3)  # top side crossed, square below
    if abs(x1) < radius <= abs(x3) and y1 < 0 < y3:
        hits.append(x1)  # left side crossed, square to the right
    if abs(x3) < radius <= abs(x1) and y1 < 0 < y3:
        hits.append(x3)  # right side crossed, square to the left
    if not hits:
        return (), False
    if len(hits) > 1:
        raise GeometryDomainError(
            f"multiple side chords for an all-outside rect {rect}")
    seg = segment_area(2.0 * ubar(hits[0], radius), radius)
    return (("segment", seg),), False


def _one_inside(rect, radius, size):
    # Canonical: v1 = (x1, y1) inside, both adjacent crossings exist on the
    # bottom and left edges at (+ubar(y1), y1) and (x1, +ubar(x1)).
    x1, y1 = rect.x1, rect.y1
    leg_x = ubar(y1, radius) - x1
    leg_y = ubar(x1, radius) - y1
    chord = chord_length(ubar(y1, radius), x1, y1, ubar(x1, radius))
    return (("segment", segment_area(chord, radius)),
            ("triangle", leg_x * leg_y / 2.0)), False


def _edge_on(rect, radius, size):
    # Two adjacent vertices on the circle: the shared edge is the chord.
    return (("segment", segment_area(size, radius)),), False


def _two_inside(rect, radius, size, v3_on):
    """Canonical: v1, v2 inside (left edge inside), code 2200 or 2210."""
    x1, x3, y1, y3 = rect.x1, rect.x3, rect.y1, rect.y3
    xa_bot = ubar(y1, radius)  # bottom-edge crossing abscissa

    if v3_on and y3 > 0:
        # 2210 with the on-vertex above the axis: the circle re-enters
        # through the right edge at -ubar(x3) and a full-width strip up to
        # the top edge lies inside the disc.  All crossings are computed
        # from the edge coordinates, never from the vertex's on-ness: the
        # relative band allows ~sqrt(eps)*R coordinate slop near the rim
        # apex (the vertex may even overshoot the rim by the band).
        yb3 = ubar(min(x3, radius), radius)
        trap = (xa_bot - x1 + size) * (-yb3 - y1) / 2.0
        rect_part = (y3 + yb3) * size
        seg = segment_area(chord_length(xa_bot, x3, y1, -yb3), radius)
        return (("segment", seg), ("trapezoid", trap),
                ("rectangle", rect_part)), False

    # 2200 crossings on the bottom and top edges; a 2210 with the on-vertex
    # at or below the axis (y3 <= 0) reduces to the same formula, since the
    # top-edge crossing (ubar(y3), y3) coincides with the on-vertex.
    xa_top = ubar(y3, radius)
    if abs(x3) < radius:
        yb3 = ubar(x3, radius)
        if y1 < -yb3 and yb3 < y3:
            # Four-intersection special case: the circle also crosses the
            # right edge twice; subtract the two corner slivers (triangle
            # minus segment each) from the full square.
            tri_top = (x3 - xa_top) * (y3 - yb3) / 2.0
            seg_top = segment_area(chord_length(xa_top, x3, y3, yb3), radius)
            tri_bot = (x3 - xa_bot) * (-yb3 - y1) / 2.0
            seg_bot = segment_area(chord_length(xa_bot, x3, y1, -yb3), radius)
            return (("square", size * size),
                    ("triangle", -tri_top), ("segment", seg_top),
                    ("triangle", -tri_bot), ("segment", seg_bot)), True
    trap = (xa_bot - x1 + xa_top - x1) * size / 2.0
    seg = segment_area(chord_length(xa_bot, xa_top, y1, y3), radius)
    return (("segment", seg), ("trapezoid", trap)), False


def _three_inside(rect, radius, size):
    # Canonical: v4 = (x3, y1) outside; crossings on the bottom edge at
    # (+ubar(y1), y1) and the right edge at (x3, -ubar(x3)).
    x1, x3, y1, y3 = rect.x1, rect.x3, rect.y1, rect.y3
    xa = ubar(y1, radius)
    yb = ubar(x3, radius)
    rect_part = (xa - x1) * size
    trap = (size + y3 + yb) * (x3 - xa) / 2.0
    seg = segment_area(chord_length(xa, x3, y1, -yb), radius)
    return (("segment", seg), ("trapezoid", trap),
            ("rectangle", rect_part)), False


# --- dispatcher --------------------------------------------------------------

def intersection_area(rect: CenteredRect, radius: float, size: float,
                      code: LocationCode) -> CaseResult:
    """Exact intersection area of ``rect`` (circle-centered frame) with the
    circle, dispatched on the location code.

    Requires radius > 2*size (the engine's standing assumption) and
    ``code == locate(rect, radius)``.
    """
    if not radius > 2.0 * size:
        raise GeometryDomainError(
            f"radius {radius} must exceed twice the pixel size {size}")
    if not realizable(code):
        raise UnrealizableCodeError(code, rect)

    d = code.digits
    if set(d) <= {"1", "2"}:
        # All vertices in the closed disc: the square is fully covered.
        return CaseResult(code, size * size, (("square", size * size),))

    if d in _OUTSIDE:
        parts, special = _outside_or_segment(rect, radius, size)
    elif d in _EDGE_ON:
        parts, special = _edge_on(rect, radius, size)
    elif d in _ONE_INSIDE:
        k = d.index("2")
        r = rect
        for _ in range(k):
            r = _rot_ccw(r)
        parts, special = _one_inside(r, radius, size)
    elif d in _TWO_INSIDE:
        k = next(i for i in range(4) if (d[i:] + d[:i]).startswith("22"))
        dk = d[k:] + d[:k]
        r = rect
        for _ in range(k):
            r = _rot_ccw(r)
        if dk == "2201":
            r = _reflect_x(r)
            dk = "2210"
        parts, special = _two_inside(r, radius, size, v3_on=dk[2] == "1")
    elif d in _THREE_INSIDE:
        k = (d.index("0") + 1) % 4
        r = rect
        for _ in range(k):
            r = _rot_ccw(r)
        parts, special = _three_inside(r, radius, size)
    else:
        raise UnrealizableCodeError(
            code, rect,
            reason="degenerate contact code; unreachable for R > 2*size")

    area = math.fsum(v for _, v in parts)
    if area < -1e-9 * size * size or area > size * size * (1 + 1e-9):
        raise GeometryDomainError(
            f"area {area} out of range for code {code}, rect {rect}")
    return CaseResult(code, min(max(area, 0.0), size * size), parts, special)
