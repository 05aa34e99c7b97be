"""Vertex classification against the circle and location-code handling.

Pixel rectangles are recentered so the circle center is the origin; each
vertex is classified outside (0), on (1) or inside (2) the circle by
comparing its squared distance Z = x^2 + y^2 with P = R^2.  The ordered
quadruple of classes is the location code that drives the area dispatch.

Vertex order is fixed as v1 = (x1, y1) bottom-left, v2 = (x1, y3) top-left,
v3 = (x3, y3) top-right, v4 = (x3, y1) bottom-right, which satisfies the
shared-coordinate constraints x2 = x1, x4 = x3, y2 = y3, y4 = y1.
"""

from dataclasses import dataclass
from enum import IntEnum

from .grid import Circle, GridRect


class VertexClass(IntEnum):
    OUTSIDE = 0
    ON_CIRCLE = 1
    INSIDE = 2


@dataclass(frozen=True)
class ClassifyConfig:
    """Tolerance for on-circle detection, relative to R^2.

    Exact equality of Z and P is measure-zero in floating point; the band
    exists so deliberately constructed fixtures classify as "on" while
    random inputs essentially never do.
    """

    eps_rel: float = 1e-12

    def __post_init__(self):
        if not 0 <= self.eps_rel < 1e-6:
            raise ValueError(f"eps_rel must be in [0, 1e-6), got {self.eps_rel}")


@dataclass(frozen=True)
class CenteredRect:
    """One pixel translated to the circle-centered frame.

    x1/x3 are the left/right edges, y1/y3 the bottom/top edges; only these
    two indices per axis are needed since opposite vertices share them.
    """

    x1: float
    x3: float
    y1: float
    y3: float

    def __post_init__(self):
        if not (self.x1 < self.x3 and self.y1 < self.y3):
            raise ValueError(f"degenerate rect {self}")

    def vertices(self) -> tuple[tuple[float, float], ...]:
        """(v1, v2, v3, v4) in the fixed order."""
        return ((self.x1, self.y1), (self.x1, self.y3),
                (self.x3, self.y3), (self.x3, self.y1))


@dataclass(frozen=True)
class LocationCode:
    v1: VertexClass
    v2: VertexClass
    v3: VertexClass
    v4: VertexClass

    @classmethod
    def from_digits(cls, digits: str) -> "LocationCode":
        if len(digits) != 4 or any(d not in "012" for d in digits):
            raise ValueError(f"bad location code {digits!r}")
        return cls(*(VertexClass(int(d)) for d in digits))

    @property
    def digits(self) -> str:
        return f"{self.v1}{self.v2}{self.v3}{self.v4}"

    def __str__(self) -> str:
        return self.digits

    def __iter__(self):
        return iter((self.v1, self.v2, self.v3, self.v4))

    def rotated_left(self, k: int = 1) -> "LocationCode":
        """Code of the same rect rotated k*90deg counterclockwise."""
        d = self.digits
        k %= 4
        return LocationCode.from_digits(d[k:] + d[:k])

    def reflected_x(self) -> "LocationCode":
        """Code of the same rect reflected across the x axis."""
        return LocationCode(self.v2, self.v1, self.v4, self.v3)


class UnrealizableCodeError(Exception):
    """A location code that cannot correspond to real geometry reached the
    area dispatcher.  Never corrected silently; can only arise from
    tolerance-band edge effects (retry with eps_rel = 0) or API misuse.
    """

    def __init__(self, code: LocationCode, rect: CenteredRect, index=None,
                 reason: str = "code corresponds to no location"):
        self.code = code
        self.rect = rect
        self.index = index
        self.reason = reason
        where = f" at pixel {tuple(index)}" if index is not None else ""
        super().__init__(f"location code {code}{where}: {reason} (rect={rect})")


def to_centered(rect: GridRect, circle: Circle) -> CenteredRect:
    """Translate a pixel rect so the circle center becomes the origin."""
    return CenteredRect(rect.xl - circle.cx, rect.xr - circle.cx,
                        rect.yb - circle.cy, rect.yt - circle.cy)


def vertex_class(z: float, p: float, cfg: ClassifyConfig = ClassifyConfig()) -> VertexClass:
    """Classify a vertex from Z = x^2 + y^2 and P = R^2."""
    if abs(z - p) <= cfg.eps_rel * p:
        return VertexClass.ON_CIRCLE
    return VertexClass.OUTSIDE if z > p else VertexClass.INSIDE


def locate(rect: CenteredRect, radius: float,
           cfg: ClassifyConfig = ClassifyConfig()) -> LocationCode:
    """Location code of ``rect`` relative to the circle of given radius."""
    p = radius * radius
    classes = [vertex_class(x * x + y * y, p, cfg) for x, y in rect.vertices()]
    return LocationCode(*classes)


# Codes ruled out by the diagonal sum identity Z1 + Z3 = Z2 + Z4: for each,
# the (v1, v3) classes force a strict relation of Z1 + Z3 against 2P that the
# (v2, v4) classes contradict.  E.g. 1010: Z1 + Z3 = 2P but Z2 + Z4 > 2P.
UNREALIZABLE_CODES = frozenset(
    LocationCode.from_digits(d) for d in (
        "1010", "0101",                  # two on, two outside, diagonal
        "0102", "0201", "1020", "2010",  # one inside, one on, two outside
        "0202", "2020",                  # two inside, two outside, diagonal
        "0212", "1202", "2021", "2120",  # two inside, one on, one outside
    )
)


def realizable(code: LocationCode) -> bool:
    """False exactly for the twelve codes proven impossible by the sum
    identity; see UNREALIZABLE_CODES."""
    return code not in UNREALIZABLE_CODES
