"""Fixtures realizing every row of the case-dispatch table.

Each canonical configuration was constructed so on-circle vertices sit on
the circle exactly in binary floating point (coordinates with exact squares,
e.g. 1.5^2 + 2.0^2 = 2.5^2), making the on-band fire deterministically.
Rotated/reflected rows are produced by exact coordinate transforms of the
canonical rect, so every one of the 64 rows is exercised with its own code.
"""

import math
from dataclasses import dataclass

from pixgrid.classify import CenteredRect


@dataclass(frozen=True)
class DispatchRow:
    row: int
    code: str
    label: str
    rect: CenteredRect
    radius: float
    size: float
    expect_special: bool = False


def rot_ccw(r: CenteredRect) -> CenteredRect:
    return CenteredRect(-r.y3, -r.y1, r.x1, r.x3)


def reflect_x(r: CenteredRect) -> CenteredRect:
    return CenteredRect(r.x1, r.x3, -r.y3, -r.y1)


def transformed(r: CenteredRect, reflect: bool, k: int) -> CenteredRect:
    if reflect:
        r = reflect_x(r)
    for _ in range(k):
        r = rot_ccw(r)
    return r


def dispatch_rows() -> list[DispatchRow]:
    rows: list[DispatchRow] = []

    def add(row, code, label, rect, radius, size, special=False):
        rows.append(DispatchRow(row, code, label, rect, radius, size, special))

    # Rows 1-4: all vertices outside, one side line within R (segment).
    # Canonical: square above the center, bottom side cuts the top cap.
    out0 = CenteredRect(-0.5, 0.5, 2.46, 3.46)
    for row, code, k in ((1, "0000", 0), (2, "0000", 3), (3, "0000", 2), (4, "0000", 1)):
        add(row, code, f"side-{k}", transformed(out0, False, k), 2.5, 1.0)

    # Rows 5-8: same with one vertex exactly on the circle
    # (0.9^2 + 4.0^2 = 4.1^2).
    on0 = CenteredRect(-0.9, 1.0, 4.0, 5.9)
    for row, code, k in ((5, "1000", 0), (6, "0100", 3), (7, "0010", 2), (8, "0001", 1)):
        add(row, code, f"side-{k}", transformed(on0, False, k), 4.1, 1.9)

    # Rows 9-12: one vertex inside, three outside.
    in0 = CenteredRect(1.5, 2.5, 1.6, 2.6)
    for row, code, k in ((9, "2000", 0), (10, "0200", 3), (11, "0020", 2), (12, "0002", 1)):
        add(row, code, "corner", transformed(in0, False, k), 2.5, 1.0)

    # Rows 13-16: two adjacent vertices on the circle (chord = size).
    x_on = math.sqrt(6.0)  # x_on^2 + 0.5^2 = 2.5^2
    edge0 = CenteredRect(x_on, x_on + 1.0, -0.5, 0.5)
    for row, code, k in ((13, "1100", 0), (14, "0110", 3), (15, "0011", 2), (16, "1001", 1)):
        add(row, code, "edge", transformed(edge0, False, k), 2.5, 1.0)

    # Rows 17-24: one inside, one on, two outside (1.5^2 + 2.0^2 = 2.5^2).
    mix0 = CenteredRect(1.5, 2.5, 1.0, 2.0)
    for row, code, refl, k in ((17, "2100", False, 0), (18, "1200", True, 0),
                               (19, "0210", False, 3), (20, "0120", True, 3),
                               (21, "0021", False, 2), (22, "0012", True, 2),
                               (23, "1002", False, 1), (24, "2001", True, 1)):
        add(row, code, "corner+on", transformed(mix0, refl, k), 2.5, 1.0)

    # Rows 25-28: two adjacent inside, two outside, ordinary trapezoid.
    two0 = CenteredRect(1.6, 2.6, -0.5, 0.5)
    for row, code, k in ((25, "2200", 0), (26, "0220", 3), (27, "0022", 2), (28, "2002", 1)):
        add(row, code, "trapezoid", transformed(two0, False, k), 2.5, 1.0)

    # Rows 29-32: one inside, two on (diagonal chord size*sqrt(2)).
    diag0 = CenteredRect(1.5, 2.0, 1.5, 2.0)
    for row, code, k in ((29, "2101", 0), (30, "1210", 3), (31, "0121", 2), (32, "1012", 1)):
        add(row, code, "diagonal", transformed(diag0, False, k), 2.5, 0.5)

    # Rows 33-56: two inside, one on, one outside; three sub-cases each.
    # Canonical 2210 seeds: blue (on-vertex ordinate positive, extra strip),
    # degenerate (on-vertex on the axis), red (plain trapezoid).
    blue0 = CenteredRect(2.1, 4.0, -1.0, 0.9)     # v3 = (4.0, 0.9) on, R = 4.1
    deg0 = CenteredRect(1.5, 2.5, -1.0, 0.0)      # v3 = (2.5, 0.0) on
    red0 = CenteredRect(1.4, 2.4, -1.7, -0.7)     # v3 = (2.4, -0.7) on
    # (refl, k) -> code of the transformed canonical 2210 rect
    t11 = {("2210"): (False, 0), ("2102"): (False, 1), ("1022"): (False, 2),
           ("0221"): (False, 3), ("2201"): (True, 0), ("2012"): (True, 1),
           ("0122"): (True, 2), ("1220"): (True, 3)}
    order = ["0122", "0221", "1022", "1220", "2012", "2102", "2201", "2210"]
    row = 33
    for code in order:
        refl, k = t11[code]
        for label, seed, radius, size in (("blue", blue0, 4.1, 1.9),
                                          ("degenerate", deg0, 2.5, 1.0),
                                          ("red", red0, 2.5, 1.0)):
            add(row, code, label, transformed(seed, refl, k), radius, size)
            row += 1

    # Rows 57-60: three inside, one outside.
    three0 = CenteredRect(1.2, 2.2, -1.2, -0.2)
    for row, code, k in ((57, "2202", 1), (58, "2220", 0), (59, "0222", 3), (60, "2022", 2)):
        add(row, code, "pentagon", transformed(three0, False, k), 2.5, 1.0)

    # Rows 61-64: four-intersection special case (circle pokes through the
    # far edge of a two-inside pixel).
    spec0 = CenteredRect(1.46, 2.46, -0.5, 0.5)
    for row, code, k in ((61, "2200", 0), (62, "2002", 1), (63, "0022", 2), (64, "0220", 3)):
        add(row, code, "four-intersections", transformed(spec0, False, k),
            2.5, 1.0, special=True)

    rows.sort(key=lambda t: t.row)
    assert [t.row for t in rows] == list(range(1, 65))
    return rows
