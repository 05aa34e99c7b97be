"""Quadrature oracle for circle/rectangle intersection areas.

Verification-only: integrates the strip width of the disc clipped to the
rectangle by adaptive Simpson quadrature, splitting the interval at the
abscissae where the circle crosses the rectangle's horizontal edges so each
panel is smooth.  Panels abutting the disc rim (|x| -> R) are integrated in
the angle variable x = R*sin(theta), which removes the square-root kink the
rim would otherwise put at the panel edge.  Never consulted by the
production path.
"""

import math
from dataclasses import dataclass

from .classify import CenteredRect


@dataclass(frozen=True)
class OracleConfig:
    abs_tol: float = 1e-12
    max_depth: int = 60

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_depth < 20:
            raise ValueError(f"max_depth must be >= 20, got {self.max_depth}")


class OracleConvergenceError(Exception):
    def __init__(self, a: float, b: float, residual: float):
        self.panel = (a, b)
        self.residual = residual
        super().__init__(
            f"adaptive Simpson failed to converge on panel [{a}, {b}] "
            f"(residual {residual:.3e})")


def _simpson(fa, fm, fb, h):
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adapt(f, a, fa, m, fm, b, fb, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    # Richardson: S2 + delta/15 is the extrapolated value.
    if abs(delta) <= 15.0 * tol or (b - a) <= 4e-16 * (abs(a) + abs(b) + 1.0):
        return left + right + delta / 15.0
    if depth <= 0:
        raise OracleConvergenceError(a, b, delta)
    return (_adapt(f, a, fa, lm, flm, m, fm, left, tol / 2.0, depth - 1)
            + _adapt(f, m, fm, rm, frm, b, fb, right, tol / 2.0, depth - 1))


def _integrate(f, a, b, tol, depth):
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    return _adapt(f, a, fa, m, fm, b, fb, _simpson(fa, fm, fb, b - a), tol, depth)


def rect_circle_area(rect: CenteredRect, radius: float,
                     cfg: OracleConfig = OracleConfig()) -> float:
    """Area of ``rect`` (circle-centered frame) inside the circle, within
    cfg.abs_tol of the true value."""
    x1, x3, y1, y3 = rect.x1, rect.x3, rect.y1, rect.y3
    r2 = radius * radius

    # Nearest point of the rect to the center at distance >= R: exactly empty.
    nx = min(max(0.0, x1), x3)
    ny = min(max(0.0, y1), y3)
    if nx * nx + ny * ny >= r2:
        return 0.0

    lo = max(x1, -radius)
    hi = min(x3, radius)
    if hi <= lo:
        return 0.0

    def strip(x):
        half = math.sqrt(max(r2 - x * x, 0.0))
        return max(0.0, min(y3, half) - max(y1, -half))

    # Kinks of the strip width: where the circle meets the lines y = y1, y3.
    cuts = [lo, hi]
    for yb in (y1, y3):
        if abs(yb) < radius:
            bx = math.sqrt(r2 - yb * yb)
            for c in (-bx, bx):
                if lo < c < hi:
                    cuts.append(c)
    cuts.sort()

    rim = 1e-9 * radius  # panels this close to |x| = R get the angle map
    span = hi - lo
    total = 0.0
    for a, b in zip(cuts, cuts[1:]):
        if b - a <= 4e-16 * radius:
            continue
        tol = cfg.abs_tol * (b - a) / span
        if a <= -radius + rim or b >= radius - rim:
            ta = math.asin(max(-1.0, min(1.0, a / radius)))
            tb = math.asin(max(-1.0, min(1.0, b / radius)))
            total += _integrate(
                lambda t: strip(radius * math.sin(t)) * radius * math.cos(t),
                ta, tb, tol, cfg.max_depth)
        else:
            total += _integrate(strip, a, b, tol, cfg.max_depth)
    return total
