import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import unit_rect_and_radius
from pixgrid.classify import CenteredRect
from pixgrid.oracle import OracleConfig, OracleConvergenceError, rect_circle_area


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        OracleConfig(max_depth=10)


def test_pixel_fully_inside():
    assert rect_circle_area(CenteredRect(-0.5, 0.5, -0.5, 0.5), 3.0) == \
        pytest.approx(1.0, abs=1e-10)


def test_disjoint_is_exactly_zero():
    assert rect_circle_area(CenteredRect(10, 11, 10, 11), 1.0) == 0.0


def test_full_disc_inside_rect():
    # not reachable in production (R > 2*size) but valid for the oracle
    assert rect_circle_area(CenteredRect(-2, 2, -2, 2), 1.0) == \
        pytest.approx(math.pi, abs=1e-9)


def test_half_disc():
    assert rect_circle_area(CenteredRect(0, 3, -3, 3), 1.0) == \
        pytest.approx(math.pi / 2, abs=1e-10)


@settings(max_examples=150, deadline=None)
@given(unit_rect_and_radius())
def test_additivity_under_vertical_split(case):
    rect, radius = case
    cfg = OracleConfig(abs_tol=1e-10)
    mid = 0.5 * (rect.x1 + rect.x3)
    whole = rect_circle_area(rect, radius, cfg)
    left = rect_circle_area(CenteredRect(rect.x1, mid, rect.y1, rect.y3), radius, cfg)
    right = rect_circle_area(CenteredRect(mid, rect.x3, rect.y1, rect.y3), radius, cfg)
    assert left + right == pytest.approx(whole, abs=2e-10)


@settings(max_examples=150, deadline=None)
@given(unit_rect_and_radius())
def test_reflection_symmetry(case):
    rect, radius = case
    cfg = OracleConfig(abs_tol=1e-11)
    base = rect_circle_area(rect, radius, cfg)
    flip_x = rect_circle_area(CenteredRect(rect.x1, rect.x3, -rect.y3, -rect.y1),
                              radius, cfg)
    flip_y = rect_circle_area(CenteredRect(-rect.x3, -rect.x1, rect.y1, rect.y3),
                              radius, cfg)
    assert flip_x == pytest.approx(base, abs=1e-11)
    assert flip_y == pytest.approx(base, abs=1e-11)


FIXTURES = [
    (CenteredRect(-0.5, 0.5, -0.5, 0.5), 3.0),
    (CenteredRect(2.2, 3.2, -0.4, 0.6), 3.0),
    (CenteredRect(2.9, 3.9, -0.5, 0.5), 3.0),      # straddles the rim
    (CenteredRect(-3.05, -2.05, -0.2, 0.8), 3.0),
    (CenteredRect(1.4, 2.4, 1.4, 2.4), 2.5),
    (CenteredRect(0.1, 1.1, 2.2, 3.2), 2.5),
    (CenteredRect(-0.45, 0.55, 2.4, 3.4), 2.5),
    (CenteredRect(1.9, 2.9, -1.3, -0.3), 2.1),
    (CenteredRect(-2.0, 2.0, -2.0, 2.0), 1.5),     # disc inside rect
    (CenteredRect(4.9, 5.9, -3.1, -2.1), 6.0),
]


def _midpoint_reference(rect, radius, n=10_000_000):
    lo = max(rect.x1, -radius)
    hi = min(rect.x3, radius)
    if hi <= lo:
        return 0.0
    total = 0.0
    chunk = 1_000_000
    h = (hi - lo) / n
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        x = lo + (np.arange(start, stop) + 0.5) * h
        half = np.sqrt(np.maximum(radius * radius - x * x, 0.0))
        w = np.minimum(rect.y3, half) - np.maximum(rect.y1, -half)
        total += float(np.maximum(w, 0.0).sum()) * h
    return total


def test_convergence_order_against_midpoint_reference():
    # halving abs_tol never increases the deviation from a 1e7-point
    # midpoint reference; the reference itself carries ~1e-10 discretization
    # error at the rim kinks, so movements below that are noise
    ref_noise = 5e-11
    for rect, radius in FIXTURES:
        ref = _midpoint_reference(rect, radius)
        prev = None
        for tol in (1e-6, 5e-7, 2.5e-7, 1.25e-7):
            dev = abs(rect_circle_area(rect, radius, OracleConfig(abs_tol=tol)) - ref)
            if prev is not None:
                assert dev <= prev + ref_noise
            prev = dev
        assert prev <= 1e-7  # and the final answer is close to the reference


def test_max_depth_exhaustion_raises():
    bad = OracleConfig(abs_tol=1e-30, max_depth=20)
    with pytest.raises(OracleConvergenceError) as exc:
        rect_circle_area(CenteredRect(-0.45, 0.55, 2.4, 3.4), 2.5, bad)
    a, b = exc.value.panel
    assert a < b


def test_default_config_handles_rim_panels():
    # a rect straddling the disc's extreme abscissa at the default tolerance;
    # the strip there is the full cap beyond x = 2.9
    val = rect_circle_area(CenteredRect(2.9, 3.9, -1.0, 1.0), 3.0)
    cap = (9.0 * math.acos(2.9 / 3.0) - 2.9 * math.sqrt(9.0 - 2.9 ** 2))
    assert val == pytest.approx(cap, abs=1e-11)
