import random

import pytest
from hypothesis import strategies as st

from pixgrid.classify import CenteredRect


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def unit_rect_and_radius(min_ratio=2.0001, max_ratio=10.0):
    """Strategy: (CenteredRect of edge 1, radius) with R/size in the engine's
    working range and the rect placed anywhere the circle can reach."""
    def build(radius, fx, fy):
        span = radius + 1.0
        x1 = -span + 2.0 * span * fx
        y1 = -span + 2.0 * span * fy
        return CenteredRect(x1, x1 + 1.0, y1, y1 + 1.0), radius

    return st.builds(
        build,
        st.floats(min_value=min_ratio, max_value=max_ratio),
        st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
        st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
    )
