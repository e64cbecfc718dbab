import os
import random

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from zxblocks.angle import Angle
from zxblocks.generate import random_diagram, random_with_dims

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", parent=settings.get_profile("default"), max_examples=600)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

seeds = st.integers(min_value=0, max_value=2**32 - 1)

exact_angles = st.builds(
    Angle,
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
)


@st.composite
def diagrams(draw, max_wires=4, size=6):
    rng = random.Random(draw(seeds))
    return random_diagram(rng, max_wires=max_wires, size=size)


@st.composite
def diagrams_with_dims(draw, n, m, size=4, max_wires=4):
    rng = random.Random(draw(seeds))
    return random_with_dims(rng, n, m, size=size, max_wires=max_wires)


def close(a, b, tol=1e-12):
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and (a.size == 0 or float(np.max(np.abs(a - b))) <= tol)
