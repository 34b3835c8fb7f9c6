import random

import pytest
from hypothesis import settings, strategies as st

from spiralkit import GradedSpace
from spiralkit.sampling import random_element

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def graded_spaces(draw, m_max=4, n_max=5, form="sl"):
    m = draw(st.integers(2, m_max))
    dims = draw(st.lists(st.integers(0, 2), min_size=m, max_size=m)
                .filter(lambda d: 0 < sum(d) <= n_max))
    return GradedSpace(m, tuple(dims), form)


@st.composite
def homogeneous(draw, space, degree=None):
    """A random element of the given space, drawn through a seeded rng."""
    deg = draw(st.integers(0, space.m - 1)) if degree is None else degree
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_element(space, deg, random.Random(seed))


@pytest.fixture
def rng():
    return random.Random(20261016)
