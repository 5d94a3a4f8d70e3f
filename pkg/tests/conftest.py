import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from latjoin.plfunc import PLFunction
from latjoin.suites import SuiteConfig, random_join_element

DATA_FILE = "data/poincare.facets"


@st.composite
def rational_plfunctions(draw, max_interior=4, value_range=8):
    """PL functions with small rational breakpoints and integer values."""
    k = draw(st.integers(min_value=0, max_value=max_interior))
    interior = draw(
        st.sets(
            st.builds(
                Fraction,
                st.integers(min_value=1, max_value=63),
                st.integers(min_value=2, max_value=64),
            ).filter(lambda f: 0 < f < 1),
            min_size=k,
            max_size=k,
        )
    )
    bps = [Fraction(0)] + sorted(interior) + [Fraction(1)]
    vals = draw(
        st.lists(
            st.integers(min_value=-value_range, max_value=value_range),
            min_size=len(bps),
            max_size=len(bps),
        )
    )
    return PLFunction(tuple(bps), tuple(Fraction(v) for v in vals))


@st.composite
def rational_points(draw, denominator_max=97):
    q = draw(st.integers(min_value=1, max_value=denominator_max))
    p = draw(st.integers(min_value=0, max_value=q))
    return Fraction(p, q)


@pytest.fixture
def small_cfg():
    return SuiteConfig(seed=7, instance_count=12, m_max=3, n_max=3, breakpoint_max=3)


@pytest.fixture
def rng():
    return random.Random(20240817)


def make_join(rng, cfg=None, m=None, n=None):
    cfg = cfg or SuiteConfig(seed=0, instance_count=1, m_max=3, n_max=3, breakpoint_max=3)
    return random_join_element(rng, cfg, m=m, n=n)
