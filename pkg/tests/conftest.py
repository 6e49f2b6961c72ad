import random

import hypothesis
import pytest
from hypothesis import strategies as st

from chainform.corpus import corpus, random_graded_poset

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def named_corpus():
    return corpus()


@pytest.fixture(scope="session")
def posets(named_corpus):
    return [P for _, P in named_corpus]


@st.composite
def graded_posets(draw, max_rank=4, max_width=3):
    seed = draw(st.integers(0, 2**32 - 1))
    rank = draw(st.integers(0, max_rank))
    return random_graded_poset(random.Random(seed), rank, max_width)
