import random

import pytest
from hypothesis import strategies as st

from schubert_toric.admissibility import classify
from schubert_toric.cosets import CosetTuple
from schubert_toric.weyl import Permutation


@st.composite
def permutations(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    values = draw(st.permutations(range(1, n + 2)))
    return Permutation(tuple(values), n)


@st.composite
def coset_tuples(draw, n=None, level=None, max_n=4):
    n = n if n is not None else draw(st.integers(1, max_n))
    level = level if level is not None else draw(st.integers(1, n))
    entries = draw(st.lists(st.integers(0, n), min_size=level, max_size=level, unique=True))
    return CosetTuple(level, tuple(sorted(entries)), n)


def P(text, n=None):
    """Shorthand for tests: one-line "3,1,2" or word "s2*s1" with n."""
    from schubert_toric.weyl import parse_permutation

    return parse_permutation(text, n)


def T(*entries, n):
    return CosetTuple(len(entries), tuple(entries), n)


@pytest.fixture(scope="session")
def covered():
    return {n: classify(n).covered for n in (1, 2, 3, 4)}


@pytest.fixture
def rng():
    return random.Random(20240613)
