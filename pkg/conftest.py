"""Shared fixtures and strategies for the test suite."""

import random
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from complexes import from_facets
from geometry import moment_curve
from tverberg import colorful_minimality_check
from words import is_colorful

# Facets 12, 14 and 234.
EXAMPLE_FACETS = [(1, 2), (1, 4), (2, 3, 4)]
# At d = 2 this word represents 124 and 234: positions 1 2 4 5 6 7 8 spell 1 2 4 1 2 4 1.
EXAMPLE_WORD = (1, 2, 1, 4, 1, 2, 4, 1, 3, 2, 4, 3, 2)
EXAMPLE_WORD_FACETS = [(1, 2, 4), (2, 3, 4)]
THREE_COLORFUL = (1, 2, 4, 3, 4, 2, 1, 3, 4, 2, 1, 3, 4)

MOMENT_BASES = [2, 4, 16, 2 ** 10, 2 ** 20]

# exact arithmetic on long words is slow enough to trip the default deadline
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive geometric checks (deselect with -m 'not slow')")


@pytest.fixture
def example_complex():
    return from_facets(EXAMPLE_FACETS)


@pytest.fixture(scope="session")
def colorful_moment_base():
    """Least tried base whose 7-point planar moment curve has only colorful
    minimal Tverberg partitions for r = 2, 3."""
    for base in MOMENT_BASES:
        if colorful_minimality_check(moment_curve(7, 2, base), 2, 3):
            return base
    pytest.fail("no moment-curve base up to 2^20 is colorful-minimal")


def brute_force_has_subword(W, sigma, d):
    sigma = set(sigma)
    length = (d + 1) * (len(sigma) - 1) + 1
    for positions in combinations(range(len(W)), length):
        sub = tuple(W[p] for p in positions)
        if set(sub) == sigma and is_colorful(sub, d):
            return True
    return False


@st.composite
def colorful_words(draw, min_letters=2, max_letters=4, max_d=3):
    """A random d-colorful word, with its d."""
    r = draw(st.integers(min_value=min_letters, max_value=max_letters))
    d = draw(st.integers(min_value=0, max_value=max_d))
    letters = list(range(1, r + 1))
    word = draw(st.permutations(letters))
    for _ in range(d):
        rest = [x for x in letters if x != word[-1]]
        word = word + draw(st.permutations(rest))
    return tuple(word), d


def small_words(max_letters=4, max_size=14):
    return st.lists(
        st.integers(min_value=1, max_value=max_letters), max_size=max_size
    ).map(tuple)


def random_colorful_word(rng: random.Random, r: int, d: int):
    """d-colorful word on 1..r from random block permutations."""
    letters = list(range(1, r + 1))
    word = rng.sample(letters, r)
    for _ in range(d):
        rest = [x for x in letters if x != word[-1]]
        word += rng.sample(rest, r - 1)
    return tuple(word)
