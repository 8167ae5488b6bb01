import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lyndonruns.words import Word

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def words(max_sigma=4, min_size=0, max_size=40):
    """Hypothesis strategy for Words over an alphabet of 1..max_sigma letters."""
    return st.integers(1, max_sigma).flatmap(
        lambda k: st.lists(st.integers(0, k - 1), min_size=min_size, max_size=max_size).map(
            lambda xs: Word(tuple(xs), k)))


def all_words(sigma, max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for s in itertools.product(range(sigma), repeat=n):
            yield Word(s, sigma)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda t: t[0]):
            terminalreporter.write_line(line[1])


@pytest.fixture
def W():
    return Word.parse
