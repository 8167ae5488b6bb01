import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words, words
from lyndonruns import index
from lyndonruns.errors import DomainError
from lyndonruns.words import FORWARD, REVERSE, Cmp, Word, compare

P = Word.parse


@pytest.mark.parametrize("w,ord,sa", [
    ("abaab", FORWARD, [2, 3, 0, 4, 1]),
    ("aaa", FORWARD, [2, 1, 0]),
    ("ab", REVERSE, [1, 0]),
])
def test_suffix_array_examples(w, ord, sa):
    assert index.build(P(w), ord).sa == sa
    assert index.build(P(w), ord, direct_max=0).sa == sa


def test_lce_examples():
    idx = index.build(P("abaab"))
    assert idx.lce(0, 3) == 2
    assert idx.lce(2, 2) == 3
    assert index.build(P("aaaa")).lce(0, 2) == 2


def test_compare_suffixes_examples():
    assert index.build(P("abaab")).compare_suffixes(1, 4) is Cmp.GREATER
    assert index.build(P("abab")).compare_suffixes(0, 2) is Cmp.GREATER
    assert index.build(P("abab")).compare_suffixes(3, 3) is Cmp.EQUAL


def test_errors():
    with pytest.raises(DomainError):
        index.build(P(""))
    idx = index.build(P("ab"))
    with pytest.raises(DomainError):
        idx.lce(0, 2)
    with pytest.raises(DomainError):
        idx.compare_suffixes(-1, 0)


@pytest.mark.parametrize("sigma,n", [(2, 12), (3, 7)])
def test_exhaustive_against_naive(sigma, n):
    for w in all_words(sigma, n):
        for ord in (FORWARD, REVERSE):
            idx = index.build(w, ord, direct_max=0)
            assert idx.sa == index.suffix_array_naive(w, ord)
            for i in range(len(w)):
                for j in range(i, len(w)):
                    assert idx.lce(i, j) == idx.lce(j, i) == index.lce_naive(w, i, j)


def test_compare_suffixes_random():
    rng = random.Random(7)
    for _ in range(10_000 // 50):
        sigma = rng.randint(1, 4)
        w = Word(tuple(rng.randrange(sigma) for _ in range(rng.randint(1, 500))), sigma)
        ord = rng.choice([FORWARD, REVERSE])
        idx = index.build(w, ord)
        for _ in range(50):
            i, j = rng.randrange(len(w)), rng.randrange(len(w))
            assert idx.compare_suffixes(i, j) is compare(w.suffix(i), w.suffix(j), ord)


@given(words(min_size=1, max_size=150), st.sampled_from([FORWARD, REVERSE]))
def test_index_invariants(w, ord):
    idx = index.build(w, ord)
    assert sorted(idx.sa) == list(range(len(w)))
    for a, b in zip(idx.sa, idx.sa[1:]):
        assert compare(w.suffix(a), w.suffix(b), ord) is Cmp.LESS
    assert all(idx.rank[p] == r for r, p in enumerate(idx.sa))
