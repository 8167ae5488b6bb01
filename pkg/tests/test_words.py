import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words, words
from lyndonruns.errors import DomainError
from lyndonruns.words import (
    FORWARD,
    REVERSE,
    Cmp,
    Interval,
    Word,
    compare,
    fine_wilf_holds,
    greatest_proper_suffix,
    greatest_proper_suffix_naive,
    is_border_free,
    is_lyndon,
    is_lyndon_by_suffixes,
    is_primitive,
    lyndon_conjugate,
    lyndon_factorization,
    occurrences,
    smallest_period,
    smallest_period_naive,
)

P = Word.parse


def test_parse_roundtrip():
    w = P("abca")
    assert w.symbols == (0, 1, 2, 0)
    assert str(w) == "abca"
    with pytest.raises(DomainError):
        P("aB")


def test_interval_rejects_reversed():
    with pytest.raises(DomainError):
        Interval(3, 2)
    assert str(Interval(4, 9)) == "[4..9]"


@pytest.mark.parametrize("w,p", [("abab", 2), ("aaaa", 1), ("abaab", 3), ("abaabb", 6), ("a", 1)])
def test_smallest_period(w, p):
    assert smallest_period(P(w)) == p


def test_smallest_period_empty():
    with pytest.raises(DomainError):
        smallest_period(P(""))


@pytest.mark.parametrize("a,b,ord,want", [
    ("ab", "b", FORWARD, Cmp.LESS),
    ("ab", "b", REVERSE, Cmp.GREATER),
    ("ab", "aba", FORWARD, Cmp.LESS),
    ("aba", "aba", REVERSE, Cmp.EQUAL),
])
def test_compare(a, b, ord, want):
    assert compare(P(a), P(b), ord) is want


def test_compare_sigma_mismatch():
    with pytest.raises(DomainError):
        compare(Word((0,), 2), Word((0,), 3))


@pytest.mark.parametrize("w,want", [("abab", False), ("aab", True), ("a", True)])
def test_is_primitive(w, want):
    assert is_primitive(P(w)) is want


@pytest.mark.parametrize("w,ord,want", [
    ("aab", FORWARD, True), ("a", FORWARD, True), ("aba", FORWARD, False),
    ("ba", REVERSE, True), ("ab", REVERSE, False),
])
def test_is_lyndon(w, ord, want):
    assert is_lyndon(P(w), ord) is want


@pytest.mark.parametrize("w,want", [("ab", True), ("aba", False), ("aab", True), ("abab", False)])
def test_border_free(w, want):
    assert is_border_free(P(w)) is want


@pytest.mark.parametrize("w,off", [("ba", 1), ("bab", 1), ("aab", 0)])
def test_lyndon_conjugate(w, off):
    assert lyndon_conjugate(P(w), FORWARD) == off


def test_lyndon_conjugate_rejects_powers():
    with pytest.raises(DomainError):
        lyndon_conjugate(P("abab"))


@pytest.mark.parametrize("w,ord,k", [("babab", FORWARD, 2), ("aaa", FORWARD, 1), ("ab", REVERSE, 1),
                                     ("abaaba", FORWARD, 1), ("abaaba", REVERSE, 2)])
def test_greatest_proper_suffix(w, ord, k):
    assert greatest_proper_suffix(P(w), ord) == k


@pytest.mark.parametrize("w,u,c", [("aaa", "aa", 2), ("ababab", "ab", 3), ("abaababb", "ba", 2)])
def test_occurrences(w, u, c):
    assert occurrences(P(w), P(u)) == c


def test_fine_wilf():
    # 5 and 8 are not both periods of this word
    assert fine_wilf_holds(P("abaababaaba"), 5, 8) is None
    assert fine_wilf_holds(P("aaaa"), 2, 3) is None
    assert fine_wilf_holds(P("aaaaa"), 2, 3) is True
    assert fine_wilf_holds(P("abababab"), 2, 4) is True


@pytest.mark.parametrize("w,parts", [
    ("abab", ["ab", "ab"]), ("bbaa", ["b", "b", "a", "a"]), ("aababb", ["aababb"]),
])
def test_lyndon_factorization(w, parts):
    ivs = lyndon_factorization(P(w))
    assert [w[iv.start:iv.end + 1] for iv in ivs] == parts


@pytest.mark.parametrize("sigma,n", [(2, 12), (3, 8)])
def test_lyndon_definitions_agree(sigma, n):
    for w in all_words(sigma, n):
        for ord in (FORWARD, REVERSE):
            assert is_lyndon(w, ord) == is_lyndon_by_suffixes(w, ord), w


def test_lyndon_words_are_border_free():
    for w in all_words(2, 14):
        if is_lyndon(w):
            assert is_border_free(w), w


def test_period_oracles_agree():
    for w in all_words(2, 14):
        assert smallest_period(w) == smallest_period_naive(w), w


@given(words(min_size=2, max_size=200), st.sampled_from([FORWARD, REVERSE]))
def test_greatest_suffix_matches_naive(w, ord):
    k = greatest_proper_suffix(w, ord)
    assert k == greatest_proper_suffix_naive(w, ord)
    for j in range(1, len(w)):
        if j != k:
            assert compare(w.suffix(k), w.suffix(j), ord) is Cmp.GREATER


@given(words(min_size=1, max_size=60), st.sampled_from([FORWARD, REVERSE]))
def test_factorization_properties(w, ord):
    ivs = lyndon_factorization(w, ord)
    assert ivs[0].start == 0 and ivs[-1].end == len(w) - 1
    for a, b in zip(ivs, ivs[1:]):
        assert a.end + 1 == b.start
    facs = [w.factor(iv.start, iv.end) for iv in ivs]
    assert all(is_lyndon(f, ord) for f in facs)
    for a, b in zip(facs, facs[1:]):
        assert compare(a, b, ord) is not Cmp.LESS


@given(words(min_size=1, max_size=30))
def test_renaming_preserves_period(w):
    perm = list(range(w.sigma))[::-1]
    assert smallest_period(w.renamed(perm)) == smallest_period(w)

