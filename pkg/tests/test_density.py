from fractions import Fraction

import pytest
from hypothesis import given

from conftest import all_words, words
from lyndonruns.density import (
    check_lroot_oroot_displacement,
    check_oroot_overlap,
    count_lroots_in,
    count_nonunary_oroots_in,
    count_oroots_same_order_in,
    count_unary_oroots_in,
    lroot_context,
    lroot_intervals,
    max_lroot_density,
    tight_interval_counts,
    unary_blocks,
    witness_word,
)
from lyndonruns.errors import DomainError, InvariantViolation
from lyndonruns.words import FORWARD, REVERSE, Interval, Word

P = Word.parse
DENSE = "ababaababbababb"


def brute_counts(w):
    roots = lroot_intervals(w)
    n = len(w)
    return {(i, j): sum(1 for a, b in roots if i <= a and b <= j)
            for i in range(n) for j in range(i, n)}


def test_dense_interval():
    assert count_lroots_in(P(DENSE), Interval(4, 9)) == 6


def test_aab_needs_context():
    # "aab" on its own only has the run "aa"; three Lroots need neighbours
    assert count_lroots_in(P("aab"), Interval(0, 2)) == 1
    w = P("abaababbababb")
    assert max(c for (i, j), c in brute_counts(w).items() if j - i == 2) == 3


def test_empty_position():
    assert count_lroots_in(P("ab"), Interval(0, 0)) == 0
    with pytest.raises(DomainError):
        count_lroots_in(P("ab"), Interval(0, 2))


@pytest.mark.parametrize("k,w,iv", [(1, "abaabbabb", (2, 5)), (2, DENSE, (4, 9))])
def test_witness_shape(k, w, iv):
    word, interval = witness_word(k, check=False)
    assert str(word) == w and (interval.start, interval.end) == iv


def test_witness_k1_falls_short():
    w, iv = witness_word(1, check=False)
    assert count_lroots_in(w, iv) == 3
    with pytest.raises(InvariantViolation) as e:
        witness_word(1)
    assert e.value.payload["count"] == 3


def test_witness_large():
    for k in range(2, 11):
        w, iv = witness_word(k)
        assert iv.length == 2 * (k + 1)
        assert count_lroots_in(w, iv) == 2 * (k + 1)
    with pytest.raises(DomainError):
        witness_word(0)


def test_max_density():
    rep = max_lroot_density(P(DENSE))
    assert rep.ratio == 1 and rep.lroot_count == 6 and rep.interval.length == 6
    assert str(rep.extremal_factor) == "aababb"
    assert max_lroot_density(P("ab")).lroot_count == 0
    w, _ = witness_word(3)
    rep = max_lroot_density(w)
    assert (rep.interval.start, rep.interval.end, rep.ratio) == (6, 13, Fraction(1))


def test_tight_counts_match_brute():
    for w in all_words(2, 9):
        brute = brute_counts(w)
        for a, b, c in tight_interval_counts(lroot_intervals(w)):
            assert brute[(a, b)] == c
        best = max((Fraction(c, j - i + 1) for (i, j), c in brute.items()), default=0)
        if len(w):
            assert max_lroot_density(w).ratio == best


def test_same_order_oroots():
    assert count_oroots_same_order_in(P("ab"), Interval(0, 1), FORWARD) == 0
    w = P("abababab")
    for ord in (FORWARD, REVERSE):
        assert count_oroots_same_order_in(w, Interval(0, 7), ord) < 3.5
    with pytest.raises(DomainError):
        count_oroots_same_order_in(P("abc"), Interval(0, 2), FORWARD)


def test_nonunary_bound():
    w = P("aababb")
    chk = count_nonunary_oroots_in(w, Interval(0, 5), FORWARD)
    assert chk.bound == 1
    chk = count_nonunary_oroots_in(P("aaaa"), Interval(0, 3), FORWARD)
    assert (chk.count, chk.bound) == (0, 0)


def test_unary_blocks():
    assert unary_blocks((0, 0, 1, 0, 0)) == [2, 1, 2]
    chk = count_unary_oroots_in(P("aabaa"), Interval(0, 4))
    assert chk.long_blocks == 2 and chk.holds_long
    chk = count_unary_oroots_in(P("ab"), Interval(0, 1))
    assert chk.count == 0


def test_displacement_and_overlap():
    assert check_lroot_oroot_displacement(P("ab")) == []
    assert check_oroot_overlap(P("ab")) and check_oroot_overlap(P("aa"))
    w, _ = witness_word(2)
    cases = check_lroot_oroot_displacement(w)
    assert cases and {d.case for d in cases} <= {1, 2}


def test_lemmas_exhaustive_small():
    for w in all_words(2, 11):
        check_lroot_oroot_displacement(w)
        assert check_oroot_overlap(w), w


@given(words(max_sigma=3, min_size=1, max_size=25))
def test_density_properties(w):
    rep = max_lroot_density(w)
    assert rep.lroot_count <= rep.interval.length
    assert count_lroots_in(w, rep.interval) == rep.lroot_count
    for i in range(0, len(w), 3):
        iv = Interval(i, min(len(w) - 1, i + 4))
        ctx = lroot_context(w, iv)
        assert ctx.contains(iv) and iv.start - ctx.start < iv.length


def test_saturating_interval_outside_extremal_family():
    from lyndonruns.harness import Analysis, check_conjecture_extremal

    w = P("ababbabaababbababb")
    assert count_lroots_in(w, Interval(7, 14)) == 8
    assert max_lroot_density(w).ratio == 1
    out = check_conjecture_extremal(Analysis(w.symbols, 2))
    assert not out.ok and out.witness["factor"] == "aababbab"
