"""Suffix array, inverse ranks and LCE queries (LCP array + sparse-table RMQ)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .words import FORWARD, Cmp, Ordering, as_word, Word

# Below this length the direct sort of keyed suffixes beats prefix doubling.
DIRECT_SORT_MAX = 64


def suffix_array(k: tuple[int, ...], direct_max: int = DIRECT_SORT_MAX) -> list[int]:
    """Suffix array of an already-keyed sequence (prefix doubling, O(n log^2 n))."""
    n = len(k)
    if n <= direct_max:
        return sorted(range(n), key=lambda i: k[i:])
    lookup = {c: r for r, c in enumerate(sorted(set(k)))}
    rank = [lookup[c] for c in k]
    sa = list(range(n))
    h = 1
    while True:
        # -1 for "past the end" makes a proper prefix sort first
        key = [(rank[i], rank[i + h] if i + h < n else -1) for i in range(n)]
        sa.sort(key=key.__getitem__)
        new = [0] * n
        for t in range(1, n):
            new[sa[t]] = new[sa[t - 1]] + (key[sa[t]] != key[sa[t - 1]])
        rank = new
        if rank[sa[-1]] == n - 1:
            return sa
        h *= 2


def lcp_kasai(s, sa: list[int], rank: list[int]) -> list[int]:
    """``lcp[t]`` = LCP of suffixes ``sa[t-1]`` and ``sa[t]``; ``lcp[0] = 0``."""
    n = len(s)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def sparse_table(a: list[int]) -> list[list[int]]:
    table = [a]
    span = 1
    while 2 * span <= len(a):
        prev = table[-1]
        table.append([min(prev[i], prev[i + span]) for i in range(len(a) - 2 * span + 1)])
        span *= 2
    return table


@dataclass(frozen=True)
class SuffixIndex:
    word: Word
    ordering: Ordering
    sa: list[int] = field(repr=False)
    rank: list[int] = field(repr=False)
    lcp: list[int] = field(repr=False)
    _rmq: list[list[int]] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.word)

    def _check(self, i: int):
        if not 0 <= i < self.n:
            raise DomainError(f"position {i} outside word of length {self.n}")

    def lce(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        return self._lce(i, j)

    def _lce(self, i: int, j: int) -> int:
        if i == j:
            return self.n - i
        lo, hi = self.rank[i], self.rank[j]
        if lo > hi:
            lo, hi = hi, lo
        lo += 1
        level = (hi - lo + 1).bit_length() - 1
        row = self._rmq[level]
        return min(row[lo], row[hi - (1 << level) + 1])

    def compare_suffixes(self, i: int, j: int) -> Cmp:
        self._check(i)
        self._check(j)
        if i == j:
            return Cmp.EQUAL
        return Cmp.LESS if self.rank[i] < self.rank[j] else Cmp.GREATER


def build(w, ord: Ordering = FORWARD, direct_max: int = DIRECT_SORT_MAX) -> SuffixIndex:
    w = as_word(w)
    if len(w) == 0:
        raise DomainError("cannot index the empty word")
    s = w.symbols
    sa = suffix_array(ord.key(s), direct_max)
    rank = [0] * len(s)
    for r, i in enumerate(sa):
        rank[i] = r
    lcp = lcp_kasai(s, sa, rank)
    return SuffixIndex(w, ord, sa, rank, lcp, sparse_table(lcp))


def lce_naive(w, i: int, j: int) -> int:
    s = as_word(w).symbols
    h = 0
    while i + h < len(s) and j + h < len(s) and s[i + h] == s[j + h]:
        h += 1
    return h


def suffix_array_naive(w, ord: Ordering = FORWARD) -> list[int]:
    w = as_word(w)
    return sorted(range(len(w)), key=lambda i: ord.key(w.symbols[i:]))
