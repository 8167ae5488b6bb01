"""Words over small integer alphabets, the two lexicographic orderings, and
elementary periodicity / Lyndon primitives.

Symbols are integers ``0..sigma-1``; text I/O maps ``'a' -> 0``, ``'b' -> 1``, ...
Positions are 0-based and intervals are inclusive on both ends.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import DomainError

MAX_SIGMA = 26


class Ordering(enum.Enum):
    FORWARD = "forward"
    REVERSE = "reverse"

    def key(self, symbols: Sequence[int]) -> tuple[int, ...]:
        """Tuple whose natural order is the lexicographic order under ``self``."""
        if self is Ordering.FORWARD:
            return tuple(symbols)
        return tuple(-c for c in symbols)

    def less(self, a: int, b: int) -> bool:
        return a < b if self is Ordering.FORWARD else a > b

    @property
    def opposite(self) -> Ordering:
        return Ordering.REVERSE if self is Ordering.FORWARD else Ordering.FORWARD


FORWARD = Ordering.FORWARD
REVERSE = Ordering.REVERSE


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if self.size < 1 or self.size > MAX_SIGMA:
            raise DomainError(f"alphabet size must be in 1..{MAX_SIGMA}, got {self.size}")


@dataclass(frozen=True)
class Interval:
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise DomainError(f"invalid interval [{self.start}..{self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def contains(self, other: Interval) -> bool:
        return self.start <= other.start and other.end <= self.end

    def __str__(self):
        return f"[{self.start}..{self.end}]"


@dataclass(frozen=True)
class Word:
    symbols: tuple[int, ...]
    sigma: int = MAX_SIGMA

    def __post_init__(self):
        if not 1 <= self.sigma <= MAX_SIGMA:
            raise DomainError(f"alphabet size must be in 1..{MAX_SIGMA}")
        for c in self.symbols:
            if not 0 <= c < self.sigma:
                raise DomainError(f"symbol {c} outside alphabet of size {self.sigma}")

    @classmethod
    def parse(cls, text: str, sigma: int = MAX_SIGMA) -> Word:
        text = text.strip()
        if any(not ("a" <= ch <= "z") for ch in text):
            raise DomainError(f"word must consist of letters a-z: {text!r}")
        return cls(tuple(ord(ch) - 97 for ch in text), sigma)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.sigma)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return "".join(chr(97 + c) for c in self.symbols)

    def factor(self, start: int, end: int) -> Word:
        """The factor ``w[start..end]`` (inclusive)."""
        if not 0 <= start <= end < len(self.symbols):
            raise DomainError(f"factor [{start}..{end}] outside word of length {len(self)}")
        return Word(self.symbols[start:end + 1], self.sigma)

    def suffix(self, start: int) -> Word:
        return Word(self.symbols[start:], self.sigma)

    def renamed(self, perm: Sequence[int]) -> Word:
        return Word(tuple(perm[c] for c in self.symbols), self.sigma)


def as_word(w) -> Word:
    """Accept a Word, a string over a-z, or a sequence of ints."""
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(tuple(w))


def _nonempty(w: Word, what: str = "word"):
    if len(w) == 0:
        raise DomainError(f"{what} must be non-empty")


# -- periods -----------------------------------------------------------------

def border_table(s: Sequence[int]) -> list[int]:
    """KMP failure table: ``b[m]`` is the longest proper border of ``s[:m]``."""
    n = len(s)
    b = [0] * (n + 1)
    b[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and s[k] != s[i]:
            k = b[k]
        k += 1
        b[i + 1] = k
    b[0] = 0
    return b


def period_of(s: Sequence[int]) -> int:
    return len(s) - border_table(s)[len(s)]


def has_period(s: Sequence[int], p: int) -> bool:
    return all(s[i] == s[i + p] for i in range(len(s) - p))


def smallest_period(w) -> int:
    w = as_word(w)
    _nonempty(w)
    return period_of(w.symbols)


def smallest_period_naive(w) -> int:
    w = as_word(w)
    _nonempty(w)
    s = w.symbols
    return next(p for p in range(1, len(s) + 1) if has_period(s, p))


def compare(a, b, ord: Ordering = FORWARD) -> Cmp:
    a, b = as_word(a), as_word(b)
    if a.sigma != b.sigma:
        raise DomainError(f"alphabet mismatch: {a.sigma} vs {b.sigma}")
    ka, kb = ord.key(a.symbols), ord.key(b.symbols)
    if ka < kb:
        return Cmp.LESS
    return Cmp.EQUAL if ka == kb else Cmp.GREATER


def _is_primitive(s: Sequence[int]) -> bool:
    n = len(s)
    p = period_of(s)
    return p == n or n % p != 0


def is_primitive(w) -> bool:
    w = as_word(w)
    _nonempty(w)
    return _is_primitive(w.symbols)


def is_lyndon(w, ord: Ordering = FORWARD) -> bool:
    """Lyndon test via conjugates: primitive and strictly below every other rotation."""
    w = as_word(w)
    _nonempty(w)
    s = w.symbols
    if not _is_primitive(s):
        return False
    k = ord.key(s)
    return all(k < k[r:] + k[:r] for r in range(1, len(k)))


def is_lyndon_by_suffixes(w, ord: Ordering = FORWARD) -> bool:
    w = as_word(w)
    _nonempty(w)
    k = ord.key(w.symbols)
    return all(k < k[r:] for r in range(1, len(k)))


def _is_border_free(s: Sequence[int]) -> bool:
    return border_table(s)[len(s)] == 0


def is_border_free(w) -> bool:
    w = as_word(w)
    _nonempty(w)
    return _is_border_free(w.symbols)


@lru_cache(maxsize=1 << 16)
def _min_rotation(k: tuple[int, ...]) -> int:
    return min(range(len(k)), key=lambda r: k[r:] + k[:r])


def lyndon_conjugate(w, ord: Ordering = FORWARD) -> int:
    """Rotation offset ``r`` such that ``w[r:] + w[:r]`` is Lyndon under ``ord``."""
    w = as_word(w)
    _nonempty(w)
    if not _is_primitive(w.symbols):
        raise DomainError(f"{w} is not primitive; its Lyndon conjugate is undefined")
    return _min_rotation(ord.key(w.symbols))


def _max_suffix(k: Sequence[int]) -> int:
    """Start of the lexicographically greatest suffix of ``k`` (Crochemore-Perrin)."""
    n = len(k)
    i, j, off, per = -1, 0, 1, 1
    while j + off < n:
        a, b = k[j + off], k[i + off]
        if a < b:
            j += off
            off = 1
            per = j - i
        elif a == b:
            if off != per:
                off += 1
            else:
                j += per
                off = 1
        else:
            i = j
            j = i + 1
            off = per = 1
    return i + 1


def greatest_proper_suffix(w, ord: Ordering = FORWARD) -> int:
    """Start of the greatest proper suffix of ``w`` under ``ord`` (always >= 1)."""
    w = as_word(w)
    if len(w) < 2:
        raise DomainError("greatest proper suffix needs a word of length >= 2")
    return 1 + _max_suffix(ord.key(w.symbols[1:]))


def greatest_proper_suffix_naive(w, ord: Ordering = FORWARD) -> int:
    w = as_word(w)
    if len(w) < 2:
        raise DomainError("greatest proper suffix needs a word of length >= 2")
    k = ord.key(w.symbols)
    return max(range(1, len(k)), key=lambda i: k[i:])


def occurrences(w, u) -> int:
    """``|w|_u``: number of possibly overlapping occurrences of ``u`` in ``w``."""
    w, u = as_word(w), as_word(u)
    if len(u) == 0:
        raise DomainError("pattern must be non-empty")
    s, t, m = w.symbols, u.symbols, len(u)
    return sum(1 for i in range(len(s) - m + 1) if s[i:i + m] == t)


def fine_wilf_holds(w, p: int, q: int) -> bool | None:
    """Weak periodicity lemma check.

    Returns None when the hypotheses fail (``w`` lacks period ``p`` or ``q``,
    or ``|w| < p + q``); otherwise whether ``gcd(p, q)`` is a period of ``w``.
    """
    w = as_word(w)
    if p < 1 or q < 1:
        raise DomainError("periods must be positive")
    s = w.symbols
    if len(s) < p + q or not has_period(s, p) or not has_period(s, q):
        return None
    return has_period(s, gcd(p, q))


def lyndon_factorization(w, ord: Ordering = FORWARD) -> list[Interval]:
    """Duval's algorithm; factors are returned as intervals of ``w``."""
    w = as_word(w)
    _nonempty(w)
    k = ord.key(w.symbols)
    n = len(k)
    out = []
    i = 0
    while i < n:
        j, m = i + 1, i
        while j < n and k[m] <= k[j]:
            m = i if k[m] < k[j] else m + 1
            j += 1
        step = j - m
        while i <= m:
            out.append(Interval(i, i + step - 1))
            i += step
    return out


def lyndon_prefix_ends(k: Sequence[int], i: int) -> list[int]:
    """All ``j >= i`` such that ``k[i..j]`` is Lyndon (``k`` already keyed by an ordering)."""
    n = len(k)
    ends = [i]
    m = i
    for j in range(i + 1, n):
        if k[m] < k[j]:
            ends.append(j)
            m = i
        elif k[m] == k[j]:
            m += 1
        else:
            break
    return ends
