"""Runs (maximal repetitions), their Lroots / Oroots, and the greatest-suffix
position assignment that injects runs into positions ``1..n-1``."""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from typing import NamedTuple

from . import index
from .errors import InvariantViolation, UsageError
from .words import (
    FORWARD,
    REVERSE,
    Interval,
    Ordering,
    Word,
    _is_border_free,
    _max_suffix,
    _min_rotation,
    as_word,
    border_table,
)

NAIVE_CAP = 512


class Run(NamedTuple):
    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def interval(self) -> Interval:
        return Interval(self.start, self.end)

    def as_dict(self) -> dict:
        return {"start": self.start, "end": self.end, "period": self.period}


class RootKind(enum.Enum):
    LROOT = "lroot"
    OROOT = "oroot"


class RootOccurrence(NamedTuple):
    run: Run
    kind: RootKind
    interval: Interval
    ordering: Ordering

    @property
    def start(self) -> int:
        return self.interval.start

    @property
    def end(self) -> int:
        return self.interval.end


class Assignment(NamedTuple):
    run: Run
    k: int
    ordering: Ordering


def is_cubic(r: Run) -> bool:
    return r.end - r.start + 1 >= 3 * r.period


def cubic_count(runs) -> int:
    return sum(1 for r in runs if r.end - r.start + 1 >= 3 * r.period)


# -- enumeration ---------------------------------------------------------------

def _lyndon_array(rank: list[int]) -> list[int]:
    """Length of the longest Lyndon prefix of each suffix: distance to the next smaller suffix."""
    n = len(rank)
    out = [0] * n
    stack = []
    for j in range(n):
        rj = rank[j]
        while stack and rank[stack[-1]] > rj:
            i = stack.pop()
            out[i] = j - i
        stack.append(j)
    for i in stack:
        out[i] = n - i
    return out


def enumerate_runs(w) -> list[Run]:
    """All runs of ``w`` sorted by (start, end).

    Every run has a Lyndon root (under one of the two orderings) which is the
    longest Lyndon factor starting at its position, so it suffices to extend
    each entry of the two Lyndon arrays left and right by LCE queries.
    """
    w = as_word(w)
    s = w.symbols
    n = len(s)
    if n < 2:
        return []
    fwd = index.build(w, FORWARD)
    rev = index.build(w, REVERSE)
    back = index.build(Word(s[::-1], w.sigma), FORWARD)
    found = {}
    for idx in (fwd, rev):
        for i, p in enumerate(_lyndon_array(idx.rank)):
            if i + p >= n:
                continue
            right = fwd._lce(i, i + p)
            left = back._lce(n - i, n - i - p) if i > 0 else 0
            if left + right >= p:
                found[(i - left, i + p + right - 1)] = p
    runs = sorted(Run(a, b, p) for (a, b), p in found.items())
    if len(runs) >= n:
        raise InvariantViolation(
            f"{len(runs)} runs in a word of length {n}",
            {"word": str(w), "runs": [r.as_dict() for r in runs]},
        )
    return runs


def enumerate_runs_naive(w, cap: int = NAIVE_CAP) -> list[Run]:
    """Reference enumeration: test every interval for periodicity and maximality."""
    w = as_word(w)
    s = w.symbols
    n = len(s)
    if n > cap:
        raise UsageError(f"naive run enumeration capped at length {cap}, got {n}")
    runs = []
    for i in range(n):
        borders = border_table(s[i:])
        for j in range(i + 1, n):
            m = j - i + 1
            p = m - borders[m]
            if 2 * p > m:
                continue
            if i > 0 and s[i - 1] == s[i - 1 + p]:
                continue
            if j + 1 < n and s[j + 1] == s[j + 1 - p]:
                continue
            runs.append(Run(i, j, p))
    runs.sort()
    return runs


@lru_cache(maxsize=None)
def _stretch_pattern(p: int):
    return re.compile(b"\x01{%d,}" % p)


def enumerate_runs_scan(w) -> list[Run]:
    """Period-by-period scan for maximal stretches with ``w[t] == w[t+p]``.

    Quadratic, but with the inner loop in C; this is the workhorse for
    exhaustive sweeps over short words.
    """
    return _runs_scan(as_word(w).symbols)


def _runs_scan(s) -> list[Run]:
    n = len(s)
    found = {}
    for p in range(1, n // 2 + 1):
        eq = bytes(map(int.__eq__, s, s[p:]))
        for m in _stretch_pattern(p).finditer(eq):
            key = (m.start(), m.end() - 1 + p)
            if key not in found:
                found[key] = p
    return sorted(Run(a, b, p) for (a, b), p in found.items())


# -- position assignment ------------------------------------------------------

def _branch(s, r: Run) -> Ordering:
    j, p = r.end, r.period
    if j + 1 < len(s) and s[j + 1] > s[j - p + 1]:
        return FORWARD
    return REVERSE


def assign_position(w, r: Run) -> Assignment:
    """Start of the greatest proper suffix of the run factor, under the ordering
    selected by the letter following the run."""
    w = as_word(w)
    s = w.symbols
    ord = _branch(s, r)
    i, j, p = r
    k = i + 1 + _max_suffix(ord.key(s[i + 1:j + 1]))
    if j - k + 1 < p or not _is_border_free(s[k:k + p]):
        raise InvariantViolation(
            f"assignment {k} of run {tuple(r)} lacks a border-free full period",
            {"word": str(w), "run": r.as_dict(), "k": k},
        )
    return Assignment(r, k, ord)


def assign_all(w, runs=None) -> list[Assignment]:
    w = as_word(w)
    if runs is None:
        runs = enumerate_runs(w)
    out = [assign_position(w, r) for r in runs]
    seen = {}
    for a in out:
        if a.k <= 0 or a.k in seen:
            other = seen.get(a.k)
            raise InvariantViolation(
                f"position {a.k} assigned to two runs" if other else f"non-positive position {a.k}",
                {
                    "word": str(w),
                    "k": a.k,
                    "runs": [a.run.as_dict()] + ([other.run.as_dict()] if other else []),
                },
            )
        seen[a.k] = a
    return out


# -- roots ----------------------------------------------------------------------

def lroot(w, r: Run) -> RootOccurrence:
    """First occurrence, inside the run, of the Forward-Lyndon conjugate of its root."""
    w = as_word(w)
    i, _, p = r
    start = i + _min_rotation(tuple(w.symbols[i:i + p]))
    return RootOccurrence(r, RootKind.LROOT, Interval(start, start + p - 1), FORWARD)


def oroot_case(w, r: Run) -> int:
    """1 when the run ends the word or is followed by a smaller letter, else 2."""
    s = as_word(w).symbols
    j, p = r.end, r.period
    if j == len(s) - 1 or s[j + 1] < s[j + 1 - p]:
        return 1
    if s[j + 1] == s[j + 1 - p]:
        raise InvariantViolation(f"run {tuple(r)} is not right-maximal", {"run": r.as_dict()})
    return 2


def oroot(w, r: Run) -> RootOccurrence:
    w = as_word(w)
    s = w.symbols
    i, j, p = r
    if oroot_case(w, r) == 1:
        off = _min_rotation(tuple(s[i:i + p]))
        start = i + (off if off else p)
        ord = FORWARD
    else:
        start = i + 1 + _max_suffix(s[i + 1:j + 1])
        ord = REVERSE
    return RootOccurrence(r, RootKind.OROOT, Interval(start, start + p - 1), ord)


def lyndon_root_occurrences(w, r: Run, ord: Ordering = FORWARD) -> list[int]:
    """Start positions of every occurrence of the run's Lyndon root inside the run (direct scan)."""
    s = as_word(w).symbols
    i, j, p = r
    root = s[i:i + p]
    key = ord.key(root)
    rots = [key[t:] + key[:t] for t in range(p)]
    best = min(rots)
    t = rots.index(best)
    target = root[t:] + root[:t]
    return [a for a in range(i, j - p + 2) if s[a:a + p] == target]
