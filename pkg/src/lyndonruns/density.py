"""Counting Lroots and Oroots inside position intervals.

An Lroot (Oroot) is *included* in an interval when its whole occurrence
interval lies inside it; the run itself may stick out.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError, InvariantViolation
from .runs import Run, enumerate_runs, lroot, oroot
from .words import (
    FORWARD,
    REVERSE,
    Interval,
    Ordering,
    Word,
    _min_rotation,
    as_word,
    lyndon_prefix_ends,
)


@dataclass(frozen=True)
class DensityReport:
    word: Word
    interval: Interval
    lroot_count: int
    ratio: Fraction

    @property
    def extremal_factor(self) -> Word:
        return self.word.factor(self.interval.start, self.interval.end)

    def as_dict(self) -> dict:
        return {
            "word": str(self.word),
            "start": self.interval.start,
            "end": self.interval.end,
            "count": self.lroot_count,
            "ratio": float(self.ratio),
            "factor": str(self.extremal_factor),
        }


class BoundCheck(NamedTuple):
    count: int
    bound: float
    holds: bool


class UnaryBoundCheck(NamedTuple):
    count: int
    long_blocks: int  # maximal unary blocks of length >= 2
    all_blocks: int
    holds_long: bool  # count <= long_blocks + 1
    holds_all: bool  # count <= all_blocks + 1


class Displacement(NamedTuple):
    interval: Interval
    run: Run
    case: int


def _check_interval(w: Word, iv: Interval):
    if iv.end >= len(w):
        raise DomainError(f"interval {iv} outside word of length {len(w)}")


def _check_binary(w: Word):
    if any(c > 1 for c in w.symbols):
        raise DomainError(f"{w} is not a binary word")


def lroot_intervals(w, runs=None) -> list[tuple[int, int]]:
    w = as_word(w)
    if runs is None:
        runs = enumerate_runs(w)
    s = w.symbols
    out = []
    for i, _, p in runs:
        a = i + _min_rotation(s[i:i + p])
        out.append((a, a + p - 1))
    return out


def count_lroots_in(w, iv: Interval, runs=None) -> int:
    w = as_word(w)
    _check_interval(w, iv)
    return sum(1 for a, b in lroot_intervals(w, runs) if iv.start <= a and b <= iv.end)


def tight_interval_counts(roots) -> list[tuple[int, int, int]]:
    """``(start, end, count)`` for every interval spanned by a root start and a root end.

    Any interval's count equals that of the hull of the roots it contains, so
    these are the only intervals that can maximize count relative to length.
    """
    out = []
    ends = []
    roots = sorted(roots, reverse=True)
    t = 0
    while t < len(roots):
        a = roots[t][0]
        while t < len(roots) and roots[t][0] == a:
            insort(ends, roots[t][1])
            t += 1
        prev = None
        for c, b in enumerate(ends, 1):
            if prev is not None and b != prev:
                out.append((a, prev, c - 1))
            prev = b
        out.append((a, prev, len(ends)))
    return out


def max_lroot_density(w, runs=None) -> DensityReport:
    """Interval with the highest Lroot count per position.

    Ties go to the larger count, then the earlier start.
    """
    w = as_word(w)
    if len(w) == 0:
        raise DomainError("word must be non-empty")
    best, best_iv = (0, 1), (0, 0)
    for a, b, c in tight_interval_counts(lroot_intervals(w, runs)):
        bc, bl = best
        ell = b - a + 1
        # ratio first (cross-multiplied), then larger count, then earlier start
        if c * bl > bc * ell or (c * bl == bc * ell and (c > bc or (c == bc and a < best_iv[0]))):
            best, best_iv = (c, ell), (a, b)
    return DensityReport(w, Interval(*best_iv), best[0], Fraction(best[0], best[1]))


def witness_word(k: int, check: bool = True) -> tuple[Word, Interval]:
    """``(ab)^k a (ab)^k b (ab)^k b`` with the interval covering ``a (ab)^k b``.

    With ``check`` the interval must hold exactly ``2(k+1)`` Lroots. This
    fails for k = 1: without a preceding ``abab`` there is no period-2 run
    and the count is 3.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    ab = (0, 1) * k
    w = Word(ab + (0,) + ab + (1,) + ab + (1,), 2)
    iv = Interval(2 * k, 4 * k + 1)
    if not check:
        return w, iv
    count = count_lroots_in(w, iv)
    if count != 2 * (k + 1):
        raise InvariantViolation(
            f"witness k={k} has {count} Lroots in {iv}, expected {2 * (k + 1)}",
            {"word": str(w), "k": k, "start": iv.start, "end": iv.end, "count": count},
        )
    return w, iv


def lyndon_intervals(w, ord: Ordering = FORWARD) -> list[tuple[int, int]]:
    """Every ``(i, j)`` whose factor ``w[i..j]`` is Lyndon under ``ord``."""
    k = ord.key(as_word(w).symbols)
    return [(i, j) for i in range(len(k)) for j in lyndon_prefix_ends(k, i)]


def lroot_context(w, iv: Interval, runs=None) -> Interval:
    """Shortest interval containing every run whose Lroot lies in ``iv``."""
    w = as_word(w)
    _check_interval(w, iv)
    if runs is None:
        runs = enumerate_runs(w)
    inside = [r for r in runs if iv.contains(lroot(w, r).interval)]
    if not inside:
        return iv
    start = min(iv.start, min(r.start for r in inside))
    end = max(iv.end, max(r.end for r in inside))
    if iv.start - start >= iv.length:
        raise InvariantViolation(
            f"left context {iv.start - start} not shorter than {iv.length}",
            {"word": str(w), "interval": [iv.start, iv.end]},
        )
    return Interval(start, end)


# -- Oroots on binary words -----------------------------------------------------

def letter_order(w: Word, oroot_start: int) -> Ordering:
    """Order attributed to a binary Oroot by its first letter: a -> Forward, b -> Reverse."""
    return FORWARD if w.symbols[oroot_start] == 0 else REVERSE


def _oroots(w: Word, runs):
    if runs is None:
        runs = enumerate_runs(w)
    return [oroot(w, r) for r in runs]


def count_oroots_same_order_in(w, iv: Interval, ord: Ordering, runs=None) -> int:
    w = as_word(w)
    _check_binary(w)
    _check_interval(w, iv)
    return sum(
        1
        for o in _oroots(w, runs)
        if iv.contains(o.interval) and letter_order(w, o.start) is ord
    )


def count_nonunary_oroots_in(w, iv: Interval, ord: Ordering, runs=None) -> BoundCheck:
    w = as_word(w)
    _check_binary(w)
    _check_interval(w, iv)
    count = sum(
        1
        for o in _oroots(w, runs)
        if o.run.period > 1 and iv.contains(o.interval) and letter_order(w, o.start) is ord
    )
    f = w.symbols[iv.start:iv.end + 1]
    ab = sum(1 for t in range(len(f) - 1) if f[t] == 0 and f[t + 1] == 1)
    ba = sum(1 for t in range(len(f) - 1) if f[t] == 1 and f[t + 1] == 0)
    bound = min(ab, ba)
    return BoundCheck(count, bound, count <= bound)


def unary_blocks(f) -> list[int]:
    """Lengths of the maximal unary blocks of ``f``."""
    out = []
    t = 0
    while t < len(f):
        u = t
        while u < len(f) and f[u] == f[t]:
            u += 1
        out.append(u - t)
        t = u
    return out


def count_unary_oroots_in(w, iv: Interval, runs=None) -> UnaryBoundCheck:
    w = as_word(w)
    _check_binary(w)
    _check_interval(w, iv)
    count = sum(1 for o in _oroots(w, runs) if o.run.period == 1 and iv.contains(o.interval))
    blocks = unary_blocks(w.symbols[iv.start:iv.end + 1])
    long_blocks = sum(1 for b in blocks if b >= 2)
    return UnaryBoundCheck(
        count, long_blocks, len(blocks), count <= long_blocks + 1, count <= len(blocks) + 1
    )


def check_lroot_oroot_displacement(w, runs=None) -> list[Displacement]:
    """Classify every (Lyndon interval, run) pair whose Lroot is inside the
    interval while its Oroot starts outside it.

    Case 1: the Lroot ends the interval and the Oroot starts right after it.
    Case 2: the Lroot starts the interval and the Oroot starts before it.
    Raises InvariantViolation for an unclassifiable pair or for two case-1
    runs on one interval.
    """
    w = as_word(w)
    if runs is None:
        runs = enumerate_runs(w)
    roots = [(r, lroot(w, r).interval, oroot(w, r).interval) for r in runs]
    out = []
    for i, j in lyndon_intervals(w, FORWARD):
        after = 0
        for r, L, O in roots:
            if L.start < i or L.end > j or i <= O.start <= j:
                continue
            if L.end == j and O.start == j + 1:
                case = 1
                after += 1
            elif L.start == i and O.start < i:
                case = 2
            else:
                raise InvariantViolation(
                    f"unclassified Lroot/Oroot displacement for run {tuple(r)} in [{i}..{j}]",
                    {"word": str(w), "interval": [i, j], "run": r.as_dict(),
                     "lroot": [L.start, L.end], "oroot": [O.start, O.end]},
                )
            out.append(Displacement(Interval(i, j), r, case))
        if after > 1:
            raise InvariantViolation(
                f"{after} runs with Oroot right after Lyndon interval [{i}..{j}]",
                {"word": str(w), "interval": [i, j]},
            )
    return out


def oroot_overlap_violations(w, runs=None) -> list[tuple[Run, Run]]:
    """Pairs of same-order Oroots that overlap without one containing the other."""
    w = as_word(w)
    occ = _oroots(w, runs)
    bad = []
    for x in range(len(occ)):
        a = occ[x]
        for y in range(x + 1, len(occ)):
            b = occ[y]
            if a.ordering is not b.ordering:
                continue
            A, B = a.interval, b.interval
            if A.end < B.start or B.end < A.start:
                continue
            if not (A.contains(B) or B.contains(A)):
                bad.append((a.run, b.run))
    return bad


def check_oroot_overlap(w, runs=None) -> bool:
    return not oroot_overlap_violations(w, runs)
