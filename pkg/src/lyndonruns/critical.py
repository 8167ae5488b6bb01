"""Local periods, critical positions, and the border-free square-conjugate lemma."""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError, InvariantViolation
from .words import (
    FORWARD,
    REVERSE,
    Word,
    _is_border_free,
    as_word,
    greatest_proper_suffix,
    period_of,
)


class LocalPeriodReport(NamedTuple):
    cut: int
    local_period: int
    critical: bool

    def as_dict(self) -> dict:
        return {"cut": self.cut, "local_period": self.local_period, "critical": self.critical}


def _local_period(s, cut: int) -> int:
    n = len(s)
    for L in range(1, n + 1):
        # z of length L must agree with w wherever both sides of the cut are defined
        lo, hi = max(0, L - cut), min(L, n - cut)
        if all(s[cut + t] == s[cut + t - L] for t in range(lo, hi)):
            return L
    return max(n, 1)


def local_period(w, cut: int) -> int:
    w = as_word(w)
    if not 0 <= cut <= len(w):
        raise DomainError(f"cut {cut} outside 0..{len(w)}")
    return _local_period(w.symbols, cut)


def local_period_naive(w, cut: int) -> int:
    """Definition scan: build the candidate z of each length and test the four
    prefix/suffix conditions literally."""
    w = as_word(w)
    if not 0 <= cut <= len(w):
        raise DomainError(f"cut {cut} outside 0..{len(w)}")
    u, v = list(w.symbols[:cut]), list(w.symbols[cut:])
    for L in range(1, len(w) + 2):
        z = [None] * L
        ok = True
        for t in range(min(L, len(v))):
            z[t] = v[t]
        for t in range(min(L, len(u))):
            c = u[len(u) - 1 - t]
            pos = L - 1 - t
            if z[pos] is not None and z[pos] != c:
                ok = False
                break
            z[pos] = c
        if not ok:
            continue
        z = [0 if c is None else c for c in z]
        suffix_ok = z[L - len(u):] == u if len(u) <= L else u[len(u) - L:] == z
        prefix_ok = z[:len(v)] == v if len(v) <= L else v[:L] == z
        if suffix_ok and prefix_ok:
            return L
    raise AssertionError("vu always satisfies the conditions")


def local_periods(w) -> list[LocalPeriodReport]:
    w = as_word(w)
    s = w.symbols
    if not s:
        raise DomainError("word must be non-empty")
    p = period_of(s)
    out = []
    for c in range(len(s) + 1):
        lp = _local_period(s, c)
        out.append(LocalPeriodReport(c, lp, lp == p))
    return out


def critical_positions(w, include_ends: bool = False) -> set[int]:
    w = as_word(w)
    s = w.symbols
    if len(s) < 2:
        raise DomainError("critical positions need a word of length >= 2")
    p = period_of(s)
    cuts = range(0, len(s) + 1) if include_ends else range(1, len(s))
    crit = {c for c in cuts if _local_period(s, c) == p}
    if not any(_local_period(s, c) == p for c in range(1, p + 1)):
        raise InvariantViolation(
            f"no critical cut among 1..{p}", {"word": str(w), "period": p}
        )
    return crit


def critical_from_orderings(w) -> int:
    """The later of the two greatest-proper-suffix starts (Forward vs Reverse)."""
    w = as_word(w)
    if len(w) < 2:
        raise DomainError("need a word of length >= 2")
    cut = max(greatest_proper_suffix(w, FORWARD), greatest_proper_suffix(w, REVERSE))
    s = w.symbols
    if _local_period(s, cut) != period_of(s):
        raise InvariantViolation(
            f"cut {cut} from the two orderings is not critical", {"word": str(w), "cut": cut}
        )
    return cut


def check_square_lemma(v, u) -> set[int]:
    """Which of the cuts ``|v|`` and ``|vuv|`` on ``(vu)^2`` are critical.

    Requires ``uv`` border-free; raises InvariantViolation if neither is.
    """
    v, u = as_word(v), as_word(u)
    uv = u.symbols + v.symbols
    if not uv or not _is_border_free(uv):
        raise DomainError(f"uv = {Word(uv)} must be non-empty and border-free")
    x = v.symbols + u.symbols
    sq = x + x
    period = len(x)
    cuts = (len(v), 2 * len(v) + len(u))
    held = {c for c in cuts if _local_period(sq, c) == period}
    if not held:
        raise InvariantViolation(
            "neither |v| nor |vuv| is critical",
            {"v": str(v), "u": str(u), "square": str(Word(sq)), "cuts": list(cuts)},
        )
    return held
