"""Exhaustive word-space sweeps running every registered check.

Work is split into fixed (length, prefix) blocks; each block is evaluated
independently and the partial reports are folded together with an
associative, commutative merge, so the result does not depend on the number
of worker processes.
"""

from __future__ import annotations

import itertools
import json
import math
import multiprocessing
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Iterator

from . import critical, density, index, runs as runs_mod
from .errors import InvariantViolation, UsageError
from .runs import cubic_count, enumerate_runs, enumerate_runs_naive, enumerate_runs_scan
from .words import (
    FORWARD,
    REVERSE,
    Word,
    _is_border_free,
    _min_rotation,
    is_lyndon,
    lyndon_prefix_ends,
    period_of,
)

THEOREM = "theorem"
CONJECTURE = "conjecture"

MAX_WORDS = 50_000_000
CHUNK_TARGET = 4096
EXAMPLES_KEPT = 10


# -- word spaces ----------------------------------------------------------------

def _rg_words(prefix: tuple[int, ...], n: int, sigma: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth words of length ``n`` extending ``prefix``."""
    top = max(prefix, default=-1)
    stack = [(prefix, top)]
    while stack:
        w, top = stack.pop()
        if len(w) == n:
            yield w
            continue
        for c in range(min(top + 1, sigma - 1), -1, -1):
            stack.append((w + (c,), max(top, c)))


def is_canonical(s) -> bool:
    top = -1
    for c in s:
        if c > top + 1:
            return False
        top = max(top, c)
    return True


def count_words(sigma: int, n: int, canonicalize: bool) -> int:
    if not canonicalize:
        return sigma ** n
    # Stirling numbers of the second kind, restricted to <= sigma blocks
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 1)
        for k, v in enumerate(row):
            nxt[k] += v * k
            nxt[k + 1] += v
        row = nxt
    return sum(row[1:sigma + 1]) if n else 1


def enumerate_words(sigma: int, length: int, canonicalize: bool = False,
                    prefix: tuple[int, ...] = ()) -> Iterator[Word]:
    if sigma < 1 or length < 1:
        raise UsageError("alphabet size and length must be positive")
    if count_words(sigma, length, canonicalize) > MAX_WORDS:
        raise UsageError(f"{sigma}^{length} words exceed the safety cap of {MAX_WORDS}")
    for s in _raw_words(sigma, length, canonicalize, prefix):
        yield Word(s, sigma)


def _raw_words(sigma, length, canonicalize, prefix=()):
    if canonicalize:
        if not is_canonical(prefix):
            return iter(())
        return _rg_words(tuple(prefix), length, sigma)
    return (prefix + t for t in itertools.product(range(sigma), repeat=length - len(prefix)))


def _prefix_length(sigma: int, n: int) -> int:
    if sigma == 1:
        return 0
    return max(0, n - int(math.log(CHUNK_TARGET, sigma)))


def work_units(sigma: int, min_len: int, max_len: int, canonicalize: bool):
    """Deterministic (length, prefix) blocks covering the word space."""
    units = []
    for n in range(min_len, max_len + 1):
        m = _prefix_length(sigma, n)
        for pre in itertools.product(range(sigma), repeat=m):
            if canonicalize and not is_canonical(pre):
                continue
            units.append((n, pre))
    return units


# -- per-word analysis -------------------------------------------------------------

class Analysis:
    """Lazily computed structures shared by all checks on one word."""

    def __init__(self, s: tuple[int, ...], sigma: int):
        self.s = s
        self.n = len(s)
        self.sigma = sigma

    @cached_property
    def word(self) -> Word:
        return Word(self.s, self.sigma)

    @cached_property
    def text(self) -> str:
        return "".join(chr(97 + c) for c in self.s)

    @cached_property
    def runs(self):
        return runs_mod._runs_scan(self.s)

    @cached_property
    def lroots(self) -> list[tuple[int, int]]:
        s = self.s
        out = []
        for i, _, p in self.runs:
            a = i + _min_rotation(s[i:i + p])
            out.append((a, a + p - 1))
        return out

    @cached_property
    def oroots(self):
        return [runs_mod.oroot(self.word, r) for r in self.runs]

    @cached_property
    def binary(self) -> bool:
        return all(c <= 1 for c in self.s)

    @cached_property
    def tight(self):
        return density.tight_interval_counts(self.lroots)

    @cached_property
    def lyndon_intervals(self):
        s = self.s
        return [(i, j) for i in range(self.n) for j in lyndon_prefix_ends(s, i)]

    def lroots_in(self, i: int, j: int) -> int:
        return sum(1 for a, b in self.lroots if i <= a and b <= j)


@dataclass
class Outcome:
    ok: bool = True
    witness: dict | None = None
    # name -> (comparable value, payload or zero-argument callable building it)
    stats: dict = field(default_factory=dict)


SKIP = None


@dataclass(frozen=True)
class Check:
    name: str
    klass: str
    claim: str
    fn: Callable[[Analysis], Outcome | None]
    binary_only: bool = False


def _ratio_stat(num: int, den: int, payload):
    # float compare is exact enough to order ratios of small integers; the
    # exact fraction travels in the payload
    return (num / den, lambda: {"ratio": f"{num}/{den}", **payload})


def check_runs_lt_n(a: Analysis) -> Outcome:
    r = len(a.runs)
    out = Outcome(r < a.n, stats={"max_runs_ratio": _ratio_stat(r, a.n, {"runs": r, "n": a.n})})
    if not out.ok:
        out.witness = {"runs": r}
    return out


def check_runs_lt_n_minus_cubic(a: Analysis) -> Outcome:
    r, c = len(a.runs), cubic_count(a.runs)
    out = Outcome(r < a.n - c, stats={"max_runs_plus_cubic": (r + c, {"runs": r, "cubic": c})})
    if not out.ok:
        out.witness = {"runs": r, "cubic": c}
    return out


def check_cubic_lt_half(a: Analysis) -> Outcome:
    c = cubic_count(a.runs)
    out = Outcome(2 * c < a.n, stats={"max_cubic_ratio": _ratio_stat(c, a.n, {"cubic": c})})
    if not out.ok:
        out.witness = {"cubic": c}
    return out


def check_assign_distinct(a: Analysis) -> Outcome:
    try:
        runs_mod.assign_all(a.word, a.runs)
    except InvariantViolation as e:
        return Outcome(False, {"error": str(e), **e.payload})
    return Outcome()


def check_oroot_distinct(a: Analysis) -> Outcome:
    seen = {}
    for o in a.oroots:
        if o.start in seen:
            return Outcome(False, {"start": o.start, "runs": [o.run.as_dict(), seen[o.start].as_dict()]})
        seen[o.start] = o.run
    return Outcome()


def check_root_remarks(a: Analysis) -> Outcome:
    """Position/shape facts about Lroots, Oroots and assigned suffixes."""
    s = a.s
    w = a.word
    for r, (li, lj), o in zip(a.runs, a.lroots, a.oroots):
        i, j, p = r
        bad = None
        if not (i <= li < i + p and lj - li + 1 == p and lj <= j):
            bad = "lroot must start within the first p positions of the run"
        elif not (i < o.start <= i + p and o.end <= j and o.end - o.start + 1 == p):
            bad = "oroot must start within the first p+1 positions, never at the run start"
        elif lj + 1 <= j and s[lj + 1] != s[li]:
            bad = "first lroot occurrence must be followed by its first letter"
        elif is_lyndon(Word(s[o.start:o.end + 1], a.sigma)) and not (
            s[o.start:o.end + 1] == s[li:lj + 1]
            and (o.start == li or (i == li and li + p == o.start))
        ):
            bad = "a Lyndon oroot must coincide with the lroot or follow it by one period"
        else:
            occ = runs_mod.lyndon_root_occurrences(w, r)
            if occ[0] != li or any(y - x != p for x, y in zip(occ, occ[1:])):
                bad = "Lyndon-root occurrences must be adjacent and start at the lroot"
            else:
                asg = runs_mod.assign_position(w, r)
                fac = Word(s[asg.k:asg.k + p], a.sigma)
                if not is_lyndon(fac, asg.ordering.opposite):
                    bad = "assigned period factor must be Lyndon for the opposite ordering"
        if bad:
            return Outcome(False, {"run": r.as_dict(), "reason": bad})
    return Outcome()


def check_square_lemma(a: Analysis) -> Outcome:
    x = a.s
    for cut in range(len(x)):
        v, u = x[:cut], x[cut:]
        if not _is_border_free(u + v):
            continue
        try:
            critical.check_square_lemma(Word(v, a.sigma), Word(u, a.sigma))
        except InvariantViolation as e:
            return Outcome(False, {"split": cut, **e.payload})
    return Outcome()


def check_critical_factorization(a: Analysis) -> Outcome:
    if a.n < 2:
        return SKIP
    s = a.s
    p = period_of(s)
    lps = [critical._local_period(s, c) for c in range(a.n + 1)]
    if max(lps) > p:
        return Outcome(False, {"reason": "local period exceeds period", "local_periods": lps})
    if p not in lps[1:p + 1]:
        return Outcome(False, {"reason": "no critical cut in 1..p", "local_periods": lps})
    try:
        critical.critical_from_orderings(a.word)
    except InvariantViolation as e:
        return Outcome(False, {"reason": str(e)})
    return Outcome()


def check_conjecture_density(a: Analysis) -> Outcome:
    best = None  # (count, length, start)
    for i, j, c in a.tight:
        ell = j - i + 1
        if c > ell:
            return Outcome(False, {"start": i, "end": j, "count": c, "factor": a.text[i:j + 1]})
        if best is None or c * best[1] > best[0] * ell or (
                c * best[1] == best[0] * ell and c > best[0]):
            best = (c, ell, i)
    if best is None:
        return Outcome()
    c, ell, i = best
    return Outcome(stats={"max_lroot_density": ((c / ell, c), lambda: {
        "ratio": f"{c}/{ell}", "start": i, "end": i + ell - 1, "count": c,
        "factor": a.text[i:i + ell]})})


def _extremal_shape(f: tuple[int, ...]) -> bool:
    ell = len(f)
    return ell % 2 == 0 and f == (0,) + (0, 1) * ((ell - 2) // 2) + (1,)


def check_conjecture_extremal(a: Analysis) -> Outcome:
    s = a.s
    for i, j, c in a.tight:
        ell = j - i + 1
        if c == ell and ell >= 4 and not _extremal_shape(s[i:j + 1]):
            return Outcome(False, {"start": i, "end": j, "count": c, "factor": a.text[i:j + 1]})
    stats = {}
    limits = {1: 1, 2: 1, 3: 3}
    for ell in (1, 2, 3):
        top = None
        for i in range(a.n - ell + 1):
            c = a.lroots_in(i, i + ell - 1)
            if top is None or c > top[0]:
                top = (c, i)
        if top is None:
            continue
        c, i = top
        if c > limits[ell]:
            return Outcome(False, {"start": i, "length": ell, "count": c})
        stats[f"max_count_len{ell}"] = (c, {"start": i, "length": ell})
    return Outcome(stats=stats)


def check_prop_three_halves(a: Analysis) -> Outcome:
    for i, j in a.lyndon_intervals:
        c = a.lroots_in(i, j)
        if 2 * c > 3 * (j - i + 1):
            return Outcome(False, {"start": i, "end": j, "count": c})
    return Outcome()


def _oroot_order(a: Analysis, o) -> int:
    return a.s[o.start]  # 0 -> Forward, 1 -> Reverse


def check_prop_same_order(a: Analysis) -> Outcome:
    """At most (l-1)/2 Oroots of one order inside any interval of length l."""
    items = [(o.start, o.end, _oroot_order(a, o)) for o in a.oroots]
    best = None
    for i in range(a.n):
        for j in range(i, a.n):
            ell = j - i + 1
            for order in (0, 1):
                c = sum(1 for x, y, t in items if t == order and i <= x and y <= j)
                if 2 * c > ell - 1:
                    return Outcome(False, {"start": i, "end": j, "count": c,
                                           "order": "forward" if order == 0 else "reverse",
                                           "factor": a.text[i:j + 1]})
                if c and (best is None or c * best[1] > best[0] * ell):
                    best = (c, ell, i)
    if best is None:
        return Outcome()
    c, ell, i = best
    return Outcome(stats={"max_same_order_ratio": _ratio_stat(
        c, ell, {"start": i, "end": i + ell - 1, "count": c})})


def check_cor_nonunary(a: Analysis) -> Outcome:
    s = a.s
    items = [(o.start, o.end, _oroot_order(a, o)) for o in a.oroots if o.run.period > 1]
    ab = [0] * (a.n + 1)
    ba = [0] * (a.n + 1)
    for t in range(a.n - 1):
        ab[t + 1] = ab[t] + (s[t] == 0 and s[t + 1] == 1)
        ba[t + 1] = ba[t] + (s[t] == 1 and s[t + 1] == 0)
    for i in range(a.n):
        for j in range(i, a.n):
            bound = min(ab[j] - ab[i], ba[j] - ba[i])
            for order in (0, 1):
                c = sum(1 for x, y, t in items if t == order and i <= x and y <= j)
                if c > bound:
                    return Outcome(False, {"start": i, "end": j, "count": c, "bound": bound,
                                           "order": "forward" if order == 0 else "reverse",
                                           "factor": a.text[i:j + 1]})
    return Outcome()


def _unary_check(a: Analysis, long_only: bool) -> Outcome:
    items = [(o.start, o.end) for o in a.oroots if o.run.period == 1]
    s = a.s
    for i in range(a.n):
        for j in range(i, a.n):
            blocks = density.unary_blocks(s[i:j + 1])
            bound = 1 + sum(1 for b in blocks if b >= 2 or not long_only)
            c = sum(1 for x, y in items if i <= x and y <= j)
            if c > bound:
                return Outcome(False, {"start": i, "end": j, "count": c, "bound": bound,
                                       "factor": a.text[i:j + 1]})
    return Outcome()


def check_cor_unary_long_blocks(a: Analysis) -> Outcome:
    return _unary_check(a, True)


def check_cor_unary_all_blocks(a: Analysis) -> Outcome:
    return _unary_check(a, False)


def check_lemma_displacement(a: Analysis) -> Outcome:
    try:
        density.check_lroot_oroot_displacement(a.word, a.runs)
    except InvariantViolation as e:
        return Outcome(False, {"error": str(e), **e.payload})
    return Outcome()


def check_lemma_overlaps(a: Analysis) -> Outcome:
    bad = density.oroot_overlap_violations(a.word, a.runs)
    if bad:
        x, y = bad[0]
        return Outcome(False, {"runs": [x.as_dict(), y.as_dict()]})
    return Outcome()


def check_remark_lyndon_intervals(a: Analysis) -> Outcome:
    """The best Lroot density is attained on an interval whose factor is Lyndon."""
    if not a.lroots:
        return Outcome()
    best = max(Fraction(c, j - i + 1) for i, j, c in a.tight)
    lyn = max(Fraction(a.lroots_in(i, j), j - i + 1) for i, j in a.lyndon_intervals)
    if lyn < best:
        return Outcome(False, {"best": str(best), "best_lyndon": str(lyn)})
    return Outcome()


REGISTRY: dict[str, Check] = {c.name: c for c in [
    Check("runs-lt-n", THEOREM, "fewer runs than length", check_runs_lt_n),
    Check("assign-distinct", THEOREM, "greatest-suffix positions are distinct and positive",
          check_assign_distinct),
    Check("runs-lt-n-minus-cubic", THEOREM, "runs < n - cubic runs", check_runs_lt_n_minus_cubic),
    Check("cubic-lt-half", THEOREM, "cubic runs < n/2", check_cubic_lt_half),
    Check("oroot-distinct", THEOREM, "no two Oroots share a start", check_oroot_distinct),
    Check("root-remarks", THEOREM, "Lroot/Oroot placement and link properties", check_root_remarks),
    Check("square-lemma", THEOREM, "|v| or |vuv| critical on (vu)^2 with uv border-free",
          check_square_lemma),
    Check("critical-factorization", THEOREM,
          "critical cut within one period; ordering-derived cut is critical",
          check_critical_factorization),
    Check("conj-lroot-density", CONJECTURE, "at most l Lroots in an interval of length l",
          check_conjecture_density),
    Check("conj-extremal-form", CONJECTURE, "saturating intervals have factor a(ab)^m b",
          check_conjecture_extremal),
    Check("prop-three-halves", THEOREM, "at most 3l/2 Lroots in a Lyndon interval",
          check_prop_three_halves),
    Check("prop-same-order-oroots", THEOREM, "at most (l-1)/2 same-order Oroots in an interval",
          check_prop_same_order, binary_only=True),
    Check("cor-nonunary-oroots", THEOREM, "same-order non-unary Oroots <= min(|f|_ab, |f|_ba)",
          check_cor_nonunary, binary_only=True),
    Check("cor-unary-oroots", THEOREM, "unary Oroots <= 1 + maximal blocks of length >= 2",
          check_cor_unary_long_blocks, binary_only=True),
    Check("cor-unary-oroots-all-blocks", THEOREM, "unary Oroots <= 1 + maximal blocks",
          check_cor_unary_all_blocks, binary_only=True),
    Check("lemma-lroot-oroot-displacement", THEOREM,
          "displaced Oroots follow or precede the Lyndon interval; at most one follows",
          check_lemma_displacement),
    Check("lemma-oroot-overlap", THEOREM, "overlapping same-order Oroots are nested",
          check_lemma_overlaps),
    Check("remark-lyndon-intervals", THEOREM, "best density attained on a Lyndon interval",
          check_remark_lyndon_intervals),
]}


def resolve_checks(names) -> list[str]:
    if isinstance(names, str):
        names = [t for t in names.split(",") if t]
    if not names or list(names) == ["all"]:
        return list(REGISTRY)
    unknown = [t for t in names if t not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(unknown)}")
    return list(dict.fromkeys(names))


# -- canonicalization -----------------------------------------------------------------

@lru_cache(maxsize=None)
def is_equivariant(name: str, max_len: int = 10, sigma: int = 2) -> bool:
    """Spot-check that a check's outcome and statistics survive alphabet renaming."""
    check = REGISTRY[name]
    perms = list(itertools.permutations(range(sigma)))[1:]

    def signature(s):
        out = check.fn(Analysis(s, sigma))
        if out is None:
            return None
        return out.ok, tuple(sorted((k, v[0]) for k, v in out.stats.items()))

    for n in range(1, max_len + 1):
        for s in itertools.product(range(sigma), repeat=n):
            if not is_canonical(s):
                continue
            sig = signature(s)
            for perm in perms:
                if signature(tuple(perm[c] for c in s)) != sig:
                    return False
    return True


# -- sweep -----------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepConfig:
    alphabet: int = 2
    min_len: int = 1
    max_len: int = 12
    canonicalize: bool = False
    checks: tuple[str, ...] = ("all",)
    jobs: int = 1
    seed: int = 0
    max_len_cap: int = 24

    def __post_init__(self):
        if self.alphabet < 1:
            raise UsageError("alphabet size must be >= 1")
        if not 1 <= self.min_len <= self.max_len:
            raise UsageError("need 1 <= min_len <= max_len")
        if self.max_len > self.max_len_cap:
            raise UsageError(f"max_len {self.max_len} exceeds cap {self.max_len_cap}")
        resolve_checks(self.checks)
        total = sum(count_words(self.alphabet, n, self.canonicalize)
                    for n in range(self.min_len, self.max_len + 1))
        if total > MAX_WORDS:
            raise UsageError(f"{total} words exceed the safety cap of {MAX_WORDS}")


def _word_order(s: tuple[int, ...]):
    return (len(s), s)


class _Acc:
    """Per-check accumulator; ``merge`` is associative and commutative."""

    __slots__ = ("words", "violations", "examples", "stats", "stopped")

    def __init__(self):
        self.words = 0
        self.violations = 0
        self.examples = []  # (order, text, witness)
        self.stats = {}  # name -> (value, order, text, payload)
        self.stopped = False

    def add_stat(self, name, value, a: Analysis, payload):
        cur = self.stats.get(name)
        if cur is None or value > cur[0] or (value == cur[0] and _word_order(a.s) < cur[1]):
            if callable(payload):
                payload = payload()
            self.stats[name] = (value, _word_order(a.s), a.text, payload)

    def merge(self, other: _Acc):
        self.words += other.words
        self.violations += other.violations
        self.examples = sorted(self.examples + other.examples)[:EXAMPLES_KEPT]
        for name, (value, order, text, payload) in other.stats.items():
            cur = self.stats.get(name)
            if cur is None or value > cur[0] or (value == cur[0] and order < cur[1]):
                self.stats[name] = (value, order, text, payload)


def _evaluate_unit(args):
    sigma, n, prefix, plan = args
    # plan: list of (check name, canonical_only)
    accs = {name: _Acc() for name, _ in plan}
    checks = [(REGISTRY[name], canon) for name, canon in plan]
    for s in _raw_words(sigma, n, any(c for _, c in plan) and all(c for _, c in plan), prefix):
        a = Analysis(s, sigma)
        canonical = None
        for check, canon in checks:
            acc = accs[check.name]
            if acc.stopped:
                continue
            if canon:
                if canonical is None:
                    canonical = is_canonical(s)
                if not canonical:
                    continue
            if check.binary_only and not a.binary:
                continue
            out = check.fn(a)
            if out is None:
                continue
            acc.words += 1
            for name, (value, payload) in out.stats.items():
                acc.add_stat(name, value, a, payload)
            if not out.ok:
                acc.violations += 1
                if len(acc.examples) < EXAMPLES_KEPT:
                    acc.examples.append((_word_order(s), a.text, out.witness))
                if check.klass == THEOREM:
                    acc.stopped = True
    return accs


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class SweepReport:
    config: dict
    checks: dict
    status: str
    elapsed: float = 0.0

    @property
    def theorem_failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v["class"] == THEOREM and v["violations"]]

    @property
    def conjecture_failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v["class"] == CONJECTURE and v["violations"]]

    def to_dict(self, timing: bool = False) -> dict:
        d = {"config": self.config, "status": self.status, "checks": self.checks}
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"status: {self.status}"]
        for name, c in self.checks.items():
            state = "ok" if not c["violations"] else (
                "FALSIFIED" if c["class"] == THEOREM else "COUNTEREXAMPLE")
            lines.append(f"{name:34s} {c['class']:10s} words={c['words']:<9d} "
                         f"violations={c['violations']:<6d} {state}")
            for ex in c["examples"][:3]:
                lines.append(f"    {ex['word']}: {json.dumps(ex['witness'], sort_keys=True)}")
            for sname, st in c["stats"].items():
                lines.append(f"    {sname} = {_fmt_value(st['value'])} at {st['word']} "
                             f"{json.dumps(st['witness'], sort_keys=True)}")
        return "\n".join(lines)


def _fmt_value(v):
    if isinstance(v, list):
        return "(" + ", ".join(_fmt_value(x) for x in v) + ")"
    return str(v)


def run_sweep(cfg: SweepConfig) -> SweepReport:
    names = resolve_checks(cfg.checks)
    plan = [(name, cfg.canonicalize and is_equivariant(name)) for name in names]
    units = work_units(cfg.alphabet, cfg.min_len, cfg.max_len, False)
    # a block whose prefix is not canonical holds no canonical word
    all_canon = all(c for _, c in plan)
    if all_canon:
        units = [(n, p) for n, p in units if is_canonical(p)]
    tasks = [(cfg.alphabet, n, p, plan) for n, p in units]
    t0 = time.perf_counter()
    if cfg.jobs > 1 and len(tasks) > 1:
        with multiprocessing.get_context("fork").Pool(cfg.jobs) as pool:
            parts = pool.map(_evaluate_unit, tasks, chunksize=max(1, len(tasks) // (8 * cfg.jobs)))
    else:
        parts = map(_evaluate_unit, tasks)
    total = {name: _Acc() for name in names}
    for part in parts:
        for name, acc in part.items():
            total[name].merge(acc)
    elapsed = time.perf_counter() - t0

    checks = {}
    for name, canon in plan:
        acc = total[name]
        check = REGISTRY[name]
        checks[name] = {
            "class": check.klass,
            "claim": check.claim,
            "canonical": canon,
            "words": acc.words,
            "violations": acc.violations,
            "examples": [{"word": t, "witness": wit} for _, t, wit in acc.examples],
            "stats": {
                k: {"value": _jsonable(v), "word": t, "witness": payload}
                for k, (v, _, t, payload) in sorted(acc.stats.items())
            },
            "status": _check_status(check, acc),
        }
    config = {k: v for k, v in asdict(cfg).items() if k != "jobs"} | {"checks": names}
    report = SweepReport(config, checks, "verified-at-scale", elapsed)
    if report.theorem_failures:
        report.status = "theorem-falsified"
    elif report.conjecture_failures:
        report.status = "counterexample"
    return report


def _check_status(check: Check, acc: _Acc) -> str:
    if not acc.violations:
        return "verified-at-scale"
    return "falsified" if check.klass == THEOREM else "counterexample"


# -- cross validation --------------------------------------------------------------------

def _random_words(rng: random.Random, count: int, max_len: int, max_sigma: int):
    for _ in range(count):
        sigma = rng.randint(1, max_sigma)
        n = rng.randint(1, max_len)
        yield tuple(rng.randrange(sigma) for _ in range(n)), max(sigma, 1)


def _mismatch(kind: str, s, sigma, detail) -> InvariantViolation:
    w = Word(tuple(s), sigma)
    return InvariantViolation(f"{kind} mismatch on {w}", {"check": kind, "word": str(w), **detail})


def cross_validate(cfg: SweepConfig, random_words: int = 10_000, random_max_len: int = 200,
                   random_sigma: int = 4, lp_words: int = 1000, lp_max_len: int = 100) -> SweepReport:
    """Fast-versus-reference equivalence for runs, local periods and the suffix index.

    Raises InvariantViolation on the first mismatch (smallest exhaustive word first).
    """
    t0 = time.perf_counter()
    counts = {"runs-exhaustive": 0, "runs-random": 0, "local-period-random": 0,
              "suffix-index-exhaustive": 0}
    for n in range(cfg.min_len, cfg.max_len + 1):
        for s in itertools.product(range(cfg.alphabet), repeat=n):
            w = Word(s, cfg.alphabet)
            ref = enumerate_runs_naive(w)
            fast = enumerate_runs(w)
            scan = enumerate_runs_scan(w)
            if fast != ref or scan != ref:
                raise _mismatch("runs", s, cfg.alphabet, {
                    "naive": [r.as_dict() for r in ref], "fast": [r.as_dict() for r in fast],
                    "scan": [r.as_dict() for r in scan]})
            counts["runs-exhaustive"] += 1
            if n <= 12:
                for ord in (FORWARD, REVERSE):
                    idx = index.build(w, ord, direct_max=0)
                    if idx.sa != index.suffix_array_naive(w, ord):
                        raise _mismatch("suffix-array", s, cfg.alphabet, {"ordering": ord.value})
                    for i in range(n):
                        for j in range(n):
                            if idx.lce(i, j) != index.lce_naive(w, i, j):
                                raise _mismatch("lce", s, cfg.alphabet, {"i": i, "j": j})
                counts["suffix-index-exhaustive"] += 1
    rng = random.Random(cfg.seed)
    for s, sigma in _random_words(rng, random_words, random_max_len, random_sigma):
        w = Word(s, sigma)
        ref = enumerate_runs_naive(w)
        if enumerate_runs(w) != ref or enumerate_runs_scan(w) != ref:
            raise _mismatch("runs", s, sigma, {})
        counts["runs-random"] += 1
    for s, sigma in _random_words(rng, lp_words, lp_max_len, random_sigma):
        w = Word(s, sigma)
        for c in range(len(s) + 1):
            if critical.local_period(w, c) != critical.local_period_naive(w, c):
                raise _mismatch("local-period", s, sigma, {"cut": c})
        counts["local-period-random"] += 1
    checks = {k: {"class": THEOREM, "claim": "fast route equals reference", "canonical": False,
                  "words": v, "violations": 0, "examples": [], "stats": {},
                  "status": "verified-at-scale"} for k, v in counts.items()}
    return SweepReport({k: v for k, v in asdict(cfg).items() if k != "jobs"} | {"mode": "cross-validate", "random_words": random_words,
                                      "random_max_len": random_max_len,
                                      "random_sigma": random_sigma, "lp_words": lp_words,
                                      "lp_max_len": lp_max_len},
                       checks, "verified-at-scale", time.perf_counter() - t0)
