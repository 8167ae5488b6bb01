"""Acceptance suite: one PASS/FAIL line per criterion.

Run with pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``. The exhaustive sweeps take several
minutes on a single core; set LYNDONRUNS_JOBS to use more workers.
"""

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from lyndonruns import critical, density  # noqa: E402
from lyndonruns.harness import SweepConfig, cross_validate, run_sweep  # noqa: E402
from lyndonruns.runs import Run, assign_all, enumerate_runs  # noqa: E402
from lyndonruns.words import Word  # noqa: E402

JOBS = int(os.environ.get("LYNDONRUNS_JOBS", os.cpu_count() or 1))
EXAMPLE = Word.parse("abaababbababb")

pytestmark = pytest.mark.slow


def record(n: int, ok: bool, detail: str):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append((n, line))
    print(line, flush=True)
    assert ok, line


def sweep(**kw):
    return run_sweep(SweepConfig(jobs=JOBS, **kw))


def violations(report, name):
    c = report.checks[name]
    return c["violations"], (c["examples"][0] if c["examples"] else None)


_cache = {}


def cached(key, fn):
    if key not in _cache:
        _cache[key] = fn()
    return _cache[key]


def theorem_sweeps():
    names = ("runs-lt-n", "runs-lt-n-minus-cubic", "cubic-lt-half")
    return cached("theorem", lambda: [
        sweep(alphabet=2, max_len=20, canonicalize=True, checks=names),
        sweep(alphabet=3, max_len=12, canonicalize=True, checks=names),
    ])


def test_criterion_01_runs_example():
    runs = enumerate_runs(EXAMPLE)
    best = min(_timed(lambda: enumerate_runs(EXAMPLE)) for _ in range(20))
    ok = len(runs) == 8 and Run(7, 11, 2) in runs and best < 1e-3
    record(1, ok, f"{len(runs)} runs, [7..11] p=2 present={Run(7, 11, 2) in runs}, "
                  f"best time {best * 1e3:.3f} ms")


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def test_criterion_02_assignment_example():
    ks = [a.k for a in assign_all(EXAMPLE)]
    ok = len(ks) == 8 and len(set(ks)) == 8 and min(ks) > 0
    record(2, ok, f"positions {sorted(ks)}")


def test_criterion_03_runs_lt_n():
    t = time.perf_counter()
    reps = theorem_sweeps()
    bad = [violations(r, "runs-lt-n") for r in reps]
    words = sum(r.checks["runs-lt-n"]["words"] for r in reps)
    ok = all(v == 0 for v, _ in bad)
    record(3, ok, f"{words} canonical words (binary<=20, ternary<=12), violations "
                  f"{[v for v, _ in bad]}, {time.perf_counter() - t:.0f}s with {JOBS} jobs")


def test_criterion_04_corollaries():
    reps = theorem_sweeps()
    counts = {name: [violations(r, name)[0] for r in reps]
              for name in ("runs-lt-n-minus-cubic", "cubic-lt-half")}
    ok = all(v == 0 for vs in counts.values() for v in vs)
    record(4, ok, f"violations {counts}")


def test_criterion_05_square_lemma():
    t = time.perf_counter()
    rep = sweep(alphabet=2, max_len=12, checks=("square-lemma",))
    v, ex = violations(rep, "square-lemma")
    dt = time.perf_counter() - t
    record(5, v == 0 and dt <= 300,
           f"{rep.checks['square-lemma']['words']} words, violations {v}, {dt:.1f}s")


def test_criterion_06_local_period_examples():
    lps = [critical.local_period(Word.parse("baba"), c) for c in range(4)]
    crit = critical.critical_positions(Word.parse("abaaba"))
    ok = lps == [1, 2, 2, 2] and 2 in crit and 5 not in crit
    record(6, ok, f"baba local periods {lps}, abaaba critical {sorted(crit)}")


def test_criterion_07_witness_family():
    got = {}
    for k in range(1, 9):
        w, iv = density.witness_word(k, check=False)
        got[k] = (density.count_lroots_in(w, iv), 2 * (k + 1))
    bad = {k: c for k, c in got.items() if c[0] != c[1]}
    record(7, not bad, f"k=1..8 (count, 2(k+1)) mismatches: {bad or 'none'}")


def test_criterion_08_conjectures():
    t = time.perf_counter()
    both = ("conj-lroot-density", "conj-extremal-form")
    reps = {
        "binary<=18": sweep(alphabet=2, max_len=18, checks=both),
        "binary 19-20": sweep(alphabet=2, min_len=19, max_len=20, checks=both[:1]),
        "ternary<=12": sweep(alphabet=3, max_len=12, checks=both[:1]),
    }
    density_bad = {k: violations(r, both[0])[0] for k, r in reps.items()}
    ext = reps["binary<=18"].checks[both[1]]
    maxima = [ext["stats"][f"max_count_len{ell}"]["value"] for ell in (1, 2, 3)]
    statuses = {k: r.status for k, r in reps.items()}
    ok = (not any(density_bad.values()) and not ext["violations"] and maxima == [1, 1, 3]
          and set(statuses.values()) == {"verified-at-scale"})
    first = _ex(ext["examples"][0]) if ext["examples"] else "-"
    record(8, ok, f"conj 1 counterexamples {density_bad}; conj 2 counterexamples "
                  f"{ext['violations']} (first {first}), length 1/2/3 maxima {maxima}; "
                  f"status {statuses}; "
                  f"{time.perf_counter() - t:.0f}s")


def test_criterion_09_root_count_bounds():
    rep = sweep(alphabet=2, max_len=16, checks=("prop-three-halves", "prop-same-order-oroots"))
    parts = []
    ok = True
    for name in ("prop-three-halves", "prop-same-order-oroots"):
        v, ex = violations(rep, name)
        ok &= v == 0
        parts.append(f"{name}: {'0 violations' if not v else 'violated, first ' + _ex(ex)}")
    record(9, ok, "; ".join(parts))


def _ex(ex):
    return f"{ex['word']} {ex['witness']}" if ex else "-"


def test_criterion_10_oracle_equivalence():
    t = time.perf_counter()
    try:
        rep = cross_validate(SweepConfig(alphabet=2, max_len=16), random_words=10_000,
                             random_max_len=200, random_sigma=4, lp_words=1000, lp_max_len=100)
        ok, detail = rep.status == "verified-at-scale", {
            k: c["words"] for k, c in rep.checks.items()}
    except AssertionError as e:
        ok, detail = False, str(e)
    record(10, ok, f"{detail}, {time.perf_counter() - t:.0f}s")


def test_criterion_11_lemma_suites():
    names = ("lemma-lroot-oroot-displacement", "lemma-oroot-overlap")
    rep = sweep(alphabet=2, max_len=14, checks=names)
    v = {n: violations(rep, n)[0] for n in names}
    record(11, not any(v.values()), f"binary<=14 violations {v}")


def test_criterion_12_determinism():
    cfg = dict(alphabet=2, max_len=12, checks=("all",))
    one = run_sweep(SweepConfig(jobs=1, **cfg)).to_json()
    eight = run_sweep(SweepConfig(jobs=8, **cfg)).to_json()
    record(12, one == eight, f"jobs 1 vs 8 reports identical={one == eight} ({len(one)} bytes)")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
