"""Run the large exhaustive sweeps and write one JSON report per space."""

import argparse
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from lyndonruns.harness import SweepConfig, run_sweep

log = logging.getLogger("full_sweeps")


@dataclass
class Space:
    name: str
    alphabet: int
    max_len: int
    checks: tuple
    min_len: int = 1
    canonicalize: bool = False


@dataclass
class Plan:
    out: Path = Path("results")
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    spaces: list = field(default_factory=lambda: [
        Space("theorems-binary", 2, 20,
              ("runs-lt-n", "runs-lt-n-minus-cubic", "cubic-lt-half", "assign-distinct"),
              canonicalize=True),
        Space("theorems-ternary", 3, 12,
              ("runs-lt-n", "runs-lt-n-minus-cubic", "cubic-lt-half", "assign-distinct"),
              canonicalize=True),
        Space("density-binary", 2, 18, ("conj-lroot-density", "conj-extremal-form")),
        Space("density-binary-long", 2, 20, ("conj-lroot-density",), min_len=19),
        Space("density-ternary", 3, 12, ("conj-lroot-density",)),
        Space("oroots-binary", 2, 16, ("oroot-distinct", "root-remarks", "prop-three-halves",
                                       "prop-same-order-oroots", "cor-nonunary-oroots",
                                       "cor-unary-oroots", "cor-unary-oroots-all-blocks")),
        Space("lemmas-binary", 2, 14, ("lemma-lroot-oroot-displacement", "lemma-oroot-overlap",
                                       "remark-lyndon-intervals", "critical-factorization")),
        Space("square-lemma", 2, 12, ("square-lemma",)),
    ])


def run(plan: Plan, only=None):
    plan.out.mkdir(parents=True, exist_ok=True)
    for sp in plan.spaces:
        if only and sp.name not in only:
            continue
        cfg = SweepConfig(alphabet=sp.alphabet, min_len=sp.min_len, max_len=sp.max_len,
                          canonicalize=sp.canonicalize, checks=sp.checks, jobs=plan.jobs)
        rep = run_sweep(cfg)
        log.info("%s: %s in %.0fs", sp.name, rep.status, rep.elapsed)
        (plan.out / f"{sp.name}.json").write_text(rep.to_json(timing=True) + "\n")
        print(f"== {sp.name}\n{rep.to_text()}\n")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--only", nargs="*", help="space names to run")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    run(Plan(out=args.out, jobs=args.jobs), args.only)
