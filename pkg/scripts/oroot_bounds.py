"""Largest same-order Oroot counts per interval length on binary words.

Compares the two ways of attributing an order to an Oroot (the branch that
produced it, or its first letter) against (l-1)/2, and the non-unary counts
against min(|f|_ab, |f|_ba).
"""

import argparse
import itertools

from lyndonruns.runs import enumerate_runs_scan, oroot
from lyndonruns.words import Word


def table(max_len: int):
    best = {}
    for n in range(1, max_len + 1):
        for s in itertools.product((0, 1), repeat=n):
            w = Word(s, 2)
            occ = [oroot(w, r) for r in enumerate_runs_scan(w)]
            for i in range(n):
                for j in range(i, n):
                    ell = j - i + 1
                    inside = [o for o in occ if i <= o.start and o.end <= j]
                    f = s[i:j + 1]
                    pairs = list(zip(f, f[1:]))
                    nonunary_bound = min(pairs.count((0, 1)), pairs.count((1, 0)))
                    for order in (0, 1):
                        by_branch = sum(1 for o in inside if (o.ordering.value == "reverse") == order)
                        by_letter = sum(1 for o in inside if s[o.start] == order)
                        excess = sum(1 for o in inside if s[o.start] == order and o.run.period > 1)
                        for key, c in (("branch", by_branch), ("letter", by_letter),
                                       ("nonunary-excess", excess - nonunary_bound)):
                            cur = best.get((key, ell))
                            if cur is None or c > cur[0]:
                                best[(key, ell)] = (c, str(w), i, j)
    return best


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=10)
    args = ap.parse_args()
    best = table(args.max_len)
    print(f"{'l':>3} {'(l-1)/2':>8} {'branch':>8} {'letter':>8} {'nonunary excess':>16}  witnesses")
    for ell in range(1, args.max_len + 1):
        b, l_, e = best[("branch", ell)], best[("letter", ell)], best[("nonunary-excess", ell)]
        print(f"{ell:>3} {(ell - 1) / 2:>8.1f} {b[0]:>8} {l_[0]:>8} {e[0]:>16}  "
              f"{l_[1]}[{l_[2]}..{l_[3]}] {e[1]}[{e[2]}..{e[3]}]")
