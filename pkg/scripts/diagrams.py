"""Print the three worked diagrams: runs, assigned positions and the dense interval."""

import argparse

from lyndonruns.cli import main


def show(*argv):
    print("$ lyndonruns " + " ".join(argv))
    main(list(argv))
    print()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--word", default="abaababbababb")
    ap.add_argument("--k", type=int, default=2, help="witness family parameter")
    args = ap.parse_args()
    show("runs", args.word)
    show("assign", args.word)
    from lyndonruns.density import witness_word

    w, iv = witness_word(args.k, check=False)
    show("roots", str(w), "--kind", "lroot")
    show("density", str(w), "--interval", str(iv.start), str(iv.end))
