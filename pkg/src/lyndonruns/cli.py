"""Command-line entry point: ``lyndonruns <command> ...``.

Exit codes: 0 success, 1 a checked property failed (payload on stdout),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import critical, density, harness
from .errors import DomainError, InvariantViolation, UsageError
from .runs import assign_all, enumerate_runs, enumerate_runs_naive, lroot, oroot
from .words import Interval, Word, smallest_period

log = logging.getLogger("lyndonruns")


def ruler(n: int) -> list[str]:
    lines = []
    if n > 10:
        lines.append("".join(str(i // 10 % 10) if i >= 10 else " " for i in range(n)))
    lines.append("".join(str(i % 10) for i in range(n)))
    return lines


def bar(start: int, end: int, ch: str = "-") -> str:
    return " " * start + ch * (end - start + 1)


def _csv(header: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})
    return buf.getvalue().rstrip("\n")


# -- per-word commands -----------------------------------------------------------------
# each returns (document, text, csv header, csv rows)

def do_runs(w: Word, args):
    runs = enumerate_runs_naive(w) if args.naive else enumerate_runs(w)
    doc = {"word": str(w), "n": len(w), "runs": [r.as_dict() for r in runs]}
    lines = ruler(len(w)) + [str(w)]
    for r in runs:
        lines.append(f"{bar(r.start, r.end):{len(w)}s}  [{r.start}..{r.end}] p={r.period}")
    lines.append(f"{len(runs)} runs")
    return doc, lines, ["start", "end", "period"], doc["runs"]


def do_assign(w: Word, args):
    runs = enumerate_runs(w)
    asg = assign_all(w, runs)
    rows = [dict(a.run.as_dict(), k=a.k, ordering=a.ordering.value) for a in asg]
    doc = {"word": str(w), "n": len(w), "assignments": rows}
    lines = ruler(len(w)) + [str(w)]
    for a in asg:
        line = bar(a.k, a.run.end, "=")
        lines.append(f"{line:{len(w)}s}  [{a.run.start}..{a.run.end}] p={a.run.period} "
                     f"k={a.k} {a.ordering.value}")
    lines.append(f"{len(asg)} distinct positions")
    return doc, lines, ["start", "end", "period", "k", "ordering"], rows


def do_roots(w: Word, args):
    runs = enumerate_runs(w)
    rows = []
    for r in runs:
        occ = []
        if args.kind in ("lroot", "both"):
            occ.append(lroot(w, r))
        if args.kind in ("oroot", "both"):
            occ.append(oroot(w, r))
        for o in occ:
            rows.append({"run_start": r.start, "run_end": r.end, "period": r.period,
                         "kind": o.kind.value, "start": o.start, "end": o.end,
                         "ordering": o.ordering.value})
    doc = {"word": str(w), "n": len(w), "roots": rows}
    lines = ruler(len(w)) + [str(w)]
    for row in rows:
        ch = "L" if row["kind"] == "lroot" else "O"
        lines.append(f"{bar(row['start'], row['end'], ch):{len(w)}s}  {row['kind']} "
                     f"[{row['start']}..{row['end']}] of run [{row['run_start']}..{row['run_end']}]"
                     f" p={row['period']}")
    header = ["run_start", "run_end", "period", "kind", "start", "end", "ordering"]
    return doc, lines, header, rows


def do_critical(w: Word, args):
    if len(w) == 0:
        raise DomainError("word must be non-empty")
    reports = critical.local_periods(w)
    if args.cut is not None:
        if not 0 <= args.cut <= len(w):
            raise DomainError(f"cut {args.cut} outside 0..{len(w)}")
        reports = [reports[args.cut]]
    rows = [r.as_dict() for r in reports]
    crit = sorted(critical.critical_positions(w)) if len(w) >= 2 else []
    doc = {"word": str(w), "n": len(w), "period": smallest_period(w), "cuts": rows,
           "critical_positions": crit}
    lines = [f"{w}  period={doc['period']}"]
    for r in reports:
        mark = "critical" if r.critical else ""
        lines.append(f"cut {r.cut:3d}  {str(w)[:r.cut]}|{str(w)[r.cut:]}  "
                     f"local_period={r.local_period} {mark}".rstrip())
    lines.append("critical positions: " + (" ".join(map(str, crit)) or "none"))
    return doc, lines, ["cut", "local_period", "critical"], rows


def do_density(w: Word, args):
    runs = enumerate_runs(w)
    if args.interval:
        i, j = args.interval
        iv = Interval(i, j)
        c = density.count_lroots_in(w, iv, runs)
        doc = {"word": str(w), "start": i, "end": j, "count": c, "ratio": c / iv.length,
               "factor": str(w)[i:j + 1]}
    else:
        doc = density.max_lroot_density(w, runs).as_dict()
    lines = ruler(len(w)) + [str(w), bar(doc["start"], doc["end"], "^"),
                             f"[{doc['start']}..{doc['end']}] count={doc['count']} "
                             f"ratio={doc['ratio']:g} factor={doc['factor']}"]
    for a, b in density.lroot_intervals(w, runs):
        if doc["start"] <= a and b <= doc["end"]:
            lines.append(bar(a, b, "L"))
    row = {k: doc[k] for k in ("word", "start", "end", "count", "ratio", "factor")}
    return doc, lines, list(row), [row]


def do_witness(k: int, args):
    w, iv = density.witness_word(k)
    doc = {"word": str(w), "k": k, "start": iv.start, "end": iv.end,
           "count": density.count_lroots_in(w, iv)}
    return doc, [str(w)], ["word", "k", "start", "end", "count"], [doc]


def emit(args, doc, lines, header, rows, out=None):
    out = out or sys.stdout
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True), file=out)
    elif args.format == "csv":
        print(_csv(header, rows), file=out)
    else:
        print("\n".join(lines), file=out)


def _word_inputs(args) -> list[str]:
    if args.stdin:
        return [line.strip() for line in sys.stdin if line.strip()]
    if args.word is None:
        raise UsageError("a word argument or --stdin is required")
    return [args.word]


def run_word_command(args, fn) -> int:
    try:
        texts = _word_inputs(args)
        words = [Word.parse(t) for t in texts]
    except (DomainError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    results = []
    for w in words:
        try:
            results.append(fn(w, args))
        except InvariantViolation as e:
            print(json.dumps({"error": str(e), "payload": e.payload}, sort_keys=True))
            return 1
        except (DomainError, UsageError) as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    if args.stdin and args.format == "json":
        print(json.dumps([r[0] for r in results], sort_keys=True))
    elif args.stdin and args.format == "csv":
        header = results[0][2] if results else []
        rows = [dict(row, word=str(w)) for w, r in zip(words, results) for row in r[3]]
        print(_csv((["word"] if "word" not in header else []) + header, rows))
    else:
        for r in results:
            emit(args, *r)
    return 0


def run_witness(args) -> int:
    try:
        doc, lines, header, rows = do_witness(args.k, args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print(json.dumps({"error": str(e), "payload": e.payload}, sort_keys=True))
        return 1
    emit(args, doc, lines, header, rows)
    return 0


def run_sweep_command(args) -> int:
    try:
        cfg = harness.SweepConfig(
            alphabet=args.alphabet, min_len=args.min_len, max_len=args.max_len,
            canonicalize=args.canonical, checks=tuple(harness.resolve_checks(args.checks)),
            jobs=args.jobs, seed=args.seed, max_len_cap=args.len_cap,
        )
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = harness.run_sweep(cfg)
    log.info("sweep finished in %.2fs", report.elapsed)
    _emit_report(args, report)
    return 0 if report.status == "verified-at-scale" else 1


def run_crossval_command(args) -> int:
    try:
        cfg = harness.SweepConfig(alphabet=args.alphabet, min_len=args.min_len,
                                  max_len=args.max_len, seed=args.seed, max_len_cap=args.len_cap)
        report = harness.cross_validate(cfg, random_words=args.random_words,
                                        random_max_len=args.random_max_len,
                                        lp_words=args.lp_words)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print(json.dumps({"error": str(e), "payload": e.payload}, sort_keys=True))
        return 1
    log.info("cross-validation finished in %.2fs", report.elapsed)
    _emit_report(args, report)
    return 0


def _emit_report(args, report):
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        rows = [{"check": k, "class": v["class"], "words": v["words"],
                 "violations": v["violations"], "status": v["status"]}
                for k, v in report.checks.items()]
        print(_csv(["check", "class", "words", "violations", "status"], rows))
    else:
        print(report.to_text())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lyndonruns", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("word", nargs="?")
        sp.add_argument("--stdin", action="store_true", help="read one word per line")
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        return sp

    sp = word_cmd("runs", "list the runs of a word")
    sp.add_argument("--naive", action="store_true", help="use the reference enumerator")
    sp.set_defaults(handler=lambda a: run_word_command(a, do_runs))

    sp = word_cmd("assign", "greatest-suffix position of every run")
    sp.set_defaults(handler=lambda a: run_word_command(a, do_assign))

    sp = word_cmd("roots", "Lroots and Oroots of every run")
    sp.add_argument("--kind", choices=["lroot", "oroot", "both"], default="both")
    sp.set_defaults(handler=lambda a: run_word_command(a, do_roots))

    sp = word_cmd("critical", "local periods and critical positions")
    sp.add_argument("--cut", type=int)
    sp.set_defaults(handler=lambda a: run_word_command(a, do_critical))

    sp = word_cmd("density", "Lroot density of an interval or the densest interval")
    sp.add_argument("--interval", nargs=2, type=int, metavar=("I", "J"))
    sp.set_defaults(handler=lambda a: run_word_command(a, do_density))

    sp = sub.add_parser("witness", help="the extremal family (ab)^k a (ab)^k b (ab)^k b")
    sp.add_argument("k", type=int)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.set_defaults(handler=run_witness)

    sp = sub.add_parser("sweep", help="exhaustive verification sweep")
    sp.add_argument("--alphabet", type=int, default=2)
    sp.add_argument("--min-len", type=int, default=1)
    sp.add_argument("--max-len", type=int, default=12)
    sp.add_argument("--checks", default="all",
                    help="comma-separated names or 'all': " + ", ".join(harness.REGISTRY))
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--canonical", action="store_true",
                    help="one word per alphabet-renaming class where the check allows it")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--len-cap", type=int, default=24)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.set_defaults(handler=run_sweep_command)

    sp = sub.add_parser("crossval", help="fast-versus-reference equivalence")
    sp.add_argument("--alphabet", type=int, default=2)
    sp.add_argument("--min-len", type=int, default=1)
    sp.add_argument("--max-len", type=int, default=12)
    sp.add_argument("--random-words", type=int, default=10_000)
    sp.add_argument("--random-max-len", type=int, default=200)
    sp.add_argument("--lp-words", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--len-cap", type=int, default=24)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.set_defaults(handler=run_crossval_command)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
