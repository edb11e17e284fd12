"""Command-line frontend.

Exit codes: 0 success (audit mismatches included), 1 internal failure,
2 usage error, 3 size budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import equi, formulas, maps
from . import stats as statmod
from .avoid import iter_avoiders, pattern_set, set_name, split_patterns
from .classify import class_ids, validate_class
from .core import InvalidInput, format_word, parse_word
from .enumeration import iterate_rgfs, prefixes

log = logging.getLogger("rgfaudit")

DEFAULT_BUDGET = 9
HARD_CAP = 11
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class BudgetExceeded(Exception):
    pass


def hard_cap() -> int:
    env = os.environ.get("RGF_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInput(f"RGF_BUDGET must be an integer, got {env!r}")
    return HARD_CAP


def budget(args) -> int:
    """Largest n this invocation may touch."""
    if args.n_max is None:
        return DEFAULT_BUDGET
    cap = hard_cap()
    if args.n_max > cap:
        raise BudgetExceeded(f"--n-max {args.n_max} is above the hard cap {cap}"
                             " (set RGF_BUDGET to raise it)")
    if args.n_max > DEFAULT_BUDGET:
        log.warning("n up to %d: enumeration grows like the Bell numbers and may be slow",
                    args.n_max)
    return args.n_max


def check_n(n: int, args) -> None:
    if n < 1:
        raise InvalidInput("n must be >= 1")
    limit = budget(args)
    if n > limit:
        raise BudgetExceeded(f"n={n} exceeds the budget {limit}; pass --n-max to raise it")


def _patterns(text):
    if not text:
        return ()
    return pattern_set(split_patterns(text))


# -- output helpers -------------------------------------------------------------

def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _chunk(job):
    n, pats, prefix = job
    if pats:
        return list(iter_avoiders(n, pats, prefix))
    return list(iterate_rgfs(n, prefix=prefix))


def _words(n: int, pats, threads: int) -> list:
    """All (avoiding) words of length n, in lexicographic order for any thread count."""
    if threads <= 1:
        return _chunk((n, pats, (1,)))
    jobs = [(n, pats, p) for p in prefixes(n, 4)]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        parts = list(ex.map(_chunk, jobs))
    return [w for part in parts for w in part]


# -- commands ----------------------------------------------------------------

def cmd_words(args, out) -> int:
    if args.n is None:
        raise InvalidInput("--n is required")
    check_n(args.n, args)
    pats = _patterns(args.patterns) if args.command == "avoid" else ()
    if args.command == "avoid" and not pats:
        raise InvalidInput("--patterns is required")
    words = [format_word(w) for w in _words(args.n, pats, args.threads)]
    if args.csv:
        _write_csv(args.csv, ["word"], [[w] for w in words])
    if args.json:
        payload = {"n": args.n, "patterns": set_name(pats) if pats else "", "count": len(words)}
        if args.list:
            payload["words"] = words
        _emit(out, json.dumps(payload))
    elif args.list:
        _emit(out, "\n".join(words))
    else:
        _emit(out, str(len(words)))
    return EXIT_OK


def cmd_stats(args, out) -> int:
    if not args.word:
        raise InvalidInput("--word is required")
    w = parse_word(args.word)
    values = statmod.all_stats(w)
    kinds = [args.stat] if args.stat and not args.all else ["lb", "ls", "rb", "rs"]
    if args.json:
        _emit(out, json.dumps({"word": format_word(w), **{k: values[k] for k in kinds}}))
    else:
        _emit(out, " ".join(f"{k}={values[k]}" for k in kinds))
    return EXIT_OK


def cmd_dist(args, out) -> int:
    if args.n is None or not args.stat:
        raise InvalidInput("--n and --stat are required")
    check_n(args.n, args)
    pats = _patterns(args.patterns)
    words = _words(args.n, pats, args.threads)
    d = statmod.distribution(words, args.stat, args.n, set_name(pats) if pats else "all")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(d.to_csv())
    if args.json:
        _emit(out, d.to_json())
    else:
        _emit(out, d.to_csv())
    return EXIT_OK


def cmd_audit(args, out) -> int:
    top = args.n_max or DEFAULT_BUDGET
    budget(args)
    what = args.what
    if what == "formulas":
        ids = [args.id] if args.id else formulas.formula_ids()
        report = formulas.AuditReport()
        for fid in ids:
            report.extend(formulas.audit_cardinality(fid, 1, top))
        if args.csv:
            _write_csv(args.csv, ["id", "n", "m", "formula", "oracle", "verdict"],
                       [[r.id, r.n, "" if r.m is None else r.m,
                         "" if r.formula is None else r.formula,
                         "" if r.oracle is None else r.oracle, r.verdict]
                        for r in report.sorted().rows])
        _emit(out, report.to_json() if args.json else report.table())
    elif what == "classes":
        ids = [args.id] if args.id else class_ids()
        rows = [validate_class(c, n) for c in ids for n in range(1, top + 1)]
        if args.json:
            _emit(out, json.dumps([r.to_dict() for r in rows], indent=1))
        else:
            lines = [f"{'class':20} {'n':>3} {'pred':>6} {'oracle':>6}  verdict"]
            lines += [f"{r.class_id:20} {r.n:>3} {r.predicate_count:>6} {r.oracle_count:>6}"
                      f"  {'match' if r.equal else 'mismatch'}" for r in rows]
            _emit(out, "\n".join(lines))
    else:
        tallies = statmod.audit(min(top, 8))
        rows = [t.to_dict() for t in tallies.values()]
        if args.json:
            _emit(out, json.dumps(rows, indent=1))
        else:
            lines = [f"{r['family']:16} {r['case']:6} {r['kind']:3} {r['variant']:9}"
                     f" {r['checked']:>6} {r['failed']:>6}  {r['verdict']}" for r in rows]
            _emit(out, "\n".join(lines))
    return EXIT_OK


def cmd_bijection(args, out) -> int:
    if not args.id:
        raise InvalidInput("--id is required")
    if args.word:
        w = parse_word(args.word)
        fn = maps.apply_inverse if args.inverse else maps.apply
        y = fn(args.id, w)
        _emit(out, json.dumps({"id": args.id, "input": format_word(w), "output": format_word(y)})
              if args.json else format_word(y))
        return EXIT_OK
    if args.n is None:
        raise InvalidInput("pass --word to apply the map or --n to verify it")
    check_n(args.n, args)
    r = maps.verify_bijection(args.id, args.n)
    if args.json:
        _emit(out, json.dumps(r.to_dict()))
    else:
        lines = [f"{r.id} n={r.n} domain={r.domain_size} codomain={r.codomain_size}"]
        lines += [f"  {k}: {'pass' if v else 'FAIL'}" for k, v in {**r.checks, **r.transports}.items()]
        _emit(out, "\n".join(lines))
    return EXIT_OK


def cmd_equiscan(args, out) -> int:
    if not args.patterns:
        raise InvalidInput("--patterns is required (classes separated by ';')")
    top = args.n_max or 7
    budget(args)
    sets = [pattern_set(split_patterns(s)) for s in args.patterns.split(";") if s.strip()]
    kinds = [args.stat] if args.stat else statmod.KINDS
    claims = equi.scan(sets, kinds, top, workers=args.threads, keep_failed=args.all)
    if args.csv:
        _write_csv(args.csv, ["left", "left_stat", "right", "right_stat", "holds",
                              "verified_to", "failing_n", "tag"],
                   [[c.left[0], c.left[1].value, c.right[0], c.right[1].value, c.holds,
                     c.verified_to or "", c.failing_n or "", c.tag] for c in claims])
    if args.json:
        _emit(out, equi.scan_json(claims))
    else:
        lines = []
        for c in claims:
            status = f"holds n<={c.verified_to}" if c.holds else f"fails at n={c.failing_n}"
            lines.append(f"{c.label():44} {status:16} {c.tag}")
        _emit(out, "\n".join(lines) if lines else "(no claims)")
    return EXIT_OK


def cmd_conjecture(args, out) -> int:
    top = args.n_max or 8
    budget(args)
    report = equi.check_conjecture(args.k, args.l, top)
    if args.csv:
        _write_csv(args.csv, ["pi1", "pi2", "case", "left", "right", "verdict", "first_failure"],
                   [[r.pi1, r.pi2, r.case, r.left, r.right, r.verdict,
                     r.first_failure or ""] for r in report.rows])
    if args.json:
        _emit(out, report.to_json())
    else:
        _emit(out, report.table(tested_only=not args.all))
        _emit(out, " ".join(f"{k}={v}" for k, v in report.summary().items()))
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_words,
    "avoid": cmd_words,
    "stats": cmd_stats,
    "dist": cmd_dist,
    "audit": cmd_audit,
    "bijection": cmd_bijection,
    "equiscan": cmd_equiscan,
    "conjecture": cmd_conjecture,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int, dest="n_max")
    common.add_argument("--patterns")
    common.add_argument("--stat", choices=["lb", "ls", "rb", "rs"])
    common.add_argument("--count", action="store_true")
    common.add_argument("--list", action="store_true")
    common.add_argument("--json", action="store_true")
    common.add_argument("--csv", metavar="PATH")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--word")
    common.add_argument("--all", action="store_true")
    common.add_argument("--id")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="rgfaudit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="all RGFs of length n")
    sub.add_parser("avoid", parents=[common], help="RGFs avoiding a pattern set")
    sub.add_parser("stats", parents=[common], help="lb/ls/rb/rs of one word")
    sub.add_parser("dist", parents=[common], help="distribution of a statistic over a class")
    a = sub.add_parser("audit", parents=[common], help="formula, characterization or statistic audits")
    a.add_argument("--what", choices=["formulas", "classes", "stats"], default="formulas")
    b = sub.add_parser("bijection", parents=[common], help="apply or verify a bijection")
    b.add_argument("--inverse", action="store_true")
    sub.add_parser("equiscan", parents=[common], help="search for equidistributed statistics")
    c = sub.add_parser("conjecture", parents=[common], help="complement conjecture sweep")
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--l", type=int, default=4)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except BudgetExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
