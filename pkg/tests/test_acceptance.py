"""End-to-end acceptance checks; each test records one pass/fail line."""

import io
import time

from rgfaudit.avoid import avoidance_class
from rgfaudit.classify import KNOWN_DISCREPANCIES, class_ids, validate_class
from rgfaudit.cli import main
from rgfaudit.core import (
    complement,
    format_partition,
    format_word,
    parse_partition,
    parse_word,
    restrict,
    standardize,
)
from rgfaudit.enumeration import Constraint, iterate_rgfs
from rgfaudit.equi import KNOWN_CLAIMS, check_conjecture, check_known, scan, scan_json
from rgfaudit.formulas import audit_all, audit_cardinality, complement_duality, wilf_pairs
from rgfaudit.maps import BIJECTIONS, apply, verify_bijection
from rgfaudit.stats import (
    all_stats,
    distribution,
    ls_closed_form,
    rb_weakly_increasing,
    stat,
    stat_letter,
)

RESULTS = {}


def record(num, ok, detail):
    RESULTS[num] = (bool(ok), detail)
    assert ok, detail


def test_criterion_1_worked_examples():
    t = time.perf_counter()
    got = (
        tuple(all_stats(parse_word("123243125")).values()),
        stat_letter(parse_word("1123124255"), 4, "ls"),
        format_partition(complement(parse_partition("1246/37/5"))),
        format_partition(standardize(restrict(parse_partition("1347/25/68"), {1, 2, 4, 7}))),
    )
    dt = time.perf_counter() - t
    want = ((7, 14, 17, 9), 2, "15/2467/3", "134/2")
    record(1, got == want and dt < 1, f"{got} in {dt:.3f}s")


def test_criterion_2_characterizations():
    t = time.perf_counter()
    mismatched, bare = set(), []
    for cid in class_ids():
        for n in range(1, 10):
            r = validate_class(cid, n)
            if not r.equal:
                mismatched.add(cid)
                if cid not in KNOWN_DISCREPANCIES or not (r.only_predicate or r.only_oracle):
                    bare.append((cid, n))
    dt = time.perf_counter() - t
    ok = not bare and dt <= 600 and len(class_ids()) == 27
    record(2, ok, f"27 classes, n<=9, documented discrepancies {sorted(mismatched)}, "
                  f"undocumented {bare}, {dt:.0f}s")


def test_criterion_3_cardinality_audit():
    three_blocks = set(audit_cardinality("card:1/2/3/4", 1, 9).verdicts("card:1/2/3/4").values())
    pairs = [set(audit_cardinality(f, 3, 9).verdicts(f).values())
             for f in ("card:12/3+1/24/3", "card:1/23+13/2/4")]
    dual = complement_duality(4, 9)
    full = audit_all(1, 9)
    ids = {r.id for r in full.rows}
    complete = all(set(full.verdicts(i)) == set(range(1, 10)) for i in ids)
    ok = (three_blocks == {"match"} and all(p == {"match"} for p in pairs)
          and {r.verdict for r in dual.rows} == {"match"}
          and len({r.id for r in dual.rows}) == 15 and complete)
    record(3, ok, f"{len(ids)} formula ids audited for n=1..9, "
                  f"surviving {len(full.surviving())}; duality ok")


def test_criterion_4_statistic_lemmas():
    count_ls = count_rb = 0
    ok = True
    for n in range(1, 10):
        for w in iterate_rgfs(n):
            count_ls += 1
            ok &= ls_closed_form(w) == stat(w, "ls")
    for n in range(1, 11):
        for w in iterate_rgfs(n, Constraint(weakly_increasing=True)):
            count_rb += 1
            ok &= rb_weakly_increasing(w) == stat(w, "rb")
    record(4, ok, f"ls identity on {count_ls} words, rb identity on {count_rb} increasing words")


def test_criterion_5_equidistribution():
    t = time.perf_counter()
    claims = check_known(8)
    dt = time.perf_counter() - t
    failing = {cid: c.failing_n for cid, c in claims.items() if not c.holds}
    ok = len(claims) == len(KNOWN_CLAIMS) == 16 and not failing and dt <= 300
    shown = []
    for cid, n in failing.items():
        (a, s), (b, t) = KNOWN_CLAIMS[cid]
        shown.append(f"{cid} at n={n}: {distribution(avoidance_class(n, a), s).counts}"
                     f" vs {distribution(avoidance_class(n, b), t).counts}")
    record(5, ok, f"{16 - len(failing)}/16 hold for n<=8 ({dt:.0f}s); failing: {shown}")


GOLDEN = [("F_COMPL", "1234422", "1123114"), ("PHI_FLIP", "122233213", "123222133"),
          ("PHI_PAIR", "1234555", "1112345"), ("H_SWAP", "12234522", "11234115"),
          ("G_SWAP", "122345544", "112113445")]


def test_criterion_6_bijections():
    goldens = all(format_word(apply(b, parse_word(s))) == d for b, s, d in GOLDEN)
    bad = [(b, n) for b in sorted(BIJECTIONS) for n in range(1, 9)
           if not verify_bijection(b, n).ok]
    record(6, goldens and not bad, f"goldens {'ok' if goldens else 'WRONG'}; failures {bad}")


def test_criterion_7_conjecture_sweep():
    reports = [check_conjecture(3, 4, 8), check_conjecture(4, 4, 8)]
    tables = all(r.table().count("\n") > 0 for r in reports)
    wilf = wilf_pairs(8)
    ok = tables and {r.verdict for r in wilf.rows} == {"match"}
    summary = {f"({r.k},{r.l})": r.summary() for r in reports}
    record(7, ok, f"sweeps {summary}; proven Wilf pairs all equal")


def test_criterion_8_determinism_across_workers():
    outs = []
    for threads in ("1", "4"):
        buf = io.StringIO()
        main(["avoid", "--n", "8", "--patterns", "13/2/4", "--list", "--threads", threads], out=buf)
        outs.append(buf.getvalue())
    same_scan = (scan_json(scan(["13/2/4", "1/24/3"], n_max=6, workers=1))
                 == scan_json(scan(["13/2/4", "1/24/3"], n_max=6, workers=4)))
    # wall-clock budget of the whole session is judged in the terminal summary
    record(8, outs[0] == outs[1] and same_scan, "outputs identical for 1 and 4 workers")
