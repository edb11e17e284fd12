import io
import json

import pytest

from rgfaudit.cli import main


def run(*argv, env=None, monkeypatch=None):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_avoid_count():
    assert run("avoid", "--n", "5", "--patterns", "12/3,1/24/3", "--count") == (0, "8\n")


def test_stats_word():
    assert run("stats", "--word", "123243125", "--all") == (0, "lb=7 ls=14 rb=17 rs=9\n")


def test_bijection_apply():
    assert run("bijection", "--id", "PHI_FLIP", "--word", "122233213") == (0, "123222133\n")
    assert run("bijection", "--id", "PHI_FLIP", "--word", "123222133", "--inverse")[1] == "122233213\n"


def test_bijection_verify_json():
    code, text = run("bijection", "--id", "PHI_PAIR", "--n", "6", "--json")
    assert code == 0 and json.loads(text)["ok"]


def test_usage_errors():
    assert run("avoid", "--n", "5", "--patterns", "12/x")[0] == 2
    assert run("avoid", "--n", "5")[0] == 2
    assert run("stats", "--word", "13")[0] == 2
    assert run("bogus")[0] == 2


def test_budget(monkeypatch):
    assert run("avoid", "--n", "10", "--patterns", "12/3")[0] == 3
    assert run("avoid", "--n", "5", "--n-max", "12", "--patterns", "12/3")[0] == 3
    assert run("avoid", "--n", "10", "--n-max", "10", "--patterns", "12/3") == (0, "46\n")
    monkeypatch.setenv("RGF_BUDGET", "12")
    assert run("avoid", "--n", "5", "--n-max", "12", "--patterns", "12/3")[0] == 0


def test_deterministic_and_thread_independent():
    a = run("avoid", "--n", "6", "--patterns", "1/24/3", "--list")
    b = run("avoid", "--n", "6", "--patterns", "1/24/3", "--list", "--threads", "2")
    assert a == b
    assert a == run("avoid", "--n", "6", "--patterns", "1/24/3", "--list")


def test_json_round_trip():
    code, text = run("avoid", "--n", "4", "--patterns", "1/2/3", "--list", "--json")
    data = json.loads(text)
    assert data["count"] == len(data["words"]) == 8


def test_dist_csv(tmp_path):
    path = tmp_path / "d.csv"
    code, text = run("dist", "--n", "5", "--patterns", "13/2/4", "--stat", "ls",
                     "--csv", str(path))
    assert code == 0
    content = path.read_bytes().decode("utf-8")
    assert content.startswith("value,count\n") and "\r" not in content
    assert content == text


def test_enumerate():
    assert run("enumerate", "--n", "6", "--count") == (0, "203\n")


def test_audit_formula_mismatches_exit_zero():
    code, text = run("audit", "--id", "card:1/234", "--n-max", "6")
    assert code == 0 and "mismatch" in text


def test_equiscan_and_conjecture(tmp_path):
    code, text = run("equiscan", "--patterns", "13/2/4;1/24/3", "--n-max", "5")
    assert code == 0 and "split-classes:ls~rb" in text
    code, text = run("conjecture", "--k", "3", "--l", "4", "--n-max", "5",
                     "--csv", str(tmp_path / "c.csv"))
    assert code == 0 and "ii" in text
    assert (tmp_path / "c.csv").read_text().startswith("pi1,pi2,case")
