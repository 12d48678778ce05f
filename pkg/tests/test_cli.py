import io
import json
import re
from pathlib import Path

import pytest

from omnisearch.cli import DEFAULT_FUEL, run

GOLDEN = Path(__file__).parent / "golden" / "cli.json"
ELAPSED = re.compile(r', "elapsed_ms": [0-9.]+|\telapsed_ms\b|\t[0-9.]+(?=\t\d+\t(ok|fuel)\t)')


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def normalize(text):
    return ELAPSED.sub("", text)


def load_golden():
    return json.loads(GOLDEN.read_text())


@pytest.mark.parametrize("case", load_golden(), ids=lambda c: " ".join(c["argv"])[:50])
def test_golden(case):
    code, out, _ = invoke(*case["argv"])
    assert code == case["exit"]
    assert normalize(out) == case["stdout"]


@pytest.mark.parametrize("argv, code", [
    (["search", "a[0] =="], 2),
    (["search", "a[0] == 1", "--space", "box", "3..1"], 2),
    (["search", "a[0] == 1", "--space", "box", "0..1", "--strategy", "lex"], 2),
    (["search", "a[0] == 1", "--fuel", "0"], 2),
    (["fan", "a[0] == 1"], 2),
    (["forest", "5"], 2),
    (["search", "a[30] == 1 && a[0] == 2", "--fuel", "1000"], 3),
    (["search", "99999999999999999999999 == 1"], 4),
    (["search", "(a[0] + 1) * 18446744073709551615 == 0"], 4),
])
def test_exit_codes(argv, code):
    got, _, err = invoke(*argv)
    assert got == code
    assert err.strip()


def test_search_json_schema():
    code, out, _ = invoke("search", "a[0]==1 && a[2]==1", "--strategy", "berger", "--json")
    report = json.loads(out)
    assert code == 0
    assert set(report) == {"witness", "solved", "strategy", "elapsed_ms"}
    assert report["witness"] == [1, 0, 1] and report["solved"] is True


def test_bench_json_schema():
    code, out, _ = invoke("bench", "modulus-sweep", "--moduli", "4..6", "--json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 12
    for row in rows:
        assert {"predicate", "strategy", "modulus", "elapsed_ms", "selector_calls"} <= set(row)


def test_bench_fuel_marks_rows_without_aborting():
    code, out, _ = invoke("bench", "equality", "--fuel", "300", "--json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert {r["status"] for r in rows} == {"ok", "fuel"}


def test_env_fuel_is_the_default(monkeypatch):
    argv = ["search", "a[14] == 1 && a[0] == 2"]
    monkeypatch.setenv("OMNISEARCH_FUEL", "200")
    assert invoke(*argv)[0] == 3
    # an explicit flag wins over the environment
    assert invoke(*argv, "--fuel", str(DEFAULT_FUEL))[0] == 0
    monkeypatch.setenv("OMNISEARCH_FUEL", "lots")
    assert invoke(*argv)[0] == 2


def test_results_are_reproducible():
    argv = ["search", "a[1] + a[4] == 1 && a[6] == 0", "--strategy", "fast", "--json"]
    first, second = (json.loads(invoke(*argv)[1]) for _ in range(2))
    first.pop("elapsed_ms"), second.pop("elapsed_ms")
    assert first == second
