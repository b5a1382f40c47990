import io
import json

import pytest

from moncoh import cli
from moncoh.lab import Verdict

M2 = '{"num_vars": 2, "field_char": 0, "generators": [[1, 0], [0, 1]]}'
PTS3 = '{"vertex_count": 3, "facets": [[0], [1], [2]]}'


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_ext_maximal_ideal_json():
    code, text = run("ext", "--ideal", M2, "--i", "2", "--json")
    assert code == 0
    table = json.loads(text)
    assert [c["rep"] for c in table["chambers"] if c["dim"]] == [[-1, -1]]


def test_ext_pretty_and_bracket():
    code, text = run("ext", "--ideal", M2, "--i", "2", "--bracket", "2")
    assert code == 0 and "-2<=a1<=-1, -2<=a2<=-1" in text


def test_local_cohomology_commands():
    assert run("lc-a", "--ideal", M2, "--i", "2")[0] == 0
    code, text = run("lc-m", "--ideal", M2, "--j", "0", "--json")
    assert [c["rep"] for c in json.loads(text)["chambers"] if c["dim"]] == [[0, 0]]


def test_check_vanishing_three_points():
    code, text = run("check", "vanishing", "--complex", PTS3)
    verdict = json.loads(text)
    assert code == 0 and verdict["result"] == "holds"
    assert verdict["instance"]["nonvanishing"] == [[2, 1]]


@pytest.mark.parametrize("argv", [
    ["check", "injectivity", "--ideal", M2, "--k", "2"],
    ["check", "depth", "--ideal", M2],
    ["check", "ext-tor", "--ideal", M2, "--coeff", '{"num_vars": 2, "field_char": 0, "generators": [[1, 0]]}'],
    ["check", "purity", "--ideal", M2],
    ["check", "rspan", "--ideal", M2, "--j", "0"],
    ["check", "phi-iso", "--ideal", M2, "--k", "3"],
    ["check", "example-3-2", "--d", "2", "--t", "1"],
])
def test_check_commands_pass(argv):
    code, text = run(*argv)
    assert code == 0
    assert all(json.loads(line)["result"] in ("holds", "window-limited") for line in text.splitlines())


def test_input_errors_exit_2(capsys, tmp_path):
    assert run("ext", "--ideal", "{broken", "--i", "1")[0] == 2
    assert "--ideal" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text('{"num_vars": 2, "field_char": 9, "generators": []}')
    assert run("lc-a", "--ideal", str(bad), "--i", "0")[0] == 2
    assert str(bad) in capsys.readouterr().err
    assert run("check", "ext-tor", "--ideal", '{"num_vars": 2, "field_char": 0, "generators": [[1, 1]]}',
               "--coeff", M2)[0] == 2
    assert run("ext", "--i", "1")[0] == 2


def test_guaranteed_failure_exit_1(monkeypatch):
    def fake(a, k, t_max):
        return [Verdict("ext-chain-injectivity", {}, "fails", {"chamber": None})]
    monkeypatch.setattr(cli.lab, "check_injectivity_chain", fake)
    assert run("check", "injectivity", "--ideal", M2)[0] == 1


def test_exploratory_failure_exit_0():
    # (x^2, xy) fails injectivity at i = 2, but nothing is guaranteed there
    code, text = run("check", "injectivity", "--ideal",
                     '{"num_vars": 2, "field_char": 0, "generators": [[2, 0], [1, 1]]}', "--t-max", "0")
    assert code == 0 and '"fails"' in text


def test_corpus_and_sweep(tmp_path):
    code, text = run("corpus", "--vars", "3", "--mode", "all-squarefree", "--out", str(tmp_path))
    assert code == 0 and json.loads(text)["count"] == 19
    assert len(list(tmp_path.glob("*.json"))) == 19
    code, text = run("sweep", "--corpus", str(tmp_path), "--checks", "injectivity,vanishing,duality")
    report = json.loads(text)
    assert code == 0 and report["files"] == 19
    assert sum(n for per in report["totals"].values() for n in per.values()) == report["verdict_count"]
    assert report["verdict_count"] == len(report["verdicts"])
    recount = {}
    for v in report["verdicts"]:
        recount.setdefault(v["claim"], {}).setdefault(v["result"], 0)
        recount[v["claim"]][v["result"]] += 1
    assert recount == report["totals"]


def test_sweep_deterministic_across_worker_caps(tmp_path, monkeypatch):
    run("corpus", "--vars", "3", "--mode", "random-monomial", "--count", "6", "--seed", "5", "--out", str(tmp_path))
    monkeypatch.setenv("MONCOH_WORKERS", "1")
    first = run("sweep", "--corpus", str(tmp_path), "--checks", "injectivity,depth,criterion")[1]
    monkeypatch.setenv("MONCOH_WORKERS", "2")
    monkeypatch.setattr(cli.os, "cpu_count", lambda: 4)
    assert cli._workers() == 2
    second = run("sweep", "--corpus", str(tmp_path), "--checks", "injectivity,depth,criterion")[1]
    assert first == second


def test_sweep_rejects_unknown_check(tmp_path):
    assert run("sweep", "--corpus", str(tmp_path), "--checks", "bogus")[0] == 2
    assert run("sweep", "--corpus", str(tmp_path / "missing"))[0] == 2


def test_bad_worker_cap(tmp_path, monkeypatch):
    run("corpus", "--vars", "2", "--out", str(tmp_path))
    monkeypatch.setenv("MONCOH_WORKERS", "many")
    assert run("sweep", "--corpus", str(tmp_path))[0] == 2


def test_corpus_output_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run("corpus", "--vars", "3", "--mode", "random-m-primary", "--count", "5", "--seed", "9", "--out", str(a))
    run("corpus", "--vars", "3", "--mode", "random-m-primary", "--count", "5", "--seed", "9", "--out", str(b))
    assert [p.read_bytes() for p in sorted(a.iterdir())] == [p.read_bytes() for p in sorted(b.iterdir())]
