"""End-to-end tests of the command-line tool."""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("EDGEWISE_CLI")
if CLI is None:
    root = pathlib.Path(__file__).resolve().parents[2]
    candidate = root / "build" / "tools" / "edgewise"
    CLI = str(candidate) if candidate.exists() else None

pytestmark = pytest.mark.skipif(CLI is None, reason="CLI binary not found")


def run(*args, **kwargs):
    env = dict(os.environ, NO_COLOR="1")
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env, **kwargs)


def test_local_h_pretty():
    res = run("local-h", "--n", "3", "--r", "4", "--method", "all")
    assert res.returncode == 0
    assert res.stdout.count("3x + 3x^2") == 3
    assert "agree: yes" in res.stdout


def test_local_h_json():
    res = run("--format", "json", "local-h", "--n", "3", "--r", "4", "--method", "all")
    data = json.loads(res.stdout)
    assert data["agree"] is True
    assert data["methods"]["definition"] == ["0", "3", "3"]


def test_gamma_json():
    res = run("--format", "json", "gamma", "--n", "4", "--r", "2")
    data = json.loads(res.stdout)
    assert data["xi"] == ["0", "0", "1"]
    assert data["methods_agree"] is True


def test_words_csv():
    res = run("words", "--n", "2", "--r", "4", "--stats")
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "word,asc,des,doubleAsc,doubleDesc,canonical,matchCount"
    assert lines[1] == '"0,1,0",1,1,0,0,true,0'
    assert len(lines) == 4


def test_words_canonical_only():
    res = run("words", "--n", "3", "--r", "4", "--canonical-only")
    # only the three descending words are canonical
    assert len(res.stdout.strip().splitlines()) == 4


def test_hop_class_single_word():
    res = run("--format", "json", "hop-class", "--n", "9", "--r", "3",
              "--word", "0,2,1,2,1,0,1,2,1,0")
    data = json.loads(res.stdout)
    assert len(data) == 1
    assert data[0]["size"] == 2
    assert data[0]["polynomial"] == ["0", "0", "0", "0", "1", "1"]


def test_roots():
    res = run("roots", "--n", "5", "--r", "3")
    assert res.returncode == 0
    assert "real-rooted: true" in res.stdout
    assert "5x^2 + 5x^3" in res.stdout


def test_lemma41():
    res = run("lemma41", "--n", "3", "--r", "3")
    assert res.returncode == 0
    assert "x + 4x^2 + x^3" in res.stdout
    assert "PASS" in res.stdout

    res = run("lemma41", "--n", "3", "--r", "3", "--vertex", "(9,9,9)")
    assert res.returncode == 2


def test_esd_roundtrip(tmp_path):
    out = tmp_path / "complex.json"
    res = run("esd", "--n", "3", "--r", "4", "--out", str(out))
    assert res.returncode == 0
    data = json.loads(out.read_text())
    assert len(data["vertices"]) == 15
    assert len(data["facets"]) == 16
    assert data["carrier"]["0"] == [2]  # (0,0,4) carries the last base vertex

    # feed the emitted complex back in for a further subdivision
    res = run("esd", "--r", "2", "--complex", str(out))
    assert res.returncode == 0
    nested = json.loads(res.stdout)
    assert len(nested["facets"]) == 16 * 4  # each triangle splits into r^2


def test_check_suites():
    res = run("check", "--suite", "theorem1", "--n-max", "4", "--r-max", "3")
    assert res.returncode == 0
    assert "PASS theorem1" in res.stdout

    res = run("--format", "json", "check", "--suite", "golden")
    data = json.loads(res.stdout)
    assert data[0]["pass"] is True
    assert len(data[0]["cells"]) == 3

    res = run("check", "--suite", "nonsense")
    assert res.returncode == 2


def test_usage_errors():
    assert run("local-h", "--n", "0", "--r", "3").returncode == 2
    assert run("local-h", "--n", "3").returncode == 2  # missing --r
    assert run("frobnicate").returncode == 2
    assert run("--help").returncode == 0


def test_lattice_guard():
    res = run("local-h", "--n", "9", "--r", "7", "--method", "definition")
    assert res.returncode == 2
    assert "--unsafe-large" in res.stderr
    # the closed-formula route has no face lattice to guard
    assert run("local-h", "--n", "9", "--r", "7", "--method", "operator").returncode == 0


def test_table_and_stats():
    res = run("table", "--n-max", "3", "--r-max", "4")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "n,r,f_vector,h,local_h,xi,real_rooted"
    row34 = next(line for line in lines if line.startswith("3,4"))
    assert '"(1,15,30,16)"' in row34
    assert "1 + 12x + 3x^2" in row34
    row33 = next(line for line in lines if line.startswith("3,3"))
    assert ",x + x^2," in row33
    row24 = next(line for line in lines if line.startswith("2,4"))
    assert ",3x," in row24

    res = run("table", "--n-max", "30", "--r-max", "30")
    assert res.returncode == 2
    assert "esd-stats" in res.stderr

    res = run("esd-stats", "--n-max", "10", "--r-max", "4")
    assert res.returncode == 0
    assert len(res.stdout.strip().splitlines()) == 41


def test_output_is_deterministic():
    a = run("check", "--suite", "structural", "--seed", "7")
    b = run("check", "--suite", "structural", "--seed", "7")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == 0
