from __future__ import annotations

import json
import subprocess
import sys

import pytest

from dendriform.cli import TSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_types(capsys):
    code, out, _ = run(capsys, "types", "--degree", "7")
    assert code == 0 and out.strip() == "96 TT-types, 429 DD-types"
    code, out, _ = run(capsys, "types", "--degree", "3", "--list")
    lines = out.splitlines()
    assert lines[1] == "TT 1\t[*,*,*]_1" and len(lines) == 1 + 2 + 5


def test_types_even_degree(capsys):
    code, _, err = run(capsys, "types", "--degree", "4")
    assert code == 2 and "odd" in err


def test_analyze_degree3(capsys):
    code, out, _ = run(capsys, "analyze", "--degree", "3", "--op", "prelie")
    data = json.loads(out)
    assert code == 0
    assert (data["rank"], data["nullity"], data["dims"]) == (9, 3, {"TT": 12, "DD": 30})
    assert data["generators"][0]["pretty"] == "[a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2"
    assert data["generators"][0]["terms"] == [[1, 1], [2, -1], [7, -1], [8, 1]]


def test_analyze_writes_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "analyze", "--degree", "3", "--op", "prejordan", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["nullity"] == 0


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice")
    data = json.loads(out)
    assert code == 0
    assert data["dims"]["Dias"] == 30 and data["dims"]["Dend"] == 18


def test_degree7_small(tmp_path, capsys):
    tsv = tmp_path / "table.tsv"
    code, out, _ = run(
        capsys, "degree7", "--op", "prejordan", "--partition", "211111", "--partition", "7", "--tsv", str(tsv)
    )
    data = json.loads(out)
    assert code == 0
    assert [r["partition"] for r in data["reports"]] == ["211111", "7"]
    assert data["total_new"] == 1
    assert data["identities"][0]["verified"] is True
    rows = [line.split("\t") for line in tsv.read_text().splitlines()]
    assert tuple(rows[0]) == TSV_HEADER
    assert rows[1] == ["211111", "6", "480", "576", "184", "576", "2574", "391", "185", "1"]


def test_prime_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("DENDRIFORM_PRIME", "103")
    code, out, _ = run(capsys, "degree7", "--op", "prelie", "--partition", "1111111", "--no-extract")
    assert code == 0 and json.loads(out)["prime"] == 103
    code, out, _ = run(capsys, "analyze", "--degree", "3", "--op", "prelie", "--prime", "107")
    assert json.loads(out)["prime"] == 107


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--degree", "3", "--op", "prelie", "--prime", "100"],
        ["degree7", "--op", "prelie", "--prime", "7"],
        ["degree7", "--op", "prelie", "--partition", "42"],
    ],
)
def test_bad_arguments_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "degree7", "--op", "prelie", "--partition", "61", "--no-extract")
    _, second, _ = run(capsys, "degree7", "--op", "prelie", "--partition", "61", "--no-extract")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dendriform", "types", "--degree", "5"], capture_output=True, text=True, check=True
    )
    assert proc.stdout.strip() == "12 TT-types, 42 DD-types"
