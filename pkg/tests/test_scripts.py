import runpy
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run_script(name, *args, monkeypatch):
    monkeypatch.setattr(sys, "argv", [name, *args])
    runpy.run_path(str(SCRIPTS / name), run_name="__main__")


def test_k23_example(capsys, monkeypatch):
    run_script("k23_example.py", monkeypatch=monkeypatch)
    out = capsys.readouterr().out
    assert "(1, 2, 3, 1)" in out and "three-branch identity holds: True" in out


def test_predicate_sweep(capsys, monkeypatch, tmp_path):
    run_script("predicate_sweep.py", "--max-edges", "4", "--max-n", "4", "--outdir", str(tmp_path),
               monkeypatch=monkeypatch)
    assert sorted(p.name for p in tmp_path.iterdir())[0] == "complete-bipartite.json"
    assert "graphic" in capsys.readouterr().out


def test_series_boundary(capsys, monkeypatch):
    run_script("series_boundary.py", "--max-edges", "7", monkeypatch=monkeypatch)
    assert capsys.readouterr().out.strip().endswith("3 of 135 instances differ")
