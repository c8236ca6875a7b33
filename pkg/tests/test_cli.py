from __future__ import annotations

import json
import os
import shutil
import subprocess
import sys

import pytest
from conftest import ORDER_NPY, SHOW_NPY, make_repo

from teddy.catalog import bundled_catalog_path
from teddy.cli import main, resolve_config, build_parser
from teddy.index import Measure

SWAP_DIFF = (
    "diff --git a/app.py b/app.py\n--- a/app.py\n+++ b/app.py\n"
    "@@ -1,2 +1,5 @@\n def f(a, b):\n+    temp = a\n+    a = b\n+    b = temp\n     return a, b\n"
)
CLEAN_DIFF = "--- a/app.py\n+++ b/app.py\n@@ -1,1 +1,2 @@\n def f(a, b):\n+    return b, a\n"


@pytest.fixture
def diff_file(tmp_path):
    path = tmp_path / "change.diff"
    path.write_text(SWAP_DIFF)
    return path


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_diff_markdown_from_file(diff_file, capsys):
    code, out, _ = run(["check-diff", "--diff", str(diff_file)], capsys)
    assert code == 1
    assert "`app.py` lines 2-4: variable-swapping" in out
    assert "a, b = b, a" in out


def test_check_diff_from_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(SWAP_DIFF))
    code, out, _ = run(["check-diff", "--catalog", str(bundled_catalog_path())], capsys)
    assert code == 1 and "## Pythonic idiom recommendations" in out


def test_check_diff_json_and_clean_exit(tmp_path, capsys):
    clean = tmp_path / "clean.diff"
    clean.write_text(CLEAN_DIFF)
    code, out, _ = run(["check-diff", "--diff", str(clean), "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out) == {"recommendations": []}


def test_check_diff_writes_out_file(diff_file, tmp_path, capsys):
    target = tmp_path / "nested" / "report.md"
    code, out, _ = run(["check-diff", "--diff", str(diff_file), "--out", str(target)], capsys)
    assert code == 1 and out == ""
    assert "variable-swapping" in target.read_text()
    assert [p.name for p in target.parent.iterdir()] == ["report.md"]


def test_malformed_diff_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.diff"
    bad.write_text("--- a/x.py\n+++ b/x.py\n@@ what @@\n+x\n")
    code, _, err = run(["check-diff", "--diff", str(bad)], capsys)
    assert code == 2 and "malformed hunk header" in err


def test_usage_errors_are_exit_2(capsys):
    assert run(["check-diff", "--bogus"], capsys)[0] == 2
    assert run([], capsys)[0] == 2
    assert run(["check-diff", "--t0", "101"], capsys)[0] == 2
    assert run(["history", "--repo", "."], capsys)[0] == 2  # --out missing
    assert run(["check-diff", "--diff", "/no/such/file"], capsys)[0] == 2


def test_bad_catalog_is_exit_2(tmp_path, diff_file, capsys):
    code, _, err = run(["check-diff", "--catalog", str(tmp_path), "--diff", str(diff_file)], capsys)
    assert code == 2 and "manifest not found" in err


def test_env_catalog(monkeypatch, tmp_path, diff_file, capsys):
    monkeypatch.setenv("TEDDY_CATALOG", str(tmp_path))
    assert run(["check-diff", "--diff", str(diff_file)], capsys)[0] == 2
    monkeypatch.setenv("TEDDY_CATALOG", str(bundled_catalog_path()))
    assert run(["check-diff", "--diff", str(diff_file)], capsys)[0] == 1


def test_mode_defaults_and_overrides(tmp_path):
    parser = build_parser()
    assert resolve_config(parser.parse_args(["check-diff"])).thresholds == (40, 40, 40, 40)
    assert resolve_config(parser.parse_args(["scan", "x"])).thresholds == (20, 20, 20, 20)
    history = resolve_config(parser.parse_args(["history", "--repo", "r", "--out", "o"]))
    assert history.thresholds == (20, 20, 20, 20) and history.measure is Measure.NTR
    config = resolve_config(parser.parse_args(["check-diff", "--preset", "C3", "--t2", "70"]))
    assert (config.measure, config.thresholds) == (Measure.TSR, (40, 40, 70, 40))


def test_config_file_named_configs(tmp_path):
    path = tmp_path / "teddy.json"
    path.write_text(
        json.dumps(
            {
                "configs": {"picky": {"measure": "TSR", "t0": 80, "t1": 80, "t2": 60, "t3": 60, "top_k": 3}},
                "defaults": {"check-diff": "picky"},
            }
        )
    )
    parser = build_parser()
    config = resolve_config(parser.parse_args(["check-diff", "--config", str(path)]))
    assert (config.measure, config.thresholds, config.top_k) == (Measure.TSR, (80, 80, 60, 60), 3)
    config = resolve_config(parser.parse_args(["check-diff", "--config", str(path), "--threshold", "10"]))
    assert config.thresholds == (10, 10, 10, 10) and config.top_k == 3


@pytest.mark.parametrize(
    "content",
    [
        "{not json",
        json.dumps({"configs": {"x": {"t0": 500}}}),
        json.dumps({"configs": {"x": {"colour": "red"}}}),
        json.dumps({"defaults": {"check-diff": "nope"}}),
        json.dumps({"extra": 1}),
    ],
)
def test_bad_config_file_is_exit_2(tmp_path, diff_file, capsys, content):
    path = tmp_path / "teddy.json"
    path.write_text(content)
    assert run(["check-diff", "--config", str(path), "--diff", str(diff_file)], capsys)[0] == 2


def test_unknown_preset(diff_file, capsys):
    code, _, err = run(["check-diff", "--preset", "C9", "--diff", str(diff_file)], capsys)
    assert code == 2 and "C9" in err


def test_catalog_validate(tmp_path, capsys):
    code, out, _ = run(["catalog-validate"], capsys)
    assert code == 0 and "60 entries, no violations" in out
    broken = tmp_path / "cat"
    shutil.copytree(bundled_catalog_path(), broken)
    manifest = json.loads((broken / "catalog.json").read_text())
    manifest[0]["counterpart_id"] = "ghost"
    (broken / "catalog.json").write_text(json.dumps(manifest))
    code, out, _ = run(["catalog-validate", "--catalog", str(broken), "--format", "json"], capsys)
    assert code == 2
    rules = {v["rule"] for v in json.loads(out)["violations"]}
    assert "dangling-counterpart" in rules


def test_scan_json_table_and_out(tmp_path, capsys):
    tree = tmp_path / "tree"
    (tree / "pkg").mkdir(parents=True)
    (tree / "pkg" / "order.py").write_text(ORDER_NPY)
    (tree / "show.py").write_text(SHOW_NPY)
    (tree / ".hidden").mkdir()
    (tree / ".hidden" / "x.py").write_text(ORDER_NPY)
    code, out, _ = run(["scan", str(tree)], capsys)
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [(r["file_path"], r["idiom_type"]) for r in records] == [
        ("pkg/order.py", "variable-swapping"),
        ("show.py", "enumerate"),
    ]
    code, out, _ = run(["scan", str(tree), "--format", "table"], capsys)
    assert code == 0 and out.splitlines()[0].split() == ["file", "lines", "type", "label", "score"]
    code, _, _ = run(["scan", str(tree), "--out", str(tmp_path / "o")], capsys)
    assert code == 0 and (tmp_path / "o" / "timeline.html").exists()
    assert run(["scan", str(tmp_path / "nothing")], capsys)[0] == 2


def test_history_writes_outputs(tmp_path, capsys, catalog):
    repo = tmp_path / "repo"
    make_repo(repo, [{"f.py": catalog.get("swap-npy-0").snippet}, {"f.py": catalog.get("swap-py-0").snippet}])
    out = tmp_path / "out"
    code, stdout, _ = run(["history", "--repo", str(repo), "--out", str(out)], capsys)
    assert code == 0
    lines = (out / "occurrences.jsonl").read_text().splitlines()
    assert [json.loads(line)["label"] for line in lines] == ["NPy", "Py"]
    assert (out / "timeline.html").read_text().count('class="mark"') == 2
    assert "2 occurrences over 2 commits" in stdout
    assert not [p for p in out.iterdir() if p.name.endswith(".tmp")]
    assert os.stat(out / "timeline.html").st_mode & 0o044  # readable by others under the usual umask


def test_history_on_non_repo_is_exit_3(tmp_path, capsys):
    code, _, err = run(["history", "--repo", str(tmp_path), "--out", str(tmp_path / "o")], capsys)
    assert code == 3 and "not a git repository" in err


def test_eval_argument_checks(capsys):
    assert run(["eval", "--sweep", "builtin", "--threshold", "20"], capsys)[0] == 2
    assert run(["eval", "--sweep", "C1,C77"], capsys)[0] == 2
    assert run(["eval", "--truth", "/no/such.json", "--preset", "C4"], capsys)[0] == 2


def test_eval_single_config_json(capsys):
    code, out, _ = run(["eval", "--preset", "C4", "--format", "json"], capsys)
    assert code == 0
    (row,) = json.loads(out)
    assert row["name"] == "C4" and row["measure"] == "NTR"


def test_console_script_round_trip(diff_file):
    result = subprocess.run(
        [sys.executable, "-m", "teddy", "check-diff", "--diff", str(diff_file), "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 1
    assert json.loads(result.stdout)["recommendations"][0]["suggested_py"] == "swap-py-0"
