from __future__ import annotations

import os
import subprocess
from pathlib import Path

import pytest

from teddy.catalog import load_bundled_catalog

GIT_ENV = {
    "GIT_AUTHOR_NAME": "Fixture",
    "GIT_AUTHOR_EMAIL": "fixture@example.invalid",
    "GIT_COMMITTER_NAME": "Fixture",
    "GIT_COMMITTER_EMAIL": "fixture@example.invalid",
    "GIT_CONFIG_GLOBAL": os.devnull,
    "GIT_CONFIG_NOSYSTEM": "1",
}


def git(repo: Path, *args: str, when: int = 0) -> str:
    env = dict(os.environ, **GIT_ENV)
    stamp = f"{1_700_000_000 + when * 3600} +0000"
    env["GIT_AUTHOR_DATE"] = env["GIT_COMMITTER_DATE"] = stamp
    result = subprocess.run(
        ["git", "-C", str(repo), *args], env=env, capture_output=True, text=True, check=True
    )
    return result.stdout


def make_repo(path: Path, commits: list[dict[str, str | None]]) -> list[str]:
    """Create a linear repo; each commit maps file path -> text (None deletes).

    Author, committer and dates are pinned so commit ids are reproducible.
    """
    path.mkdir(parents=True, exist_ok=True)
    git(path, "init", "-q", "-b", "main")
    ids = []
    for k, changes in enumerate(commits):
        for name, text in changes.items():
            target = path / name
            if text is None:
                target.unlink()
                git(path, "rm", "-q", "--cached", name)
                continue
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text)
            git(path, "add", name)
        git(path, "commit", "-q", "--allow-empty", "-m", f"commit {k}", when=k)
        ids.append(git(path, "rev-parse", "HEAD").strip())
    return ids


# Small single-function files: each file is one snippet, so an occurrence
# spans the whole file.
SHOW_NPY = "def show(items):\n    for index in range(len(items)):\n        print(index, items[index])\n"
SHOW_PY = "def show(items):\n    for index, item in enumerate(items):\n        print(index, item)\n"
ORDER_NPY = (
    "def order(a, b):\n    if a > b:\n        temp = a\n        a = b\n        b = temp\n    return a, b\n"
)
ORDER_PY = "def order(a, b):\n    if a > b:\n        a, b = b, a\n    return a, b\n"
CLAMP = "def clamp(value, lower, upper):\n    return max(lower, min(value, upper))\n"

# show.py flips NPy -> Py once; order.py flips NPy -> Py -> NPy.
FIVE_COMMITS: list[dict[str, str | None]] = [
    {"show.py": SHOW_NPY, "order.py": ORDER_NPY, "README.md": "fixture\n"},
    {"order.py": ORDER_PY},
    {"show.py": SHOW_PY},
    {"order.py": ORDER_NPY},
    {"util/clamp.py": CLAMP},
]

_SPANS = {SHOW_NPY: 3, SHOW_PY: 3, ORDER_NPY: 6, ORDER_PY: 4}
_KIND = {
    SHOW_NPY: ("enumerate", "NPy"),
    SHOW_PY: ("enumerate", "Py"),
    ORDER_NPY: ("variable-swapping", "NPy"),
    ORDER_PY: ("variable-swapping", "Py"),
}


def five_commit_truth(commit_ids: list[str]) -> list[dict]:
    """Expected occurrence records, derived from the scripted file states."""
    state: dict[str, str] = {}
    records = []
    for k, changes in enumerate(FIVE_COMMITS):
        for name, text in changes.items():
            if text is None:
                state.pop(name, None)
            else:
                state[name] = text
        for name in sorted(state):
            text = state[name]
            if text not in _KIND:
                continue
            idiom_type, label = _KIND[text]
            records.append(
                {
                    "commit_index": k,
                    "commit_id": commit_ids[k],
                    "file_path": name,
                    "idiom_type": idiom_type,
                    "label": label,
                    "start_line": 1,
                    "end_line": _SPANS[text],
                    "score": 100.0,
                }
            )
    return records


@pytest.fixture(scope="session")
def catalog():
    return load_bundled_catalog()


@pytest.fixture
def five_commit_repo(tmp_path):
    repo = tmp_path / "repo"
    ids = make_repo(repo, FIVE_COMMITS)
    return repo, ids


def rename_identifiers(source: str, rename) -> str:
    """Apply ``rename(name)`` to every identifier token, consistently."""
    from teddy.lexer import TokenKind, tokenize

    offsets = [0]
    for line in source.splitlines(keepends=True):
        offsets.append(offsets[-1] + len(line))
    out, last = [], 0
    for tok in tokenize(source):
        if tok.kind is not TokenKind.IDENTIFIER:
            continue
        start = offsets[tok.line - 1] + tok.column - 1  # columns are 1-based
        out.append(source[last:start])
        out.append(rename(tok.text))
        last = start + len(tok.text)
    out.append(source[last:])
    return "".join(out)


# acceptance verdicts, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
