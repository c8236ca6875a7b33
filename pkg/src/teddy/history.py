"""Detection mode: Py/NPy occurrences across the first-parent history of a repo."""

from __future__ import annotations

import json
import logging
import shutil
import subprocess
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .catalog import Catalog, CatalogValidationError, entry_snippet, validate_catalog
from .extract import extract_from_source, is_python_path
from .index import ThresholdConfig, build_index, search
from .lexer import LexError, tokenize
from .spans import collapse_overlaps

log = logging.getLogger(__name__)

# recall-leaning; top_k is wide so that one query can hit many files
DETECTION_CONFIG = ThresholdConfig.uniform("NTR", 20, top_k=10_000)

RECORD_FIELDS = (
    "commit_index",
    "commit_id",
    "file_path",
    "idiom_type",
    "label",
    "start_line",
    "end_line",
    "score",
)


class HistoryError(RuntimeError):
    pass


@dataclass(frozen=True)
class Occurrence:
    file_path: str
    idiom_type: str
    label: str
    start_line: int
    end_line: int
    score: float
    commit_index: int | None = None
    commit_id: str | None = None

    def sort_key(self) -> tuple:
        return (
            self.commit_index if self.commit_index is not None else -1,
            self.file_path,
            self.start_line,
            self.end_line,
            self.idiom_type,
            self.label,
        )

    def to_record(self) -> dict:
        return {name: getattr(self, name) for name in RECORD_FIELDS}


@dataclass
class Dataset:
    occurrences: list[Occurrence] = field(default_factory=list)
    commits: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.occurrences)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(o.to_record()) + "\n" for o in self.occurrences)


def scan_tree(
    files: Iterable[tuple[str, str]],
    catalog: Catalog,
    config: ThresholdConfig = DETECTION_CONFIG,
    warnings: list[str] | None = None,
) -> list[Occurrence]:
    """Query an index of the tree's snippets with every catalog entry.

    Each qualifying hit becomes an occurrence at the indexed snippet's lines;
    overlapping hits for the same file, idiom type and label keep the best.
    A span claimed by both labels of one idiom type goes to the higher score.
    """
    violations = validate_catalog(catalog)
    if violations:
        raise CatalogValidationError(violations)
    snippets = []
    for path, text in sorted(files):
        try:
            tokenize(text)
        except LexError as exc:
            message = f"{path}: skipped, {exc}"
            log.warning(message)
            if warnings is not None:
                warnings.append(message)
            continue
        snippets.extend(extract_from_source(text, path))
    if not snippets:
        return []
    index = build_index(snippets, config)

    found = []
    for entry in catalog:
        for hit in search(index, entry_snippet(entry), config):
            snippet = hit.snippet
            found.append(
                Occurrence(
                    snippet.file_path,
                    entry.idiom_type,
                    entry.label.value,
                    snippet.start_line,
                    snippet.end_line,
                    float(hit.aggregate),
                )
            )
    kept = collapse_overlaps(
        found,
        group=lambda o: (o.file_path, o.idiom_type, o.label),
        span=lambda o: (o.start_line, o.end_line),
        score=lambda o: o.score,
    )
    kept = collapse_overlaps(
        kept,
        group=lambda o: (o.file_path, o.idiom_type),
        span=lambda o: (o.start_line, o.end_line),
        score=lambda o: o.score,
        tiebreak=lambda o: o.label,
    )
    return sorted(kept, key=Occurrence.sort_key)


def git_available() -> bool:
    return shutil.which("git") is not None


def _git(repo: Path, *args: str, input: bytes | None = None) -> bytes:
    try:
        result = subprocess.run(
            ["git", "-C", str(repo), *args],
            input=input,
            capture_output=True,
            check=False,
        )
    except FileNotFoundError:
        raise HistoryError("git executable not found") from None
    if result.returncode != 0:
        raise HistoryError(f"git {' '.join(args)} failed: {result.stderr.decode(errors='replace').strip()}")
    return result.stdout


def first_parent_commits(repo: str | Path) -> list[str]:
    """Commit ids from the root to HEAD along first parents."""
    repo = Path(repo)
    if not repo.is_dir():
        raise HistoryError(f"not a directory: {repo}")
    try:
        _git(repo, "rev-parse", "--git-dir")
    except HistoryError:
        raise HistoryError(f"not a git repository: {repo}") from None
    out = _git(repo, "rev-list", "--first-parent", "--reverse", "HEAD")
    return out.decode().split()


def read_python_files(repo: str | Path, commit: str, warnings: list[str]) -> list[tuple[str, str]]:
    """(path, text) for every .py blob in the commit's tree."""
    repo = Path(repo)
    listing = _git(repo, "ls-tree", "-r", "-z", commit)
    blobs: list[tuple[str, str]] = []
    for record in listing.split(b"\0"):
        if not record:
            continue
        meta, _, raw_path = record.partition(b"\t")
        _mode, kind, sha = meta.split()
        path = raw_path.decode("utf-8", errors="surrogateescape")
        if kind == b"blob" and is_python_path(path):
            blobs.append((path, sha.decode()))
    if not blobs:
        return []

    payload = _git(repo, "cat-file", "--batch", input="".join(f"{sha}\n" for _, sha in blobs).encode())
    files = []
    offset = 0
    for path, sha in blobs:
        header_end = payload.index(b"\n", offset)
        header = payload[offset:header_end].split()
        if len(header) < 3 or header[1] != b"blob":
            warnings.append(f"{commit[:12]} {path}: unreadable blob")
            offset = header_end + 1
            continue
        size = int(header[2])
        body = payload[header_end + 1 : header_end + 1 + size]
        offset = header_end + 1 + size + 1
        try:
            files.append((path, body.decode("utf-8")))
        except UnicodeDecodeError:
            warnings.append(f"{commit[:12]} {path}: not UTF-8, skipped")
    return files


_worker_catalog: Catalog | None = None
_worker_config: ThresholdConfig | None = None


def _init_worker(catalog: Catalog, config: ThresholdConfig) -> None:
    global _worker_catalog, _worker_config
    _worker_catalog, _worker_config = catalog, config


def _scan_commit(job: tuple[int, str, list[tuple[str, str]]]) -> tuple[list[Occurrence], list[str]]:
    commit_index, commit_id, files = job
    warnings: list[str] = []
    occurrences = scan_tree(files, _worker_catalog, _worker_config, warnings)
    stamped = [
        Occurrence(
            o.file_path, o.idiom_type, o.label, o.start_line, o.end_line, o.score, commit_index, commit_id
        )
        for o in occurrences
    ]
    return stamped, [f"{commit_id[:12]} {w}" for w in warnings]


def walk_history(
    repo_path: str | Path,
    catalog: Catalog,
    config: ThresholdConfig = DETECTION_CONFIG,
    jobs: int = 1,
) -> Dataset:
    """Scan every first-parent commit, oldest first; output order never depends on ``jobs``."""
    commits = first_parent_commits(repo_path)
    dataset = Dataset(commits=commits)
    jobs_list = []
    for commit_index, commit_id in enumerate(commits):
        files = read_python_files(repo_path, commit_id, dataset.warnings)
        jobs_list.append((commit_index, commit_id, files))

    if jobs <= 1 or len(jobs_list) <= 1:
        _init_worker(catalog, config)
        results: Sequence = [_scan_commit(job) for job in jobs_list]
    else:
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(catalog, config)
        ) as pool:
            results = list(pool.map(_scan_commit, jobs_list))

    for occurrences, warnings in results:
        dataset.occurrences.extend(occurrences)
        dataset.warnings.extend(warnings)
    dataset.occurrences.sort(key=Occurrence.sort_key)
    return dataset
