"""Cut Python sources and unified diffs into query/index snippets."""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from enum import Enum

from .lexer import LexError, TokenKind, tokenize

DEFAULT_WINDOW = 8


class Origin(str, Enum):
    FILE_WINDOW = "file-window"
    FUNCTION_BLOCK = "function-block"
    DIFF_HUNK = "diff-hunk"
    CATALOG = "catalog"


@dataclass(frozen=True)
class Snippet:
    source_text: str
    file_path: str
    start_line: int
    end_line: int
    origin: Origin

    @property
    def key(self) -> str:
        """Stable identity used as an index document id."""
        return f"{self.file_path}:{self.start_line}-{self.end_line}"


class DiffParseError(ValueError):
    pass


def is_python_path(path: str) -> bool:
    return path.endswith(".py")


def logical_line_spans(source: str) -> list[tuple[int, int]]:
    """(first, last) physical lines of each logical line that carries tokens."""
    spans: list[tuple[int, int]] = []
    start = end = None
    for tok in tokenize(source):
        if tok.kind is TokenKind.NEWLINE:
            spans.append((start, end))
            start = end = None
            continue
        if start is None:
            start = tok.line
        end = tok.line + tok.text.count("\n")
    if start is not None:
        spans.append((start, end))
    return spans


def _slice(lines: list[str], start: int, end: int) -> str:
    return "".join(lines[start - 1 : end])


def _function_spans(source: str) -> list[tuple[int, int]]:
    try:
        tree = ast.parse(source)
    except (SyntaxError, ValueError):
        return []
    return [
        (node.lineno, node.end_lineno or node.lineno)
        for node in ast.walk(tree)
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef))
    ]


def extract_from_source(source: str, path: str, window: int = DEFAULT_WINDOW) -> list[Snippet]:
    """Function blocks plus stride-1 windows of ``window`` logical lines.

    Sources that do not lex yield no snippets.  Blank and comment-only lines
    are not counted towards a window but stay inside its text.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    try:
        spans = logical_line_spans(source)
    except LexError:
        return []
    if not spans:
        return []
    lines = source.splitlines(keepends=True)

    found: dict[tuple[int, int], Origin] = {}
    for start, end in sorted(_function_spans(source)):
        found.setdefault((start, end), Origin.FUNCTION_BLOCK)
    width = min(window, len(spans))
    for i in range(len(spans) - width + 1):
        found.setdefault((spans[i][0], spans[i + width - 1][1]), Origin.FILE_WINDOW)

    return [
        Snippet(_slice(lines, start, end), path, start, end, origin)
        for (start, end), origin in sorted(found.items())
    ]


_HUNK_HEADER = re.compile(r"^@@ -(\d+)(?:,(\d+))? \+(\d+)(?:,(\d+))? @@")


def _diff_target(line: str) -> str | None:
    path = line[4:].rstrip("\n").split("\t")[0].strip()
    if path == "/dev/null":
        return None
    if path.startswith("b/"):
        path = path[2:]
    return path


def extract_from_diff(diff: str) -> list[Snippet]:
    """One snippet per run of added lines in each hunk of a .py file.

    Line numbers refer to the post-image file.  Deleted files, context and
    removed lines contribute nothing.
    """
    snippets: list[Snippet] = []
    target: str | None = None
    new_line = 0
    old_left = new_left = 0
    run: list[str] = []
    run_start = 0
    in_hunk = False

    def flush() -> None:
        nonlocal run
        if run and target is not None and is_python_path(target):
            snippets.append(
                Snippet("".join(run), target, run_start, run_start + len(run) - 1, Origin.DIFF_HUNK)
            )
        run = []

    for raw in diff.splitlines(keepends=True):
        line = raw.rstrip("\r\n")
        if in_hunk and (old_left > 0 or new_left > 0):
            tag = line[:1]
            if tag == "+":
                if not run:
                    run_start = new_line
                run.append(raw[1:] if raw.endswith("\n") else raw[1:] + "\n")
                new_line += 1
                new_left -= 1
                continue
            if tag == "-":
                flush()
                old_left -= 1
                continue
            if tag == " " or line == "":
                flush()
                new_line += 1
                old_left -= 1
                new_left -= 1
                continue
            if tag == "\\":
                continue
            # hunk ended early; fall through to header handling
            flush()
            in_hunk = False
        elif in_hunk and line.startswith("\\"):
            continue
        else:
            flush()
            in_hunk = False

        if line.startswith("+++ "):
            target = _diff_target(line)
        elif line.startswith("diff --git "):
            target = None
        elif line.startswith("@@"):
            match = _HUNK_HEADER.match(line)
            if not match:
                raise DiffParseError(f"malformed hunk header: {line!r}")
            old_left = int(match.group(2)) if match.group(2) is not None else 1
            new_line = int(match.group(3))
            new_left = int(match.group(4)) if match.group(4) is not None else 1
            in_hunk = True
    flush()
    return snippets
