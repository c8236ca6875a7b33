"""JSON-lines dump and offline HTML scatter plot of a history dataset."""

from __future__ import annotations

import html
import json
from pathlib import Path

from .fsutil import atomic_write
from .history import Dataset

JSONL_NAME = "occurrences.jsonl"
HTML_NAME = "timeline.html"

COLORS = {"Py": "#2ca02c", "NPy": "#d62728"}

_LEFT = 260
_TOP = 40
_ROW = 28
_COL = 36
_RADIUS = 6

_STYLE = """
body { font-family: sans-serif; margin: 1.5em; color: #222; }
.axis { stroke: #888; stroke-width: 1; }
.grid { stroke: #eee; stroke-width: 1; }
.tick { font-size: 11px; fill: #555; }
.file { font-size: 12px; font-family: monospace; fill: #222; }
.mark { stroke: #fff; stroke-width: 1; opacity: 0.9; }
.mark:hover { stroke: #000; stroke-width: 2; }
.legend span { display: inline-block; margin-right: 1.5em; }
.swatch { display: inline-block; width: 10px; height: 10px; border-radius: 5px; margin-right: 4px; }
"""


def _label_offset(label: str) -> int:
    # Py above the row line, NPy below, so both stay visible in one commit
    return -4 if label == "Py" else 4


def render_html(dataset: Dataset, title: str = "Pythonic idiom timeline") -> str:
    occurrences = dataset.occurrences
    files = sorted({o.file_path for o in occurrences})
    row_of = {path: i for i, path in enumerate(files)}
    n_commits = max(
        len(dataset.commits),
        1 + max((o.commit_index or 0 for o in occurrences), default=-1),
        1,
    )
    width = _LEFT + _COL * n_commits + 40
    height = _TOP + _ROW * max(len(files), 1) + 50
    x_axis_y = _TOP + _ROW * max(len(files), 1)

    def x(commit_index: int) -> int:
        return _LEFT + _COL * commit_index + _COL // 2

    def y(row: int) -> int:
        return _TOP + _ROW * row + _ROW // 2

    svg = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" role="img">'
    ]
    for path, row in row_of.items():
        svg.append(f'<line class="grid" x1="{_LEFT}" y1="{y(row)}" x2="{width - 20}" y2="{y(row)}"/>')
        svg.append(
            f'<text class="file" x="{_LEFT - 8}" y="{y(row) + 4}" text-anchor="end">{html.escape(path)}</text>'
        )
    svg.append(f'<line class="axis" x1="{_LEFT}" y1="{x_axis_y}" x2="{width - 20}" y2="{x_axis_y}"/>')
    svg.append(f'<line class="axis" x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{x_axis_y}"/>')
    step = max(1, n_commits // 25)
    for commit_index in range(0, n_commits, step):
        svg.append(
            f'<text class="tick" x="{x(commit_index)}" y="{x_axis_y + 16}" '
            f'text-anchor="middle">{commit_index}</text>'
        )
    svg.append(
        f'<text class="tick" x="{_LEFT + (width - _LEFT) // 2}" y="{x_axis_y + 36}" '
        f'text-anchor="middle">commit</text>'
    )
    for o in occurrences:
        hover = (
            f"{o.idiom_type} ({o.label}) lines ({o.start_line}, {o.end_line})\n"
            f"commit {o.commit_index} {o.commit_id or ''}\n{o.file_path}"
        )
        svg.append(
            f'<circle class="mark" data-label="{o.label}" cx="{x(o.commit_index or 0)}" '
            f'cy="{y(row_of[o.file_path]) + _label_offset(o.label)}" r="{_RADIUS}" '
            f'fill="{COLORS.get(o.label, "#888")}"><title>{html.escape(hover)}</title></circle>'
        )
    svg.append("</svg>")

    # "</" inside the embedded JSON would end the script element early
    data = json.dumps([o.to_record() for o in occurrences]).replace("</", "<\\/")
    return "\n".join(
        [
            "<!DOCTYPE html>",
            '<html lang="en">',
            "<head>",
            '<meta charset="utf-8">',
            f"<title>{html.escape(title)}</title>",
            f"<style>{_STYLE}</style>",
            "</head>",
            "<body>",
            f"<h1>{html.escape(title)}</h1>",
            f"<p>{len(occurrences)} occurrences in {len(files)} files over {len(dataset.commits)} commits. "
            "Hover a mark for the idiom type and line range.</p>",
            '<p class="legend">'
            f'<span><i class="swatch" style="background:{COLORS["Py"]}"></i>Pythonic idiom (Py)</span>'
            f'<span><i class="swatch" style="background:{COLORS["NPy"]}"></i>non-Pythonic (NPy)</span></p>',
            *svg,
            f'<script type="application/json" id="occurrences">{data}</script>',
            "</body>",
            "</html>",
            "",
        ]
    )


def emit_timeline(dataset: Dataset, out_dir: str | Path) -> tuple[Path, Path]:
    out = Path(out_dir)
    jsonl = atomic_write(out / JSONL_NAME, dataset.to_jsonl())
    page = atomic_write(out / HTML_NAME, render_html(dataset))
    return jsonl, page
