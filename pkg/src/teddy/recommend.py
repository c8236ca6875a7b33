"""Prevention mode: flag non-Pythonic code added by a patch."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import Catalog, CatalogValidationError, Label, entry_snippet, validate_catalog
from .extract import Snippet, extract_from_diff
from .index import Index, ThresholdConfig, build_index, rank, score_all
from .lexer import LexError
from .spans import collapse_overlaps

PREVENTION_CONFIG = ThresholdConfig.uniform("NTR", 40)


class ConsistencyError(RuntimeError):
    """A recommendation references an entry the catalog does not hold."""


@dataclass(frozen=True)
class Recommendation:
    file_path: str
    start_line: int
    end_line: int
    matched_npy: str
    suggested_py: str
    score: Fraction
    idiom_type: str

    @property
    def location(self) -> tuple[str, int, int]:
        return (self.file_path, self.start_line, self.end_line)

    def to_dict(self) -> dict:
        return {
            "file_path": self.file_path,
            "start_line": self.start_line,
            "end_line": self.end_line,
            "idiom_type": self.idiom_type,
            "matched_npy": self.matched_npy,
            "suggested_py": self.suggested_py,
            "score": float(self.score),
        }


def _best_by_type(index: Index, snippet: Snippet, config: ThresholdConfig, types: dict[str, str]) -> dict[str, int]:
    best: dict[str, int] = {}
    for hit in score_all(index, snippet, config):
        idiom_type = types[hit.doc_id]
        best[idiom_type] = max(best.get(idiom_type, 0), sum(hit.scores))
    return best


def analyze_diff(
    diff: str, catalog: Catalog, config: ThresholdConfig = PREVENTION_CONFIG
) -> list[Recommendation]:
    """Match every added-line run against the NPy entries of the catalog.

    A run that already resembles the Py side of an idiom type at least as
    closely as its NPy side gets no recommendation for that type.  The
    comparison ignores thresholds, so stricter configs never add findings.

    Raises DiffParseError for a malformed diff and CatalogValidationError if
    the catalog pairing is broken.
    """
    violations = validate_catalog(catalog)
    if violations:
        raise CatalogValidationError(violations)
    snippets = extract_from_diff(diff)
    if not snippets:
        return []
    npys = catalog.with_label(Label.NPY)
    pys = catalog.with_label(Label.PY)
    npy_index = build_index([entry_snippet(e) for e in npys], config, ids=[e.id for e in npys])
    py_index = build_index([entry_snippet(e) for e in pys], config, ids=[e.id for e in pys])
    types = {e.id: e.idiom_type for e in catalog}
    unfiltered = ThresholdConfig(config.measure, 0, 0, 0, 0, ngram_n=config.ngram_n, top_k=config.top_k)

    found = []
    for snippet in snippets:
        try:
            hits = rank(hit for hit in score_all(npy_index, snippet, config) if hit.qualifies)
        except LexError:
            # half of a multi-line string may be all a hunk adds
            continue
        if not hits:
            continue
        npy_best = _best_by_type(npy_index, snippet, unfiltered, types)
        py_best = _best_by_type(py_index, snippet, unfiltered, types)
        hits = [h for h in hits if npy_best[types[h.doc_id]] > py_best.get(types[h.doc_id], -1)]
        if not hits:
            continue
        best = hits[0]
        npy = catalog.get(best.doc_id)
        found.append(
            Recommendation(
                snippet.file_path,
                snippet.start_line,
                snippet.end_line,
                npy.id,
                npy.counterpart_id,
                best.aggregate,
                npy.idiom_type,
            )
        )
    kept = collapse_overlaps(
        found,
        group=lambda r: (r.file_path, r.idiom_type),
        span=lambda r: (r.start_line, r.end_line),
        score=lambda r: r.score,
        tiebreak=lambda r: r.matched_npy,
    )
    return sorted(kept, key=lambda r: (r.file_path, r.start_line, r.end_line, r.idiom_type))


def _lines(rec: Recommendation) -> str:
    if rec.start_line == rec.end_line:
        return f"line {rec.start_line}"
    return f"lines {rec.start_line}-{rec.end_line}"


def render_comment(recs: list[Recommendation], catalog: Catalog) -> str:
    """Markdown review comment; empty string when there is nothing to say."""
    if not recs:
        return ""
    parts = [
        "## Pythonic idiom recommendations",
        "",
        f"Found {len(recs)} non-Pythonic snippet{'s' if len(recs) != 1 else ''} in this change.",
    ]
    for rec in sorted(recs, key=lambda r: (r.file_path, r.start_line, r.end_line)):
        if rec.matched_npy not in catalog or rec.suggested_py not in catalog:
            raise ConsistencyError(f"unknown catalog entry in recommendation for {rec.file_path}")
        npy = catalog.get(rec.matched_npy)
        py = catalog.get(rec.suggested_py)
        parts += [
            "",
            f"### `{rec.file_path}` {_lines(rec)}: {rec.idiom_type}",
            "",
            f"**Non-Pythonic:** {npy.description}.",
            "",
            f"**Pythonic alternative:** {py.description}, for example:",
            "",
            "```python",
            py.snippet.rstrip("\n"),
            "```",
        ]
    return "\n".join(parts) + "\n"
