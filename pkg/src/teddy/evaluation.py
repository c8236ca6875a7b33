"""Retrieval accuracy of idiom matching: MAP, MRR, query recall, overall recall."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .catalog import Catalog, entry_snippet
from .extract import extract_from_source
from .index import Measure, ThresholdConfig, build_index, rank, score_all

GROUPS = ("Normal", "Py", "NPy")

BUILTIN_CONFIGS: dict[str, ThresholdConfig] = {
    "C1": ThresholdConfig.uniform(Measure.TSR, 0),
    "C2": ThresholdConfig.uniform(Measure.NTR, 0),
    "C3": ThresholdConfig.uniform(Measure.TSR, 40),
    "C4": ThresholdConfig.uniform(Measure.NTR, 40),
}


class TruthError(ValueError):
    def __init__(self, problems: list[str]) -> None:
        self.problems = problems
        super().__init__("invalid ground truth: " + "; ".join(problems))


def average_precision(ranked: Sequence[str], relevant: set[str] | frozenset[str]) -> Fraction:
    if not relevant:
        raise ValueError("average precision needs a non-empty relevant set")
    hits = 0
    total = Fraction(0)
    for k, item in enumerate(ranked, start=1):
        if item in relevant:
            hits += 1
            total += Fraction(hits, k)
    return total / len(relevant)


def reciprocal_rank(ranked: Sequence[str], relevant: set[str] | frozenset[str]) -> Fraction:
    for k, item in enumerate(ranked, start=1):
        if item in relevant:
            return Fraction(1, k)
    return Fraction(0)


@dataclass(frozen=True)
class QueryResult:
    query_id: str
    ranked: tuple[str, ...]
    relevant: frozenset[str]

    def __post_init__(self) -> None:
        if len(set(self.ranked)) != len(self.ranked):
            raise ValueError(f"{self.query_id}: ranked list has duplicates")

    @property
    def retrieved_relevant(self) -> frozenset[str]:
        return frozenset(self.ranked) & self.relevant

    @property
    def recall(self) -> Fraction:
        return Fraction(len(self.retrieved_relevant), len(self.relevant))


def query_recall(results: Iterable[QueryResult]) -> Fraction | None:
    """Mean recall over queries that returned anything; None if none did."""
    returned = [r for r in results if r.ranked]
    if not returned:
        return None
    return sum((r.recall for r in returned), Fraction(0)) / len(returned)


def overall_recall(results: Iterable[QueryResult]) -> Fraction:
    """Mean recall over all queries, empty results counting zero."""
    results = list(results)
    if not results:
        raise ValueError("overall recall needs at least one query")
    return sum((r.recall if r.ranked else Fraction(0) for r in results), Fraction(0)) / len(results)


def _mean(values: list[Fraction]) -> Fraction | None:
    return sum(values, Fraction(0)) / len(values) if values else None


@dataclass
class MetricsReport:
    """Aggregate accuracy for one configuration.

    ``map_score`` and ``mrr`` average over the returned queries (those with a
    non-empty ranking), like ``qr``; they are None when nothing returned.
    ``map_all`` and ``mrr_all`` average over every query instead.
    """

    map_score: Fraction | None
    mrr: Fraction | None
    qr: Fraction | None
    or_: Fraction
    n_queries: int
    n_returned: int
    map_all: Fraction = Fraction(0)
    mrr_all: Fraction = Fraction(0)
    per_query: list[QueryResult] = field(default_factory=list)

    @classmethod
    def from_results(cls, results: Iterable[QueryResult]) -> "MetricsReport":
        results = sorted(results, key=lambda r: r.query_id)
        if not results:
            raise ValueError("no query results")
        ap = {r.query_id: average_precision(r.ranked, r.relevant) for r in results}
        rr = {r.query_id: reciprocal_rank(r.ranked, r.relevant) for r in results}
        returned = [r.query_id for r in results if r.ranked]
        return cls(
            map_score=_mean([ap[q] for q in returned]),
            mrr=_mean([rr[q] for q in returned]),
            qr=query_recall(results),
            or_=overall_recall(results),
            n_queries=len(results),
            n_returned=len(returned),
            map_all=_mean(list(ap.values())),
            mrr_all=_mean(list(rr.values())),
            per_query=results,
        )

    def to_dict(self) -> dict:
        def num(value: Fraction | None) -> float | None:
            return None if value is None else float(value)

        return {
            "MAP": num(self.map_score),
            "MRR": num(self.mrr),
            "QR": num(self.qr),
            "OR": float(self.or_),
            "MAP_all": float(self.map_all),
            "MRR_all": float(self.mrr_all),
            "n_queries": self.n_queries,
            "n_returned": self.n_returned,
        }


@dataclass(frozen=True)
class CorpusItem:
    id: str
    path: Path
    group: str


@dataclass
class GroundTruth:
    corpus: list[CorpusItem]
    relevance: dict[str, frozenset[str]]
    source_path: Path | None = None

    def item_ids(self) -> set[str]:
        return {item.id for item in self.corpus}


def load_truth(path: str | Path) -> GroundTruth:
    """Read a ground-truth manifest; corpus paths are relative to it."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise TruthError([f"cannot read {path}: {exc}"]) from None
    base = path.parent
    try:
        corpus = [CorpusItem(item["id"], base / item["path"], item["group"]) for item in raw["corpus"]]
        relevance = {qid: frozenset(items) for qid, items in raw["relevance"].items()}
    except (KeyError, TypeError) as exc:
        raise TruthError([f"{path}: malformed manifest ({exc})"]) from None
    return GroundTruth(corpus, relevance, path)


def bundled_truth_path() -> Path:
    return Path(str(resources.files("teddy") / "data" / "corpus" / "truth.json"))


def validate_truth(truth: GroundTruth, catalog: Catalog) -> list[str]:
    problems = []
    ids = [item.id for item in truth.corpus]
    known = set(ids)
    if len(known) != len(ids):
        problems.append("duplicate corpus item id")
    for item in truth.corpus:
        if item.group not in GROUPS:
            problems.append(f"{item.id}: unknown group {item.group!r}")
        if not item.path.is_file():
            problems.append(f"{item.id}: missing file {item.path}")
    for qid, items in sorted(truth.relevance.items()):
        if qid not in catalog:
            problems.append(f"{qid}: query not in catalog")
        for item in sorted(items - known):
            problems.append(f"{qid}: unknown corpus item {item}")
    for entry in catalog:
        if not truth.relevance.get(entry.id):
            problems.append(f"{entry.id}: query with empty relevant set")
    return problems


def evaluate(catalog: Catalog, truth: GroundTruth, config: ThresholdConfig) -> MetricsReport:
    """Query the indexed corpus with every catalog entry and score the ranking.

    Hits are folded to corpus items (first hit wins the rank) and the item
    list is cut at ``config.top_k``.
    """
    problems = validate_truth(truth, catalog)
    if problems:
        raise TruthError(problems)
    snippets = []
    for item in sorted(truth.corpus, key=lambda it: it.id):
        snippets.extend(extract_from_source(item.path.read_text(encoding="utf-8"), item.id))
    index = build_index(snippets, config)

    results = []
    for entry in catalog:
        hits = rank(hit for hit in score_all(index, entry_snippet(entry), config) if hit.qualifies)
        ranked: list[str] = []
        for hit in hits:
            item = hit.snippet.file_path
            if item not in ranked:
                ranked.append(item)
                if len(ranked) == config.top_k:
                    break
        results.append(QueryResult(entry.id, tuple(ranked), truth.relevance[entry.id]))
    return MetricsReport.from_results(results)


@dataclass
class SweepRow:
    name: str
    config: ThresholdConfig
    report: MetricsReport

    def to_dict(self) -> dict:
        return {"name": self.name, **self.config.to_dict(), **self.report.to_dict()}


def sweep(
    catalog: Catalog, truth: GroundTruth, configs: dict[str, ThresholdConfig] | Sequence[tuple[str, ThresholdConfig]]
) -> list[SweepRow]:
    pairs = list(configs.items()) if isinstance(configs, dict) else list(configs)
    if not pairs:
        raise ValueError("sweep needs at least one configuration")
    return [SweepRow(name, config, evaluate(catalog, truth, config)) for name, config in pairs]


def _fmt(value: Fraction | None) -> str:
    return "n/a" if value is None else f"{float(value):.2f}"


def render_table(rows: list[SweepRow]) -> str:
    header = ["", "Sim.", "T0", "T1", "T2", "T3", "MAP", "QR", "OR", "MRR"]
    body = [
        [
            row.name,
            row.config.measure.value,
            *(str(t) for t in row.config.thresholds),
            _fmt(row.report.map_score),
            _fmt(row.report.qr),
            _fmt(row.report.or_),
            _fmt(row.report.mrr),
        ]
        for row in rows
    ]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = []
    for r in [header, *body]:
        cells = [r[0].ljust(widths[0]), r[1].ljust(widths[1])]
        cells += [cell.rjust(widths[i]) for i, cell in enumerate(r[2:], start=2)]
        lines.append("  ".join(cells).rstrip())
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def render_json(rows: list[SweepRow]) -> str:
    return json.dumps([row.to_dict() for row in rows], indent=2) + "\n"
