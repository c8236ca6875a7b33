"""N-gram clone index with four-level threshold search."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .extract import Origin, Snippet
from .lexer import LexError, RepresentationSet, represent
from .similarity import Gram, containment, ngrams, token_set_ratio

log = logging.getLogger(__name__)

LEVELS = 4


class Measure(str, Enum):
    NTR = "NTR"
    TSR = "TSR"


@dataclass(frozen=True)
class ThresholdConfig:
    measure: Measure = Measure.NTR
    t0: int = 40
    t1: int = 40
    t2: int = 40
    t3: int = 40
    ngram_n: int = 4
    top_k: int = 10

    def __post_init__(self) -> None:
        object.__setattr__(self, "measure", Measure(self.measure))
        for value in self.thresholds:
            if not 0 <= value <= 100:
                raise ValueError(f"threshold {value} outside [0, 100]")
        if self.ngram_n < 1:
            raise ValueError("ngram_n must be >= 1")
        if self.top_k < 1:
            raise ValueError("top_k must be >= 1")

    @property
    def thresholds(self) -> tuple[int, int, int, int]:
        return (self.t0, self.t1, self.t2, self.t3)

    @classmethod
    def uniform(cls, measure: Measure | str, threshold: int, **kwargs) -> "ThresholdConfig":
        return cls(Measure(measure), threshold, threshold, threshold, threshold, **kwargs)

    def with_top_k(self, top_k: int) -> "ThresholdConfig":
        return replace(self, top_k=top_k)

    def to_dict(self) -> dict:
        return {
            "measure": self.measure.value,
            "t0": self.t0,
            "t1": self.t1,
            "t2": self.t2,
            "t3": self.t3,
            "ngram_n": self.ngram_n,
            "top_k": self.top_k,
        }


@dataclass(frozen=True)
class Document:
    """One indexed snippet with its precomputed representations."""

    doc_id: str
    snippet: Snippet
    reps: RepresentationSet
    grams: tuple[frozenset[Gram], ...]
    token_sets: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class SearchHit:
    doc_id: str
    scores: tuple[int, int, int, int]
    qualifies: bool
    snippet: Snippet | None = None

    @property
    def aggregate(self) -> Fraction:
        """Mean of the four level scores."""
        return Fraction(sum(self.scores), LEVELS)


@dataclass(frozen=True)
class SkippedSnippet:
    doc_id: str
    reason: str


@dataclass
class Index:
    ngram_n: int
    documents: list[Document] = field(default_factory=list)
    skipped: list[SkippedSnippet] = field(default_factory=list)
    # per level: gram -> positions in ``documents``
    postings: list[dict[Gram, list[int]]] = field(default_factory=lambda: [{} for _ in range(LEVELS)])

    def __len__(self) -> int:
        return len(self.documents)


def _document(doc_id: str, snippet: Snippet, reps: RepresentationSet, n: int) -> Document:
    return Document(
        doc_id,
        snippet,
        reps,
        tuple(ngrams(level, n) for level in reps.levels),
        tuple(frozenset(level) for level in reps.levels),
    )


def snippet_id(snippet: Snippet) -> str:
    if snippet.origin is Origin.CATALOG:
        return snippet.file_path
    return snippet.key


def build_index(
    snippets: Iterable[Snippet],
    config: ThresholdConfig,
    ids: Iterable[str] | None = None,
) -> Index:
    """Index snippets; unlexable or token-free ones are skipped and recorded.

    ``ids`` overrides the document ids (defaults to ``path:start-end``).
    """
    index = Index(config.ngram_n)
    snippets = list(snippets)
    doc_ids = list(ids) if ids is not None else [snippet_id(s) for s in snippets]
    if len(doc_ids) != len(snippets):
        raise ValueError("ids and snippets differ in length")
    for doc_id, snippet in zip(doc_ids, snippets):
        try:
            reps = represent(snippet.source_text)
        except LexError as exc:
            index.skipped.append(SkippedSnippet(doc_id, str(exc)))
            log.warning("skipping %s: %s", doc_id, exc)
            continue
        if not reps.r1:
            index.skipped.append(SkippedSnippet(doc_id, "no tokens"))
            continue
        position = len(index.documents)
        doc = _document(doc_id, snippet, reps, config.ngram_n)
        index.documents.append(doc)
        for level, grams in enumerate(doc.grams):
            postings = index.postings[level]
            for gram in grams:
                postings.setdefault(gram, []).append(position)
    return index


def score_levels(query: Document, doc: Document, measure: Measure) -> tuple[int, int, int, int]:
    if measure is Measure.NTR:
        return tuple(containment(q, d) for q, d in zip(query.grams, doc.grams))  # type: ignore[return-value]
    return tuple(token_set_ratio(q, d) for q, d in zip(query.token_sets, doc.token_sets))  # type: ignore[return-value]


def qualifies(scores: tuple[int, ...], config: ThresholdConfig) -> bool:
    return all(score >= t for score, t in zip(scores, config.thresholds))


def _candidates(index: Index, query: Document, config: ThresholdConfig) -> Iterable[int]:
    if not any(config.thresholds):
        return range(len(index.documents))
    found: set[int] = set()
    for level, grams in enumerate(query.grams):
        postings = index.postings[level]
        for gram in grams:
            found.update(postings.get(gram, ()))
    return sorted(found)


def score_all(index: Index, query: Snippet | str, config: ThresholdConfig) -> list[SearchHit]:
    """Score every candidate document; qualifying or not, unsorted."""
    if isinstance(query, str):
        query = Snippet(query, "<query>", 1, max(1, query.count("\n")), Origin.CATALOG)
    if config.ngram_n != index.ngram_n:
        raise ValueError(f"index built with n={index.ngram_n}, query uses n={config.ngram_n}")
    reps = represent(query.source_text)
    if not reps.r1:
        return []
    probe = _document("<query>", query, reps, config.ngram_n)
    hits = []
    for position in _candidates(index, probe, config):
        doc = index.documents[position]
        scores = score_levels(probe, doc, config.measure)
        hits.append(SearchHit(doc.doc_id, scores, qualifies(scores, config), doc.snippet))
    return hits


def rank(hits: Iterable[SearchHit]) -> list[SearchHit]:
    return sorted(hits, key=lambda hit: (-sum(hit.scores), hit.doc_id))


def search(index: Index, query: Snippet | str, config: ThresholdConfig) -> list[SearchHit]:
    """Qualifying hits by descending aggregate score, ties by id, top_k kept.

    Raises LexError if the query does not lex.
    """
    hits = [hit for hit in score_all(index, query, config) if hit.qualifies]
    return rank(hits)[: config.top_k]
