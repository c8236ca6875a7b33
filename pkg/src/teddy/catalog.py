"""Paired database of Pythonic (Py) and non-Pythonic (NPy) snippets.

A catalog is a directory holding ``catalog.json`` plus one ``.py`` file per
entry.  The manifest is a JSON array of objects with the keys ``id``,
``idiom_type``, ``label``, ``counterpart_id``, ``description``,
``snippet_file`` and ``provenance``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .extract import Origin, Snippet
from .lexer import LexError, tokenize

MANIFEST_NAME = "catalog.json"

IDIOM_TYPES = (
    "dictionary-comprehension",
    "enumerate",
    "file-reading-statement",
    "list-comprehension",
    "if-statement",
    "string-formatting",
    "set",
    "tuple",
    "variable-swapping",
    "code-formatting",
)


class Label(str, Enum):
    PY = "Py"
    NPY = "NPy"

    @property
    def opposite(self) -> "Label":
        return Label.NPY if self is Label.PY else Label.PY


class Provenance(str, Enum):
    ORIGINAL = "original"
    AUGMENTED = "augmented"


class CatalogError(Exception):
    """The catalog directory or manifest cannot be loaded."""


class CatalogValidationError(CatalogError):
    def __init__(self, violations: list["Violation"]) -> None:
        self.violations = violations
        lines = "; ".join(str(v) for v in violations)
        super().__init__(f"catalog failed validation: {lines}")


class EntryNotFound(KeyError):
    pass


@dataclass(frozen=True)
class IdiomEntry:
    id: str
    idiom_type: str
    label: Label
    counterpart_id: str
    description: str
    snippet: str
    provenance: Provenance = Provenance.ORIGINAL


@dataclass(frozen=True)
class Violation:
    entry_id: str
    rule: str
    detail: str = ""

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.entry_id} [{self.rule}]{suffix}"


@dataclass(frozen=True)
class Catalog:
    entries: tuple[IdiomEntry, ...]
    source_path: Path | None = None

    def __post_init__(self) -> None:
        by_id: dict[str, IdiomEntry] = {}
        for entry in self.entries:
            by_id.setdefault(entry.id, entry)
        object.__setattr__(self, "_by_id", by_id)

    def __iter__(self) -> Iterator[IdiomEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, entry_id: str) -> IdiomEntry:
        try:
            return self._by_id[entry_id]  # type: ignore[attr-defined]
        except KeyError:
            raise EntryNotFound(entry_id) from None

    def __contains__(self, entry_id: object) -> bool:
        return entry_id in self._by_id  # type: ignore[attr-defined]

    def with_label(self, label: Label) -> list[IdiomEntry]:
        return [entry for entry in self.entries if entry.label is label]


def counterpart(catalog: Catalog, entry_id: str) -> IdiomEntry:
    """The opposite-label entry paired with ``entry_id``."""
    return catalog.get(catalog.get(entry_id).counterpart_id)


def validate_catalog(catalog: Catalog) -> list[Violation]:
    violations: list[Violation] = []
    by_id: dict[str, IdiomEntry] = {}
    for entry in catalog.entries:
        if entry.id in by_id:
            violations.append(Violation(entry.id, "duplicate-id"))
        else:
            by_id[entry.id] = entry

    for entry in catalog.entries:
        if entry.idiom_type not in IDIOM_TYPES:
            violations.append(Violation(entry.id, "unknown-idiom-type", entry.idiom_type))
        if not entry.snippet.strip():
            violations.append(Violation(entry.id, "empty-snippet"))
        else:
            try:
                tokenize(entry.snippet)
            except LexError as exc:
                violations.append(
                    Violation(entry.id, "unlexable-snippet", f"line {exc.line}, column {exc.column}")
                )
        other = by_id.get(entry.counterpart_id)
        if other is None:
            violations.append(Violation(entry.id, "dangling-counterpart", entry.counterpart_id))
            continue
        if other.label is entry.label:
            violations.append(Violation(entry.id, "counterpart-same-label", other.id))
        if other.idiom_type != entry.idiom_type:
            violations.append(Violation(entry.id, "counterpart-type-mismatch", other.id))
        if other.counterpart_id != entry.id:
            violations.append(Violation(entry.id, "asymmetric-counterpart", other.id))

    labels_by_type: dict[str, set[Label]] = {}
    for entry in catalog.entries:
        labels_by_type.setdefault(entry.idiom_type, set()).add(entry.label)
    for idiom_type, labels in sorted(labels_by_type.items()):
        if len(labels) < 2:
            violations.append(Violation(idiom_type, "unpaired-type", f"only {next(iter(labels)).value}"))
    return violations


def _manifest_entry(raw: dict, base: Path) -> IdiomEntry:
    try:
        snippet_path = base / raw["snippet_file"]
        snippet = snippet_path.read_text(encoding="utf-8")
        return IdiomEntry(
            id=raw["id"],
            idiom_type=raw["idiom_type"],
            label=Label(raw["label"]),
            counterpart_id=raw["counterpart_id"],
            description=raw.get("description", ""),
            snippet=snippet,
            provenance=Provenance(raw.get("provenance", "original")),
        )
    except KeyError as exc:
        raise CatalogError(f"manifest entry {raw.get('id', '?')!r} is missing {exc}") from None
    except ValueError as exc:
        raise CatalogError(f"manifest entry {raw.get('id', '?')!r}: {exc}") from None
    except OSError as exc:
        raise CatalogError(f"cannot read snippet for {raw.get('id', '?')!r}: {exc}") from None


def load_catalog(path: str | Path, validate: bool = True) -> Catalog:
    """Load a catalog directory; raises CatalogValidationError on bad pairing."""
    base = Path(path)
    manifest = base / MANIFEST_NAME
    if not manifest.is_file():
        raise CatalogError(f"manifest not found: {manifest}")
    try:
        raw_entries = json.loads(manifest.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{manifest}: invalid JSON ({exc})") from None
    if not isinstance(raw_entries, list):
        raise CatalogError(f"{manifest}: expected a JSON array of entries")
    catalog = Catalog(tuple(_manifest_entry(raw, base) for raw in raw_entries), base)
    if validate:
        violations = validate_catalog(catalog)
        if violations:
            raise CatalogValidationError(violations)
    return catalog


def bundled_catalog_path() -> Path:
    return Path(str(resources.files("teddy") / "data" / "catalog"))


def load_bundled_catalog() -> Catalog:
    return load_catalog(bundled_catalog_path())


def types_present(entries: Iterable[IdiomEntry]) -> list[str]:
    seen = {entry.idiom_type for entry in entries}
    return [t for t in IDIOM_TYPES if t in seen]


def entry_snippet(entry: IdiomEntry) -> Snippet:
    """The entry's source as a snippet whose path is the entry id."""
    lines = max(1, len(entry.snippet.splitlines()))
    return Snippet(entry.snippet, entry.id, 1, lines, Origin.CATALOG)
